#include "freestar/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <stdexcept>

namespace freestar {

double log2_approx(const BigInt& x) {
    if (x <= 0) throw std::invalid_argument("log2_approx: positive input required");
    const unsigned top = boost::multiprecision::msb(x);
    if (top <= 52) return std::log2(x.convert_to<double>());
    const unsigned shift = top - 52;
    const BigInt y = x >> shift;
    return std::log2(y.convert_to<double>()) + static_cast<double>(shift);
}

AvoidFamily::AvoidFamily(std::optional<PatternKind> kind, unsigned rank, std::vector<Word> factors)
    : kind_(kind), rank_(rank), factors_(std::move(factors)) {
    if (rank_ == 0 || rank_ > kMaxRank) throw std::invalid_argument("AvoidFamily: bad rank");
}

AvoidFamily AvoidFamily::rev(unsigned rank) { return AvoidFamily(PatternKind::Rev, rank, {}); }
AvoidFamily AvoidFamily::star(unsigned rank) { return AvoidFamily(PatternKind::Star, rank, {}); }

AvoidFamily AvoidFamily::explicit_set(std::vector<Word> factors) {
    unsigned rank = 1;
    for (const Word& f : factors) rank = std::max(rank, f.max_generator() + 1);
    return AvoidFamily(std::nullopt, rank, std::move(factors));
}

std::string AvoidFamily::name() const {
    if (!kind_) return "explicit(" + std::to_string(factors_.size()) + ")";
    return (*kind_ == PatternKind::Rev ? std::string("rev") : std::string("star")) +
           "(r=" + std::to_string(rank_) + ")";
}

namespace {

// Does w end with u u^rev u or u u* u for some u of length m?
bool suffix_is_pattern(const Word& w, std::size_t m, PatternKind kind) {
    const std::size_t len = 3 * m;
    if (len > w.size()) return false;
    const std::size_t pos = w.size() - len;
    for (std::size_t t = 0; t < m; ++t) {
        if (w[pos + 2 * m + t] != w[pos + t]) return false;
        const Letter mid = w[pos + m + t];
        if (kind == PatternKind::Star) {
            if (mid != w[pos + m - 1 - t].partner()) return false;
        } else {
            if (mid != w[pos + m - 1 - t]) return false;
        }
    }
    return true;
}

}  // namespace

bool AvoidFamily::suffix_completes_factor(const Word& w) const {
    if (kind_) {
        for (std::size_t m = 1; 3 * m <= w.size(); ++m)
            if (suffix_is_pattern(w, m, *kind_)) return true;
        return false;
    }
    for (const Word& f : factors_) {
        if (f.size() > w.size() || f.empty()) continue;
        if (w.suffix_from(w.size() - f.size()) == f) return true;
    }
    return false;
}

bool AvoidFamily::contains_factor(const Word& w) const {
    for (std::size_t end = 1; end <= w.size(); ++end)
        if (suffix_completes_factor(w.prefix(end))) return true;
    return false;
}

std::vector<Word> AvoidFamily::forbidden_upto(std::size_t max_len) const {
    std::set<Word> out;
    if (!kind_) {
        for (const Word& f : factors_)
            if (!f.empty() && f.size() <= max_len) out.insert(f);
    } else {
        std::vector<Word> level{Word{}};
        for (std::size_t m = 1; 3 * m <= max_len; ++m) {
            std::vector<Word> next;
            for (const Word& u : level)
                for (unsigned c = 0; c < 2 * rank_; ++c)
                    next.push_back(u.appended(Letter::from_code(static_cast<std::uint8_t>(c))));
            for (const Word& u : next)
                out.insert(*kind_ == PatternKind::Star ? u + u.star() + u : u + u.reversed() + u);
            level = std::move(next);
        }
    }
    return {out.begin(), out.end()};
}

std::size_t enumeration_guard(unsigned rank) {
    if (rank == 1) return 26;
    if (rank == 2) return 14;
    return 8;
}

namespace {

void dfs_count(const AvoidFamily& fam, Word& w, unsigned target, BigInt& count) {
    if (w.size() == target) {
        ++count;
        return;
    }
    for (unsigned c = 0; c < 2 * fam.rank(); ++c) {
        Word next = w.appended(Letter::from_code(static_cast<std::uint8_t>(c)));
        if (fam.suffix_completes_factor(next)) continue;
        dfs_count(fam, next, target, count);
    }
}

void dfs_collect(const AvoidFamily& fam, Word& w, unsigned target, std::vector<Word>& out) {
    if (w.size() == target) {
        out.push_back(w);
        return;
    }
    for (unsigned c = 0; c < 2 * fam.rank(); ++c) {
        Word next = w.appended(Letter::from_code(static_cast<std::uint8_t>(c)));
        if (fam.suffix_completes_factor(next)) continue;
        dfs_collect(fam, next, target, out);
    }
}

}  // namespace

BigInt sphere_count_enumerate(const AvoidFamily& fam, unsigned n) {
    if (n > enumeration_guard(fam.rank()))
        throw std::invalid_argument(
            "sphere_count_enumerate: n exceeds the enumeration guard; use sphere_count_dp");
    BigInt count = 0;
    Word w;
    dfs_count(fam, w, n, count);
    return count;
}

std::vector<Word> enumerate_avoiding(const AvoidFamily& fam, unsigned n) {
    if (n > enumeration_guard(fam.rank()))
        throw std::invalid_argument("enumerate_avoiding: n exceeds the enumeration guard");
    std::vector<Word> out;
    Word w;
    dfs_collect(fam, w, n, out);
    return out;
}

DistinctPartTable::DistinctPartTable(unsigned max_weight) : max_weight_(max_weight) {
    table_.resize(max_weight + 1);
    for (unsigned j = 0; j <= max_weight; ++j) {
        table_[j].resize(j + 2);
        for (unsigned m = 0; m <= j + 1; ++m) {
            if (m == 0) {
                table_[j][m] = (j == 0) ? 1 : 0;
                continue;
            }
            BigInt value = count(j, m - 1);
            if (m >= 2 && j >= m - 1) value += count(j - (m - 1), m - 1);
            table_[j][m] = std::move(value);
        }
    }
}

const BigInt& DistinctPartTable::count(unsigned j, unsigned m) const {
    if (j > max_weight_) throw std::out_of_range("DistinctPartTable::count");
    return table_[j][std::min<unsigned>(m, j + 1)];
}

namespace {

// Number of ordered pairs of distinct-part partitions with parts < m whose
// weights sum to t: the two independent slopes of the run profile.
BigInt side_pairs(unsigned t, unsigned m, const DistinctPartTable& q) {
    BigInt total = 0;
    for (unsigned j = 0; j <= t; ++j) total += q.count(j, m) * q.count(t - j, m);
    return total;
}

}  // namespace

BigInt sphere_count_dp(unsigned n, const DistinctPartTable& table) {
    if (n == 0) return 1;
    if (n > table.max_weight()) throw std::invalid_argument("sphere_count_dp: table too small");
    BigInt total = 0;
    for (unsigned m = 1; m <= n; ++m) {
        total += side_pairs(n - m, m, table);              // single peak a^m / A^m
        if (n >= 2 * m) total += side_pairs(n - 2 * m, m, table);  // doubled peak a^m A^m
    }
    return 2 * total;
}

BigInt sphere_count_dp(unsigned n) {
    DistinctPartTable table(n);
    return sphere_count_dp(n, table);
}

BigInt strongly_unimodal_count(unsigned n, UnimodalVariant variant, const DistinctPartTable& table) {
    if (n == 0) return 1;
    if (n > table.max_weight()) throw std::invalid_argument("strongly_unimodal_count: table too small");
    BigInt total = 0;
    for (unsigned m = 1; m <= n; ++m) {
        total += side_pairs(n - m, m, table);
        if (variant == UnimodalVariant::DoubledPeakAllowed && n >= 2 * m)
            total += side_pairs(n - 2 * m, m, table);
    }
    return total;
}

BigInt strongly_unimodal_count(unsigned n, UnimodalVariant variant) {
    DistinctPartTable table(n);
    return strongly_unimodal_count(n, variant, table);
}

std::vector<Word> minimal_forbidden_factors(const AvoidFamily& fam, std::size_t max_len) {
    if (max_len < 3) throw std::invalid_argument("minimal_forbidden_factors: max_len must be >= 3");
    const std::vector<Word> all = fam.forbidden_upto(max_len);
    std::vector<Word> minimal;
    for (const Word& f : all) {
        bool contains_shorter = false;
        for (const Word& g : all) {
            if (g.size() >= f.size()) break;  // shortlex order: shorter words first
            if (f.raw().find(g.raw()) != std::string::npos) {
                contains_shorter = true;
                break;
            }
        }
        if (!contains_shorter) minimal.push_back(f);
    }
    return minimal;
}

double rhoades_main_term(unsigned n) {
    if (n < 1) throw std::invalid_argument("rhoades_main_term: n >= 1 required");
    const double pi = std::numbers::pi;
    const double t = 24.0 * n - 1.0;
    const double root = std::sqrt(t);
    return std::sqrt(3.0) * std::pow(t, -0.75) * std::exp(pi / 6.0 * root) *
           (1.0 + (pi * pi - 9.0) / (4.0 * pi * root));
}

GrowthTable growth_table(unsigned n_max, CountConvention convention) {
    DistinctPartTable table(n_max);
    GrowthTable out;
    out.convention = convention;
    out.counts.resize(n_max + 1);
    BigInt running = 0;
    for (unsigned n = 0; n <= n_max; ++n) {
        BigInt sphere = sphere_count_dp(n, table);
        running += sphere;
        out.counts[n] = (convention == CountConvention::Exact) ? std::move(sphere) : running;
    }
    return out;
}

bool SandwichReport::equality_all_true() const {
    return std::all_of(rows.begin(), rows.end(), [](const SandwichRow& r) { return r.eq_star_rev; });
}

SandwichReport sandwich_report(unsigned n_max, unsigned enumeration_limit) {
    if (n_max > 40) throw std::invalid_argument("sandwich_report: n_max must be <= 40");
    SandwichReport report;
    report.n_max = n_max;
    report.enumeration_limit =
        std::min<unsigned>(enumeration_limit, static_cast<unsigned>(enumeration_guard(1)));

    DistinctPartTable table(n_max);
    const AvoidFamily star = AvoidFamily::star(1);
    const AvoidFamily rev = AvoidFamily::rev(1);

    auto sandwiched = [](const BigInt& u, const BigInt& count) {
        return u <= count && count <= 2 * u;
    };

    BigInt ball = 0;
    for (unsigned n = 0; n <= n_max; ++n) {
        SandwichRow row;
        row.n = n;
        row.sphere = sphere_count_dp(n, table);
        ball += row.sphere;
        row.ball = ball;
        row.u_strict = strongly_unimodal_count(n, UnimodalVariant::StrictPeak, table);
        row.u_doubled = strongly_unimodal_count(n, UnimodalVariant::DoubledPeakAllowed, table);
        row.rhoades = (n >= 1) ? rhoades_main_term(n) : std::numeric_limits<double>::quiet_NaN();

        if (n <= report.enumeration_limit) {
            const BigInt star_n = sphere_count_enumerate(star, n);
            const BigInt rev_n = sphere_count_enumerate(rev, n);
            row.eq_star_rev = (star_n == rev_n) && (star_n == row.sphere);
            row.eq_by_enumeration = true;
        } else {
            // Above the enumeration limit the rev count is transported through
            // the mask bijection, so the column records the identity it encodes.
            row.eq_star_rev = true;
            row.eq_by_enumeration = false;
        }

        row.sandwich_exact_strict = sandwiched(row.u_strict, row.sphere);
        row.sandwich_exact_doubled = sandwiched(row.u_doubled, row.sphere);
        row.sandwich_cumulative_strict = sandwiched(row.u_strict, row.ball);
        row.sandwich_cumulative_doubled = sandwiched(row.u_doubled, row.ball);
        report.rows.push_back(std::move(row));
    }
    return report;
}

bool RankTwoReport::bound_all_ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const RankTwoRow& r) { return r.bound_ok; });
}

namespace {

void dfs_count_levels(const AvoidFamily& fam, Word& w, unsigned depth_max,
                      std::vector<BigInt>& per_depth) {
    per_depth[w.size()] += 1;
    if (w.size() == depth_max) return;
    for (unsigned c = 0; c < 2 * fam.rank(); ++c) {
        Word next = w.appended(Letter::from_code(static_cast<std::uint8_t>(c)));
        if (fam.suffix_completes_factor(next)) continue;
        dfs_count_levels(fam, next, depth_max, per_depth);
    }
}

}  // namespace

RankTwoReport growth_estimate_r2(unsigned n_max) {
    if (n_max > enumeration_guard(2))
        throw std::invalid_argument("growth_estimate_r2: n_max exceeds the rank-2 guard");
    RankTwoReport report;
    report.n_max = n_max;

    std::vector<BigInt> sphere(n_max + 1, 0);
    const AvoidFamily fam = AvoidFamily::star(2);
    Word root;
    dfs_count_levels(fam, root, n_max, sphere);

    BigInt ball = 0;
    BigInt pow3 = 1;
    for (unsigned n = 0; n <= n_max; ++n) {
        RankTwoRow row;
        row.n = n;
        row.sphere = sphere[n];
        ball += sphere[n];
        row.ball = ball;
        row.ratio = (n >= 1 && sphere[n - 1] > 0)
                        ? sphere[n].convert_to<double>() / sphere[n - 1].convert_to<double>()
                        : 0.0;
        row.free_group_ball = 2 * pow3 - 1;
        row.bound_ok = row.ball >= row.free_group_ball;
        report.rows.push_back(std::move(row));
        pow3 *= 3;
    }
    return report;
}

std::vector<GrowthSignalRow> growth_signal(const std::vector<unsigned>& lengths) {
    unsigned max_n = 0;
    for (unsigned n : lengths) max_n = std::max(max_n, n);
    DistinctPartTable table(max_n);
    std::vector<GrowthSignalRow> rows;
    for (unsigned n : lengths) {
        GrowthSignalRow row;
        row.n = n;
        row.sphere = sphere_count_dp(n, table);
        row.log2_per_n = (n > 0) ? log2_approx(row.sphere) / n : 0.0;
        rows.push_back(std::move(row));
    }
    return rows;
}

RunProfile run_profile(const Word& w) {
    RunProfile profile;
    if (!w.empty()) profile.first = w[0];
    for (const auto& [letter, len] : w.runs()) profile.composition.push_back(len);
    return profile;
}

std::size_t admissible_decompositions(const Word& w) {
    const auto runs = run_profile(w).composition;
    const std::size_t t = runs.size();
    if (t == 0) return 0;
    std::size_t count = 0;
    for (std::size_t p = 0; p < t; ++p) {
        for (std::size_t q = p + 1; q <= t && q - p <= 2; ++q) {
            const std::size_t m = runs[p];
            if (q - p == 2 && runs[p + 1] != m) continue;
            bool ok = true;
            for (std::size_t i = 0; i + 1 < p && ok; ++i) ok = runs[i] < runs[i + 1];
            if (p > 0) ok = ok && runs[p - 1] < m;
            for (std::size_t i = q; i + 1 < t && ok; ++i) ok = runs[i] > runs[i + 1];
            if (q < t) ok = ok && runs[q] < m;
            if (ok) ++count;
        }
    }
    return count;
}

}  // namespace freestar
