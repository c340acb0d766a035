#include "freestar/rewrite.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace freestar {

struct RewritingSystem::Cache {
    std::mutex mutex;
    std::unordered_map<Word, Word> normal_forms;
};

RewritingSystem::RewritingSystem(SchemaKind kind, unsigned rank, unsigned bound)
    : kind_(kind), rank_(rank), bound_(bound), cache_(std::make_shared<Cache>()) {
    if (rank_ == 0 || rank_ > kMaxRank) throw std::invalid_argument("RewritingSystem: bad rank");
}

RewritingSystem RewritingSystem::r1() { return RewritingSystem(SchemaKind::R1, 1, 0); }

RewritingSystem RewritingSystem::r1_bounded(unsigned max_index) {
    if (max_index == 0) throw std::invalid_argument("r1_bounded: bound must be >= 1");
    return RewritingSystem(SchemaKind::R1Bounded, 1, max_index);
}

RewritingSystem RewritingSystem::rstar(unsigned rank) {
    return RewritingSystem(SchemaKind::RStar, rank, 0);
}

std::string RewritingSystem::name() const {
    switch (kind_) {
        case SchemaKind::R1: return "r1";
        case SchemaKind::R1Bounded: return "r1(n<=" + std::to_string(bound_) + ")";
        case SchemaKind::RStar: return "rstar(r=" + std::to_string(rank_) + ")";
    }
    return "?";
}

bool RewritingSystem::lhs_at(const Word& w, std::size_t pos, std::size_t len) const {
    if (len == 0 || len % 3 != 0 || pos + len > w.size()) return false;
    const std::size_t m = len / 3;
    switch (kind_) {
        case SchemaKind::R1Bounded:
            if (m > bound_) return false;
            [[fallthrough]];
        case SchemaKind::R1: {
            const Letter x = w[pos];
            if (x.generator() != 0) return false;
            const Letter xs = x.partner();
            for (std::size_t t = 0; t < m; ++t) {
                if (w[pos + t] != x) return false;
                if (w[pos + m + t] != xs) return false;
                if (w[pos + 2 * m + t] != x) return false;
            }
            return true;
        }
        case SchemaKind::RStar: {
            // u u* u with |u| = m; u*[t] = partner(u[m-1-t]).
            for (std::size_t t = 0; t < m; ++t) {
                if (w[pos + 2 * m + t] != w[pos + t]) return false;
                if (w[pos + m + t] != w[pos + m - 1 - t].partner()) return false;
            }
            return true;
        }
    }
    return false;
}

bool RewritingSystem::suffix_completes_lhs(const Word& w) const {
    for (std::size_t len = 3; len <= w.size(); len += 3)
        if (lhs_at(w, w.size() - len, len)) return true;
    return false;
}

std::optional<Redex> RewritingSystem::leftmost_redex(const Word& w) const {
    for (std::size_t pos = 0; pos < w.size(); ++pos)
        for (std::size_t len = 3; len <= w.size() - pos; len += 3)
            if (lhs_at(w, pos, len)) return Redex{pos, len};
    return std::nullopt;
}

bool RewritingSystem::is_irreducible(const Word& w) const {
    return !leftmost_redex(w).has_value();
}

Word RewritingSystem::rhs_for(const Word& w, std::size_t pos, std::size_t len) const {
    // Every family rewrites an lhs to its first third.
    return w.subword(pos, len / 3);
}

Word RewritingSystem::normal_form(const Word& w) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->normal_forms.find(w);
        if (it != cache_->normal_forms.end()) return it->second;
    }
    Word cur = w;
    while (auto redex = leftmost_redex(cur))
        cur = apply_redex(*this, cur, *redex);
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        cache_->normal_forms.emplace(w, cur);
    }
    return cur;
}

Word RewritingSystem::multiply(const Word& a, const Word& b) const {
    return normal_form(a + b);
}

namespace {

// Every family in scope is strictly length-reducing with matching first and
// last letters across the rule.
Rule make_rule(Word lhs, Word rhs) {
    if (lhs.size() <= rhs.size() || rhs.empty() || lhs[0] != rhs[0] ||
        lhs[lhs.size() - 1] != rhs[rhs.size() - 1])
        throw std::logic_error("make_rule: rule family invariant violated");
    return Rule{std::move(lhs), std::move(rhs)};
}

}  // namespace

std::vector<Rule> RewritingSystem::rules_upto(std::size_t max_lhs) const {
    std::vector<Rule> rules;
    switch (kind_) {
        case SchemaKind::R1:
        case SchemaKind::R1Bounded: {
            const Letter a(0, false), as(0, true);
            for (std::size_t n = 1; 3 * n <= max_lhs; ++n) {
                if (kind_ == SchemaKind::R1Bounded && n > bound_) break;
                const Word an = Word::repeated(a, n), asn = Word::repeated(as, n);
                rules.push_back(make_rule(an + asn + an, an));
                rules.push_back(make_rule(asn + an + asn, asn));
            }
            break;
        }
        case SchemaKind::RStar: {
            // All w w* w with 3|w| <= max_lhs; depth-first over the alphabet.
            std::vector<Word> frontier{Word{}};
            for (std::size_t m = 1; 3 * m <= max_lhs; ++m) {
                std::vector<Word> next;
                for (const Word& u : frontier)
                    for (unsigned c = 0; c < 2 * rank_; ++c)
                        next.push_back(u.appended(Letter::from_code(static_cast<std::uint8_t>(c))));
                for (const Word& u : next) rules.push_back(make_rule(u + u.star() + u, u));
                frontier = std::move(next);
            }
            break;
        }
    }
    std::sort(rules.begin(), rules.end(),
              [](const Rule& x, const Rule& y) { return x.lhs < y.lhs; });
    return rules;
}

namespace {

void irreducible_dfs(const RewritingSystem& sys, Word& w, std::size_t max_len,
                     std::vector<Word>& out) {
    out.push_back(w);
    if (w.size() >= max_len) return;
    for (unsigned c = 0; c < 2 * sys.rank(); ++c) {
        Word next = w.appended(Letter::from_code(static_cast<std::uint8_t>(c)));
        if (sys.suffix_completes_lhs(next)) continue;
        irreducible_dfs(sys, next, max_len, out);
    }
}

}  // namespace

std::vector<Word> irreducible_words(const RewritingSystem& sys, std::size_t max_len) {
    std::vector<Word> out;
    Word root;
    irreducible_dfs(sys, root, max_len, out);
    return out;
}

std::vector<Redex> all_redexes(const RewritingSystem& sys, const Word& w) {
    std::vector<Redex> out;
    for (std::size_t pos = 0; pos < w.size(); ++pos)
        for (std::size_t len = 3; len <= w.size() - pos; len += 3)
            if (sys.lhs_at(w, pos, len)) out.push_back(Redex{pos, len});
    return out;
}

Word apply_redex(const RewritingSystem& sys, const Word& w, const Redex& r) {
    return w.prefix(r.pos) + sys.rhs_for(w, r.pos, r.len) + w.suffix_from(r.pos + r.len);
}

Word reduce_rightmost(const RewritingSystem& sys, Word w) {
    for (;;) {
        auto redexes = all_redexes(sys, w);
        if (redexes.empty()) return w;
        w = apply_redex(sys, w, redexes.back());
    }
}

Word reduce_random(const RewritingSystem& sys, Word w, std::mt19937& rng) {
    for (;;) {
        auto redexes = all_redexes(sys, w);
        if (redexes.empty()) return w;
        std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
        w = apply_redex(sys, w, redexes[pick(rng)]);
    }
}

std::vector<CriticalPair> critical_pairs(const RewritingSystem& sys, std::size_t maxlen) {
    if (maxlen < 3) throw std::invalid_argument("critical_pairs: maxlen must be >= 3");
    const std::vector<Rule> rules = sys.rules_upto(maxlen);
    std::vector<CriticalPair> pairs;

    auto emit = [&](Word overlap, Redex left, Redex right) {
        CriticalPair cp;
        cp.overlap = std::move(overlap);
        cp.redex_left = left;
        cp.redex_right = right;
        cp.branch_left = apply_redex(sys, cp.overlap, left);
        cp.branch_right = apply_redex(sys, cp.overlap, right);
        cp.resolved = sys.normal_form(cp.branch_left) == sys.normal_form(cp.branch_right);
        pairs.push_back(std::move(cp));
    };

    for (const Rule& r1 : rules) {
        for (const Rule& r2 : rules) {
            const std::size_t n1 = r1.lhs.size(), n2 = r2.lhs.size();
            // Proper overlaps: a suffix of r1.lhs equals a prefix of r2.lhs.
            for (std::size_t o = 1; o < std::min(n1, n2); ++o) {
                if (n1 + n2 - o > maxlen) continue;
                if (r1.lhs.suffix_from(n1 - o) != r2.lhs.prefix(o)) continue;
                Word overlap = r1.lhs + r2.lhs.suffix_from(o);
                emit(std::move(overlap), Redex{0, n1}, Redex{n1 - o, n2});
            }
            // Containment of r2.lhs in r1.lhs; p = 0 with r1 == r2 is the
            // trivial self-superposition, counted once.
            if (n2 > n1) continue;
            if (n1 > maxlen) continue;
            for (std::size_t p = 0; p + n2 <= n1; ++p) {
                if (r1.lhs.subword(p, n2) != r2.lhs) continue;
                if (n1 == n2 && p == 0 && !(r1.lhs == r2.lhs)) continue;  // cannot happen
                emit(r1.lhs, Redex{0, n1}, Redex{p, n2});
            }
        }
    }
    return pairs;
}

EquivalenceReport verify_schema_equivalence(std::size_t max_len) {
    const RewritingSystem r1 = RewritingSystem::r1();
    const RewritingSystem rs = RewritingSystem::rstar(1);
    EquivalenceReport report;
    report.max_len = max_len;

    // All rank-1 words of length 0..max_len, in shortlex order.
    std::vector<Word> level{Word{}};
    for (std::size_t len = 0; len <= max_len; ++len) {
        for (const Word& w : level) {
            ++report.words_checked;
            const Word www = w + w.star() + w;
            const Word nf1 = r1.normal_form(www);
            const Word nfs = rs.normal_form(www);
            if (nf1 != nfs || nf1 != r1.normal_form(w))
                report.normal_form_mismatches.push_back(w);
            if (r1.is_irreducible(w) && nf1 != w)
                report.irreducible_not_fixed.push_back(w);
        }
        if (len == max_len) break;
        std::vector<Word> next;
        next.reserve(level.size() * 2);
        for (const Word& w : level) {
            next.push_back(w.appended(Letter(0, false)));
            next.push_back(w.appended(Letter(0, true)));
        }
        level = std::move(next);
    }
    return report;
}

}  // namespace freestar
