#include "freestar/verification.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "json.hpp"

#include "freestar/growth.hpp"
#include "freestar/homology.hpp"
#include "freestar/resolution.hpp"
#include "freestar/rewrite.hpp"

namespace freestar {

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
    std::vector<CheckResult> results;

    template <class Fn>
    void run(int id, const std::string& name, Fn&& fn) {
        CheckResult r;
        r.id = id;
        r.name = name;
        const auto start = Clock::now();
        try {
            std::ostringstream detail;
            r.passed = fn(detail);
            r.detail = detail.str();
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        results.push_back(std::move(r));
    }
};

Word an(unsigned n) { return Word::repeated(Letter(0, false), n); }
Word An(unsigned n) { return Word::repeated(Letter(0, true), n); }

// 1. Every critical pair of r1 up to the stated overlap length resolves.
bool check_confluence(std::ostream& detail, bool fast) {
    const std::size_t maxlen = fast ? 12 : 18;
    const auto start = Clock::now();
    const auto pairs = critical_pairs(RewritingSystem::r1(), maxlen);
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    std::size_t unresolved = 0;
    for (const auto& cp : pairs)
        if (!cp.resolved) ++unresolved;
    detail << pairs.size() << " pairs up to overlap length " << maxlen << ", " << unresolved
           << " unresolved, " << elapsed << "s";
    return unresolved == 0 && elapsed < 60.0;
}

// 2. r1 and rstar(1) agree on w w* w, and irreducible words are recovered.
bool check_equivalence(std::ostream& detail, bool fast) {
    const std::size_t max_len = fast ? 6 : 8;
    const auto report = verify_schema_equivalence(max_len);
    detail << report.words_checked << " words up to length " << max_len << ", "
           << report.normal_form_mismatches.size() << " normal-form mismatches, "
           << report.irreducible_not_fixed.size() << " irreducible words not fixed";
    return report.passed();
}

// 3. The mask maps the star-avoiding sphere bijectively onto the rev-avoiding
//    sphere at every length.
bool check_bijection(std::ostream& detail, bool fast) {
    const unsigned n_max = fast ? 12 : 16;
    const AvoidFamily star = AvoidFamily::star(1), rev = AvoidFamily::rev(1);
    const MaskWord omega = MaskWord::omega();
    for (unsigned n = 0; n <= n_max; ++n) {
        const auto star_words = enumerate_avoiding(star, n);
        const auto rev_words = enumerate_avoiding(rev, n);
        if (star_words.size() != rev_words.size()) {
            detail << "count mismatch at n=" << n;
            return false;
        }
        std::set<Word> image;
        for (const Word& w : star_words) image.insert(phi_mask(omega, w));
        const std::set<Word> rev_set(rev_words.begin(), rev_words.end());
        if (image.size() != star_words.size() || image != rev_set) {
            detail << "phi image differs from the rev-avoiding set at n=" << n;
            return false;
        }
    }
    detail << "bijective with equal counts for all n <= " << n_max;
    return true;
}

// 4. Polynomial count equals enumeration, anchors included.
bool check_dp_agreement(std::ostream& detail, bool fast) {
    const unsigned n_max = fast ? 16 : 22;
    const AvoidFamily star = AvoidFamily::star(1);
    DistinctPartTable table(n_max);
    for (unsigned n = 0; n <= n_max; ++n) {
        const BigInt dp = sphere_count_dp(n, table);
        const BigInt brute = sphere_count_enumerate(star, n);
        if (dp != brute) {
            detail << "dp(" << n << ")=" << dp << " vs enumerate=" << brute;
            return false;
        }
        if ((n == 3 && dp != 6) || (n == 4 && dp != 10)) {
            detail << "anchor mismatch at n=" << n << ": " << dp;
            return false;
        }
    }
    detail << "dp == enumeration for all n <= " << n_max << ", anchors s(3)=6, s(4)=10";
    return true;
}

// 5. The minimal forbidden factor list for rev up to length 9.
bool check_minimal_factors(std::ostream& detail, bool) {
    const auto got = minimal_forbidden_factors(AvoidFamily::rev(1), 9);
    const std::vector<std::string> expected{"000", "111", "011001",
                                            "100110", "010010010", "101101101"};
    std::vector<std::string> got_bits;
    for (const Word& w : got) got_bits.push_back(w.bits());
    std::sort(got_bits.begin(), got_bits.end());
    std::vector<std::string> want = expected;
    std::sort(want.begin(), want.end());
    if (got_bits != want) {
        detail << "got {";
        for (const auto& s : got_bits) detail << s << ' ';
        detail << "}";
        return false;
    }
    detail << "exactly {000, 111, 011001, 100110, 010010010, 101101101}";
    return true;
}

// 6. Subexponential growth signal with exact integers at n up to 900.
bool check_growth_signal(std::ostream& detail, bool) {
    const auto start = Clock::now();
    const std::vector<unsigned> lengths{100, 200, 400, 900};
    const auto rows = growth_signal(lengths);
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();

    bool decreasing = true;
    for (std::size_t i = 1; i < rows.size(); ++i)
        decreasing = decreasing && rows[i].log2_per_n < rows[i - 1].log2_per_n;

    const GrowthSignalRow& last = rows.back();
    BigInt nine_hundred_pow8 = 1;
    for (int i = 0; i < 8; ++i) nine_hundred_pow8 *= 900;
    const bool small_rate = last.log2_per_n < 0.2;
    const bool huge_count = last.sphere > nine_hundred_pow8;

    detail << "log2 s(n)/n = ";
    for (const auto& r : rows) detail << r.log2_per_n << " ";
    detail << "(decreasing=" << decreasing << "), s(900) > 900^8: " << huge_count << ", "
           << elapsed << "s";
    return decreasing && small_rate && huge_count && elapsed < 10.0;
}

// 7. The sandwich report generates under all four pairings with the equality
//    column all-true; no pairing is asserted.
bool check_sandwich(std::ostream& detail, bool fast) {
    const unsigned n_max = fast ? 24 : 40;
    const unsigned enum_limit = fast ? 16 : 22;
    const auto report = sandwich_report(n_max, enum_limit);
    const bool eq = report.equality_all_true();
    std::size_t enumerated = 0;
    for (const auto& r : report.rows)
        if (r.eq_by_enumeration) ++enumerated;
    detail << report.rows.size() << " rows, equality all-true: " << eq << " (" << enumerated
           << " rows enumerated)";
    return eq;
}

// 8. Chain condition and the contracting homotopy identity at truncation 5.
bool check_resolution(std::ostream& detail, bool fast) {
    const unsigned N = fast ? 3 : 5;
    const std::size_t homotopy_budget = fast ? 8 : 10;
    Resolution res(RewritingSystem::r1(), Truncation{N, 4});

    std::size_t chain_checked = 0;
    for (unsigned dim = 2; dim <= 4; ++dim) {
        for (const Cell& c : res.cells_dim(dim)) {
            if (!res.boundary_applied(res.boundary(c)).is_zero()) {
                detail << "d d != 0 at " << c.str();
                return false;
            }
            ++chain_checked;
        }
    }

    std::size_t homotopy_checked = 0;
    const auto translates = irreducible_words(res.system(), homotopy_budget);
    for (unsigned dim = 1; dim <= 2; ++dim) {
        for (const Cell& c : res.cells_dim(dim)) {
            if (c.total_length() > homotopy_budget) continue;
            for (const Word& x : translates) {
                if (c.total_length() + x.size() > homotopy_budget) continue;
                const ModuleElement b = ModuleElement::basis(c, x);
                ModuleElement lhs = res.boundary_applied(res.homotopy(c, x));
                lhs += res.homotopy_applied(res.boundary(c).acted(x, res.system()));
                if (!(lhs == b)) {
                    detail << "d i + i d != id at " << c.str() << " % "
                           << (x.empty() ? "1" : x.text());
                    return false;
                }
                ++homotopy_checked;
            }
        }
    }
    detail << "d d = 0 on " << chain_checked << " cells, d i + i d = id on " << homotopy_checked
           << " basis elements, N=" << N;
    return true;
}

// 9. Lemma formulas equal the generic recursion term for term.
bool check_closed_forms(std::ostream& detail, bool fast) {
    const unsigned N = fast ? 3 : 5;
    Resolution res(RewritingSystem::r1(), Truncation{N, 4});

    std::vector<Cell> named;
    for (unsigned i = 1; i <= N; ++i) {
        for (bool st : {false, true}) {
            named.push_back(x_cell(i, st));
            named.push_back(type_one_cell(i, st));
            named.push_back(theta_one_cell(i, st));
            for (unsigned j = 1; j < i; ++j) {
                named.push_back(type_two_cell(i, j, st));
                named.push_back(theta_two_cell(i, j, st));
            }
            for (unsigned j = 1; j <= N; ++j) {
                for (unsigned k = j + 1; k <= std::min(i + j, N); ++k) {
                    named.push_back(type_three_cell(i, j, k, st));
                    named.push_back(theta_three_cell(i, j, k, st));
                }
            }
        }
    }
    for (const Cell& c : named) {
        const auto closed = res.closed_form_boundary(c);
        if (!closed) {
            detail << "no closed form recognized for " << c.str();
            return false;
        }
        if (!(*closed == res.boundary(c))) {
            detail << "closed form disagrees with the recursion at " << c.str();
            return false;
        }
    }
    detail << named.size() << " named cells with indices <= " << N << " match term for term";
    return true;
}

// 10. Homology and the collapsing scheme across truncations.
bool check_homology(std::ostream& detail, bool fast) {
    const unsigned n_top = fast ? 3 : 5;
    const auto start = Clock::now();
    for (unsigned N = 1; N <= n_top; ++N) {
        const HomologyReport report = homology_report(N);
        const auto& g = report.groups;
        if (!(g[0] == HomologyGroup{1, {}})) {
            detail << "H0 wrong at N=" << N;
            return false;
        }
        if (!(g[1] == HomologyGroup{1, {}})) {
            detail << "H1 wrong at N=" << N;
            return false;
        }
        if (!(g[2] == HomologyGroup{N - 1, {}})) {
            detail << "H2 has rank " << g[2].free_rank << " at N=" << N << ", expected " << N - 1;
            return false;
        }
        if (!(g[3] == HomologyGroup{0, {}})) {
            detail << "H3 nonzero at N=" << N;
            return false;
        }
        if (!report.matching.passed()) {
            detail << "matching conditions failed at N=" << N << ": "
                   << (report.matching.failures.empty() ? "?" : report.matching.failures.front());
            return false;
        }
        if (!report.morse_dimension3_empty) {
            detail << "Morse complex has dimension-3 cells at N=" << N;
            return false;
        }
        for (unsigned k = 0; k <= 2; ++k) {
            if (!(report.groups[k] == report.morse_groups[k])) {
                detail << "Morse homology differs at N=" << N << ", k=" << k;
                return false;
            }
        }
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    detail << "H0=Z, H1=Z, H2=Z^(N-1), H3=0, matching verified, Morse dim-3 empty for N<="
           << n_top << ", " << elapsed << "s";
    return elapsed < 120.0;
}

// 11. Rank-2 sphere counts and the free-group lower bound.
bool check_rank_two(std::ostream& detail, bool fast) {
    const unsigned n_max = fast ? 8 : 12;
    const auto report = growth_estimate_r2(n_max);
    if (!report.bound_all_ok()) {
        detail << "cumulative count below 2*3^n - 1";
        return false;
    }
    if (report.rows[1].sphere != 4 || report.rows[2].sphere != 16) {
        detail << "s2(1)=" << report.rows[1].sphere << ", s2(2)=" << report.rows[2].sphere;
        return false;
    }
    // Independent brute force for s2(3): walk all words of length 3.
    const AvoidFamily star2 = AvoidFamily::star(2);
    BigInt brute = 0;
    for (unsigned c0 = 0; c0 < 4; ++c0)
        for (unsigned c1 = 0; c1 < 4; ++c1)
            for (unsigned c2 = 0; c2 < 4; ++c2) {
                Word w;
                w = w.appended(Letter::from_code(static_cast<std::uint8_t>(c0)));
                w = w.appended(Letter::from_code(static_cast<std::uint8_t>(c1)));
                w = w.appended(Letter::from_code(static_cast<std::uint8_t>(c2)));
                if (!star2.contains_factor(w)) ++brute;
            }
    if (report.rows[3].sphere != brute) {
        detail << "s2(3)=" << report.rows[3].sphere << " vs brute force " << brute;
        return false;
    }
    detail << "bound holds for n <= " << n_max << "; s2(1)=4, s2(2)=16, s2(3)=" << brute
           << " confirmed";
    return true;
}

}  // namespace

std::vector<CheckResult> run_acceptance_checks(const CheckOptions& options) {
    const bool fast = options.fast;
    Checker checker;
    checker.run(1, "confluence", [&](std::ostream& d) { return check_confluence(d, fast); });
    checker.run(2, "schema_equivalence", [&](std::ostream& d) { return check_equivalence(d, fast); });
    checker.run(3, "mask_bijection", [&](std::ostream& d) { return check_bijection(d, fast); });
    checker.run(4, "count_oracle_agreement",
                [&](std::ostream& d) { return check_dp_agreement(d, fast); });
    checker.run(5, "minimal_forbidden_factors",
                [&](std::ostream& d) { return check_minimal_factors(d, fast); });
    checker.run(6, "growth_signal", [&](std::ostream& d) { return check_growth_signal(d, fast); });
    checker.run(7, "sandwich_report", [&](std::ostream& d) { return check_sandwich(d, fast); });
    checker.run(8, "resolution_identities",
                [&](std::ostream& d) { return check_resolution(d, fast); });
    checker.run(9, "closed_form_boundaries",
                [&](std::ostream& d) { return check_closed_forms(d, fast); });
    checker.run(10, "homology_and_morse", [&](std::ostream& d) { return check_homology(d, fast); });
    checker.run(11, "rank_two_growth", [&](std::ostream& d) { return check_rank_two(d, fast); });
    return checker.results;
}

std::string checks_summary_json(const std::vector<CheckResult>& results) {
    nlohmann::json checks = nlohmann::json::array();
    bool all = true;
    for (const CheckResult& r : results) {
        all = all && r.passed;
        checks.push_back({{"id", r.id},
                          {"name", r.name},
                          {"passed", r.passed},
                          {"detail", r.detail},
                          {"seconds", r.seconds}});
    }
    nlohmann::json out{{"kind", "verification"}, {"all_passed", all}, {"checks", checks}};
    return out.dump(2) + "\n";
}

}  // namespace freestar
