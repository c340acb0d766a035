#pragma once

// Counting and enumeration for factor-avoiding binary languages and sphere
// sizes of free regular star-monoids: exhaustive prefix-pruned enumeration,
// the polynomial-time run-profile count, strongly unimodal sequence counts,
// and the asymptotic main-term estimate.
//
// Two count conventions are first-class: Exact counts words of length
// exactly n, Cumulative counts length at most n. Every report states its
// convention.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "freestar/bigint.hpp"
#include "freestar/word.hpp"

namespace freestar {

enum class PatternKind { Rev, Star };

// A family of forbidden factors: {w w^rev w}, {w w* w}, or an explicit set.
class AvoidFamily {
public:
    static AvoidFamily rev(unsigned rank = 1);
    static AvoidFamily star(unsigned rank = 1);
    static AvoidFamily explicit_set(std::vector<Word> factors);

    unsigned rank() const { return rank_; }
    std::string name() const;

    // Some forbidden factor ends at the last letter of w.
    bool suffix_completes_factor(const Word& w) const;
    bool contains_factor(const Word& w) const;

    // All forbidden factors of length <= max_len, deduplicated, shortlex.
    std::vector<Word> forbidden_upto(std::size_t max_len) const;

private:
    AvoidFamily(std::optional<PatternKind> kind, unsigned rank, std::vector<Word> factors);
    std::optional<PatternKind> kind_;  // nullopt = explicit set
    unsigned rank_;
    std::vector<Word> factors_;
};

// Enumeration guards: the avoiding set itself stays small, but the pruned
// prefix tree is walked explicitly.
std::size_t enumeration_guard(unsigned rank);

// Number of words of length exactly n avoiding every forbidden factor, by
// prefix-pruned depth-first enumeration. Throws std::invalid_argument above
// the guard, pointing at sphere_count_dp.
BigInt sphere_count_enumerate(const AvoidFamily& fam, unsigned n);

// The avoiding words themselves (exact length n), shortlex order.
std::vector<Word> enumerate_avoiding(const AvoidFamily& fam, unsigned n);

// Q(j, m): partitions of j into distinct parts < m. Shared kernel of the
// polynomial-time counts below.
class DistinctPartTable {
public:
    explicit DistinctPartTable(unsigned max_weight);
    const BigInt& count(unsigned j, unsigned m) const;
    unsigned max_weight() const { return max_weight_; }

private:
    unsigned max_weight_;
    std::vector<std::vector<BigInt>> table_;  // table_[j][m], m <= j+1
};

// Number of rank-1 words of length exactly n avoiding the Star family,
// via the unique run-profile decomposition: strictly increasing run lengths,
// a single or doubled maximal run, strictly decreasing run lengths, times 2
// for the first letter. Rev counts equal Star counts (the mask bijection).
BigInt sphere_count_dp(unsigned n);
BigInt sphere_count_dp(unsigned n, const DistinctPartTable& table);

enum class UnimodalVariant { StrictPeak, DoubledPeakAllowed };

// Sequences a_1 < ... < a_k > ... > a_m of positive integers summing to n;
// DoubledPeakAllowed additionally permits one repeated maximal part.
BigInt strongly_unimodal_count(unsigned n, UnimodalVariant variant);
BigInt strongly_unimodal_count(unsigned n, UnimodalVariant variant, const DistinctPartTable& table);

// Forbidden factors of length <= max_len containing no shorter forbidden
// factor as a proper factor.
std::vector<Word> minimal_forbidden_factors(const AvoidFamily& fam, std::size_t max_len);

// sqrt(3) (24n-1)^{-3/4} exp((pi/6) sqrt(24n-1)) (1 + (pi^2-9)/(4 pi sqrt(24n-1))).
double rhoades_main_term(unsigned n);

enum class CountConvention { Exact, Cumulative };

struct GrowthTable {
    CountConvention convention = CountConvention::Exact;
    std::vector<BigInt> counts;  // counts[n]
};

GrowthTable growth_table(unsigned n_max, CountConvention convention);

struct SandwichRow {
    unsigned n = 0;
    BigInt sphere;    // exact-length count
    BigInt ball;      // cumulative count
    BigInt u_strict;
    BigInt u_doubled;
    double rhoades = 0.0;
    bool eq_star_rev = false;          // |Lstar^c(n)| == |Lrev^c(n)|, exact length
    bool eq_by_enumeration = false;    // equality witnessed by enumeration at this n
    bool sandwich_exact_strict = false;
    bool sandwich_exact_doubled = false;
    bool sandwich_cumulative_strict = false;
    bool sandwich_cumulative_doubled = false;
};

struct SandwichReport {
    unsigned n_max = 0;
    unsigned enumeration_limit = 0;
    std::vector<SandwichRow> rows;
    bool equality_all_true() const;
};

// The sandwich u(n) <= count <= 2 u(n) is reported under all four
// (convention x variant) pairings and asserted under none; the cited bound
// fixes neither the length convention nor the exact variant.
SandwichReport sandwich_report(unsigned n_max, unsigned enumeration_limit = 22);

struct RankTwoRow {
    unsigned n = 0;
    BigInt sphere;
    BigInt ball;
    double ratio = 0.0;        // sphere(n) / sphere(n-1)
    BigInt free_group_ball;    // 2 * 3^n - 1
    bool bound_ok = false;     // ball >= free_group_ball
};

struct RankTwoReport {
    unsigned n_max = 0;
    std::vector<RankTwoRow> rows;
    bool bound_all_ok() const;
};

// Sphere counts of irreducible words over the 4-letter alphabet under
// rstar(2), with the free-group lower bound on cumulative counts.
RankTwoReport growth_estimate_r2(unsigned n_max);

struct GrowthSignalRow {
    unsigned n = 0;
    BigInt sphere;
    double log2_per_n = 0.0;
};

// Exact-integer DP evaluation of log2 s(n) / n at the given lengths.
std::vector<GrowthSignalRow> growth_signal(const std::vector<unsigned>& lengths);

// Run profile of a word: first letter plus the composition of run lengths.
struct RunProfile {
    Letter first{0, false};
    std::vector<std::size_t> composition;
};
RunProfile run_profile(const Word& w);

// Number of ways to split the run composition as increasing / peak /
// decreasing with a single or doubled strictly-maximal peak. Equals 1 for
// every Star-avoiding nonempty word.
std::size_t admissible_decompositions(const Word& w);

}  // namespace freestar
