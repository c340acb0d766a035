#pragma once

// Length-reducing string rewriting for the rule families
//
//   r1        a^n A^n a^n -> a^n,  A^n a^n A^n -> A^n        (n >= 1, rank 1)
//   r1(b)     the same rules restricted to n <= b
//   rstar(r)  w w* w -> w for every nonempty w                (rank r)
//
// All families are infinite (except r1(b)) but length-reducing, so whether a
// word of length n is reducible depends only on rules with |lhs| <= n. Rules
// are therefore matched schematically; materialization is only used for rule
// dumps and critical-pair search.
//
// Systems are immutable after construction. Reduction is pure; the normal-form
// cache is internal and mutex-guarded.

#include <cstddef>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "freestar/word.hpp"

namespace freestar {

enum class SchemaKind { R1, R1Bounded, RStar };

struct Rule {
    Word lhs;
    Word rhs;
    bool operator==(const Rule&) const = default;
};

struct Redex {
    std::size_t pos = 0;
    std::size_t len = 0;  // length of the matched lhs
    bool operator==(const Redex&) const = default;
};

class RewritingSystem {
public:
    static RewritingSystem r1();
    static RewritingSystem r1_bounded(unsigned max_index);
    static RewritingSystem rstar(unsigned rank);

    SchemaKind kind() const { return kind_; }
    unsigned rank() const { return rank_; }
    unsigned bound() const { return bound_; }  // 0 means unbounded
    std::string name() const;

    // True iff w[pos, pos+len) is the left-hand side of some rule.
    bool lhs_at(const Word& w, std::size_t pos, std::size_t len) const;

    // True iff some lhs ends at the last letter of w.
    bool suffix_completes_lhs(const Word& w) const;

    // Leftmost position carrying an lhs; shortest lhs wins at equal positions.
    std::optional<Redex> leftmost_redex(const Word& w) const;

    bool is_irreducible(const Word& w) const;

    // The unique irreducible descendant (leftmost, shortest-lhs strategy).
    Word normal_form(const Word& w) const;

    // normal_form(a . b); both inputs are expected to be irreducible.
    Word multiply(const Word& a, const Word& b) const;

    // All rules with |lhs| <= max_lhs, shortlex-ordered by lhs.
    std::vector<Rule> rules_upto(std::size_t max_lhs) const;

    // The right-hand side of the rule whose lhs is w[pos, pos+len).
    Word rhs_for(const Word& w, std::size_t pos, std::size_t len) const;

private:
    RewritingSystem(SchemaKind kind, unsigned rank, unsigned bound);

    SchemaKind kind_;
    unsigned rank_;
    unsigned bound_;

    struct Cache;
    std::shared_ptr<Cache> cache_;
};

// Every redex (position, lhs length) of w, positions ascending then lengths.
std::vector<Redex> all_redexes(const RewritingSystem& sys, const Word& w);

// All irreducible words of length <= max_len, including the empty word,
// in depth-first letter order.
std::vector<Word> irreducible_words(const RewritingSystem& sys, std::size_t max_len);

// One rewrite step at the given redex.
Word apply_redex(const RewritingSystem& sys, const Word& w, const Redex& r);

// Alternative reduction strategies; completeness makes the result equal to
// normal_form, which the confluence tests enforce.
Word reduce_rightmost(const RewritingSystem& sys, Word w);
Word reduce_random(const RewritingSystem& sys, Word w, std::mt19937& rng);

struct CriticalPair {
    Word overlap;        // the superposed word
    Redex redex_left;
    Redex redex_right;
    Word branch_left;    // one-step descendants
    Word branch_right;
    bool resolved = false;
};

// All overlap and containment superpositions between rule pairs whose overlap
// word has length <= maxlen, including the trivial self-superpositions.
std::vector<CriticalPair> critical_pairs(const RewritingSystem& sys, std::size_t maxlen);

struct EquivalenceReport {
    std::size_t max_len = 0;
    std::size_t words_checked = 0;
    // w such that r1 and rstar(1) disagree on the normal form of w w* w,
    // or such that nf(w w* w) != nf(w) under r1.
    std::vector<Word> normal_form_mismatches;
    // r1-irreducible w with nf_r1(w w* w) != w.
    std::vector<Word> irreducible_not_fixed;
    bool passed() const { return normal_form_mismatches.empty() && irreducible_not_fixed.empty(); }
};

// Checks, for every rank-1 word with |w| <= max_len, that reducing w w* w
// under r1 and under rstar(1) agree, that the result equals nf_r1(w), and
// that irreducible w are recovered exactly.
EquivalenceReport verify_schema_equivalence(std::size_t max_len);

}  // namespace freestar
