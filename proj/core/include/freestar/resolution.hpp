#pragma once

// Truncated free resolution built from a complete length-reducing rewriting
// system: edge pairs, cell bases V^(n), the generic recursive boundary and
// contracting homotopy, and closed-form boundaries for the named cell shapes
// of the rank-1 system.
//
// Cells are tuples (v_1, ..., v_n) of nonempty irreducible words with v_1 a
// single letter and every adjacent pair an edge pair. Module elements are
// integer combinations of (cell % translate) basis elements; translates are
// kept in normal form so term collection has canonical keys.
//
// The truncation bounds every component: length <= 3N and every run <= N.
// On the named shapes (X_i and the dimension-3/4 families) the run bound is
// exactly the index bound i, j, k <= N. Exceeding the truncation raises
// TruncationError; nothing is truncated silently.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "freestar/rewrite.hpp"
#include "freestar/word.hpp"

namespace freestar {

struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

struct Truncation {
    unsigned index_bound = 1;  // N
    unsigned dim_bound = 4;    // D

    std::size_t max_component_len() const { return 3 * static_cast<std::size_t>(index_bound); }
    bool admits(const Word& component) const;
    bool admits_prefix(const Word& partial) const { return admits(partial); }
};

class Cell {
public:
    Cell() = default;  // the dimension-0 basis cell of P_0
    explicit Cell(std::vector<Word> components);

    unsigned dimension() const { return static_cast<unsigned>(components_.size()); }
    const std::vector<Word>& components() const { return components_; }
    const Word& component(std::size_t i) const { return components_.at(i); }
    const Word& last() const { return components_.back(); }

    Cell extended(Word next) const;
    Cell prefix() const;  // drop the last component

    Cell star_dual() const;  // swap a <-> a* in every component
    std::size_t total_length() const;

    std::string str() const;  // "(v1|v2|...)", "()" in dimension 0

    auto operator<=>(const Cell& rhs) const = default;

private:
    std::vector<Word> components_;
};

// A formal integer combination of (cell % translate) pairs. Deterministic
// term order: cell first, then translate, both shortlex-based.
class ModuleElement {
public:
    using Key = std::pair<Cell, Word>;

    ModuleElement() = default;
    static ModuleElement basis(Cell c, Word translate, long long coeff = 1);

    ModuleElement& add(const Cell& c, const Word& translate, long long coeff);
    ModuleElement& operator+=(const ModuleElement& rhs);
    ModuleElement& operator-=(const ModuleElement& rhs);
    ModuleElement operator+(const ModuleElement& rhs) const;
    ModuleElement operator-(const ModuleElement& rhs) const;
    ModuleElement operator-() const;

    // Right action: every translate is multiplied and renormalized.
    ModuleElement acted(const Word& right, const RewritingSystem& sys) const;

    ModuleElement star_dual() const;

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    long long coefficient(const Cell& c, const Word& translate) const;
    const std::map<Key, long long>& terms() const { return terms_; }

    // Signed sum of "(v1|v2|...) o w" terms (right action written as U+2218);
    // the empty translate prints as 1. Term order is deterministic.
    std::string str() const;

    bool operator==(const ModuleElement&) const = default;

private:
    std::map<Key, long long> terms_;
};

struct EdgePair {
    Word left;
    Word right;
    bool operator==(const EdgePair&) const = default;
};

// All edge pairs (u, v): u, v irreducible and nonempty, uv reducible, every
// proper prefix of uv irreducible, |u| + |v| <= max_total_len.
std::vector<EdgePair> edge_pairs(const RewritingSystem& sys, std::size_t max_total_len);

// Named cell shapes of the rank-1 resolution. The starred flag marks the
// image under the a <-> a* swap.
struct NamedShape {
    enum class Kind { LetterCell, X, TypeI, TypeII, TypeIII, ThetaI, ThetaII, ThetaIII };
    Kind kind = Kind::LetterCell;
    bool starred = false;
    unsigned i = 0, j = 0, k = 0;
};

std::optional<NamedShape> recognize(const Cell& c);

// Constructors for the named cells (rank 1).
Cell letter_cell(bool starred);
Cell x_cell(unsigned i, bool starred = false);                       // X_i
Cell type_one_cell(unsigned i, bool starred = false);                // (X_i, A^i)
Cell type_two_cell(unsigned i, unsigned j, bool starred = false);    // (X_i, A^j a^j), j < i
Cell type_three_cell(unsigned i, unsigned j, unsigned k, bool starred = false);
Cell theta_one_cell(unsigned i, bool starred = false);               // (X_i, A^i, a^i A^i)
Cell theta_two_cell(unsigned i, unsigned j, bool starred = false);   // (X_i, A^j a^j, A^j)
Cell theta_three_cell(unsigned i, unsigned j, unsigned k, bool starred = false);

class Resolution {
public:
    Resolution(RewritingSystem sys, Truncation t);

    const RewritingSystem& system() const { return sys_; }
    const Truncation& truncation() const { return trunc_; }

    // All v with (left, v) an edge pair, within the component bounds.
    std::vector<Word> edge_extensions(const Word& left) const;

    // The truncated basis of dimension n (n >= 1), deterministic order.
    const std::vector<Cell>& cells_dim(unsigned n) const;

    // Generic boundary, dimension >= 1; memoized.
    const ModuleElement& boundary(const Cell& c) const;

    // Contracting homotopy i_{n+1} on the basis element (c % x) of P_n;
    // for the dimension-0 cell this is i_1. Memoized.
    const ModuleElement& homotopy(const Cell& c, const Word& x) const;

    // Apply the homotopy term by term.
    ModuleElement homotopy_applied(const ModuleElement& e) const;

    // Apply the boundary term by term: d(sum (c % x) k) = sum k d(c) % x.
    ModuleElement boundary_applied(const ModuleElement& e) const;

    // The lemma formulas, dispatched by shape; nullopt if the shape has none.
    std::optional<ModuleElement> closed_form_boundary(const Cell& c) const;

private:
    void check_admits(const Cell& c) const;
    ModuleElement compute_boundary(const Cell& c) const;
    ModuleElement compute_homotopy(const Cell& c, const Word& x) const;

    RewritingSystem sys_;
    Truncation trunc_;

    struct Memo;
    std::shared_ptr<Memo> memo_;
};

}  // namespace freestar
