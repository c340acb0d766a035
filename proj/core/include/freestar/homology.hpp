#pragma once

// Tensor the truncated resolution with trivial coefficients, compute integral
// homology by Smith normal form, and run the collapsing scheme: the matching
// theta, its verification, the stabilized projection Pi_theta, and the Morse
// complex.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "freestar/matrix.hpp"
#include "freestar/resolution.hpp"

namespace freestar {

struct StabilizationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HomologyGroup {
    std::size_t free_rank = 0;
    std::vector<BigInt> torsion;  // invariant factors > 1, divisibility chain
    bool operator==(const HomologyGroup&) const = default;
};

// Finite chain complex with ordered cell bases per dimension. Dimension 0 is
// the single augmentation cell; boundary(n) maps dimension n to n-1.
class TruncatedComplex {
public:
    TruncatedComplex(std::vector<std::vector<Cell>> bases, std::vector<IntegerMatrix> boundaries);

    unsigned top_dimension() const { return static_cast<unsigned>(bases_.size()) - 1; }
    const std::vector<Cell>& basis(unsigned dim) const { return bases_.at(dim); }
    const IntegerMatrix& boundary(unsigned dim) const;  // dim in 1..top
    std::optional<std::size_t> index_of(unsigned dim, const Cell& c) const;

    // ker d_k / im d_{k+1}; requires k < top_dimension().
    HomologyGroup homology(unsigned k) const;

private:
    std::vector<std::vector<Cell>> bases_;
    std::vector<IntegerMatrix> boundaries_;  // boundaries_[n] for n >= 1; [0] unused
    std::vector<std::map<Cell, std::size_t>> index_;
};

// Apply - tensor Z to the resolution: translates are killed, coefficients
// survive. Boundaries come from the generic recursion; with
// check_closed_forms set, every cell carrying a lemma formula is checked
// against it term by term first.
TruncatedComplex tensor_trivial(const Resolution& res, unsigned top_dim,
                                bool check_closed_forms = false);

enum class CellClass { Critical, Collapsible, Redundant };

struct ThetaImage {
    Cell cell;
    int sign = 1;
};

// The matching: X_i* pairs up into dimension 3, every dimension-3 cell pairs
// down or up by shape, everything unnamed in dimension >= 4 is critical.
std::optional<ThetaImage> theta(const Cell& c);

// The matching restricted to a complex, with the classification it induces.
class CollapsingScheme {
public:
    explicit CollapsingScheme(const TruncatedComplex& complex);

    const TruncatedComplex& complex() const { return *complex_; }
    std::optional<ThetaImage> matched(const Cell& c) const { return theta(c); }
    CellClass classify(const Cell& c) const;
    std::vector<std::size_t> critical_indices(unsigned dim) const;

private:
    const TruncatedComplex* complex_;
    std::vector<std::map<std::size_t, CellClass>> classes_;  // per dim, by basis index
};

struct MatchingReport {
    bool theta_squared_zero = true;
    bool injective = true;
    bool coefficient_minus_one = true;
    bool order_acyclic = true;
    bool targets_in_basis = true;
    std::vector<std::string> failures;
    bool passed() const {
        return theta_squared_zero && injective && coefficient_minus_one && order_acyclic &&
               targets_in_basis;
    }
};

// Conditions on a collapsing scheme: theta^2 = 0, injectivity up to sign on
// nonzero values, the matched cell reappears in d(theta(b)) with coefficient
// -1, and the face relation generated by d theta and theta d is acyclic on
// each truncated basis.
MatchingReport verify_matching(const TruncatedComplex& complex, const Resolution& res);

// A dimension-homogeneous chain, sparse over the basis of its dimension.
struct Chain {
    unsigned dim = 0;
    std::map<std::size_t, BigInt> coeffs;
    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const Chain&) const = default;
};

Chain chain_of(const TruncatedComplex& complex, unsigned dim, const Cell& c);

// Pi_theta = 1 + d theta + theta d, one application.
Chain pi_theta(const TruncatedComplex& complex, const Chain& x);

// Iterate Pi_theta to its fixpoint; throws StabilizationError past the cap.
Chain pi_theta_limit(const TruncatedComplex& complex, Chain x, std::size_t iteration_cap = 10000);

// Critical cells with the Morse boundary pi_theta . d . Pi_theta^infinity.
TruncatedComplex morse_complex(const TruncatedComplex& complex, const CollapsingScheme& scheme);

struct HomologyReport {
    unsigned truncation = 0;
    unsigned dim_bound = 0;
    std::vector<HomologyGroup> groups;          // groups[k] for k < dim_bound
    std::vector<std::size_t> critical_counts;   // per dimension 0..dim_bound
    std::vector<HomologyGroup> morse_groups;    // same range as groups
    MatchingReport matching;
    bool morse_dimension3_empty = false;
};

HomologyReport homology_report(unsigned truncation, unsigned dim_bound = 4,
                               bool check_closed_forms = false);

}  // namespace freestar
