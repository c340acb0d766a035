#pragma once

// Sparse exact integer matrices and Smith normal form by gcd pivoting.
// Matrices here are small (a few hundred rows/columns per truncation), so
// correctness wins over sophistication: no modular arithmetic, no blocking.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "freestar/bigint.hpp"

namespace freestar {

class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t r, std::size_t c, BigInt v);
    void add(std::size_t r, std::size_t c, const BigInt& v);
    const BigInt& at(std::size_t r, std::size_t c) const;

    bool is_zero() const { return entries_.empty(); }
    std::size_t nonzeros() const { return entries_.size(); }

    const std::map<std::pair<std::size_t, std::size_t>, BigInt>& entries() const {
        return entries_;
    }

    static IntegerMatrix product(const IntegerMatrix& a, const IntegerMatrix& b);

    // One "row col value" line per nonzero entry, row-major.
    void dump_triplets(std::ostream& os) const;

private:
    void check_bounds(std::size_t r, std::size_t c) const;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::map<std::pair<std::size_t, std::size_t>, BigInt> entries_;  // no stored zeros
};

struct SmithNormalForm {
    std::vector<BigInt> invariant_factors;  // d_1 | d_2 | ..., all positive
    std::size_t rank() const { return invariant_factors.size(); }
};

SmithNormalForm smith_normal_form(const IntegerMatrix& m);

}  // namespace freestar
