#include "freestar/matrix.hpp"

#include <ostream>
#include <stdexcept>

namespace freestar {

namespace {
const BigInt kZero = 0;
}

void IntegerMatrix::check_bounds(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("IntegerMatrix: index out of range");
}

void IntegerMatrix::set(std::size_t r, std::size_t c, BigInt v) {
    check_bounds(r, c);
    if (v == 0) entries_.erase({r, c});
    else entries_[{r, c}] = std::move(v);
}

void IntegerMatrix::add(std::size_t r, std::size_t c, const BigInt& v) {
    check_bounds(r, c);
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
        if (v != 0) entries_.emplace(std::make_pair(r, c), v);
        return;
    }
    it->second += v;
    if (it->second == 0) entries_.erase(it);
}

const BigInt& IntegerMatrix::at(std::size_t r, std::size_t c) const {
    check_bounds(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? kZero : it->second;
}

IntegerMatrix IntegerMatrix::product(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("IntegerMatrix::product: shape mismatch");
    IntegerMatrix out(a.rows(), b.cols());
    for (const auto& [apos, aval] : a.entries_) {
        const auto [i, k] = apos;
        auto it = b.entries_.lower_bound({k, 0});
        for (; it != b.entries_.end() && it->first.first == k; ++it)
            out.add(i, it->first.second, aval * it->second);
    }
    return out;
}

void IntegerMatrix::dump_triplets(std::ostream& os) const {
    for (const auto& [pos, val] : entries_)
        os << pos.first << ' ' << pos.second << ' ' << val << '\n';
}

namespace {

using Dense = std::vector<std::vector<BigInt>>;

void swap_rows(Dense& m, std::size_t i, std::size_t j) { std::swap(m[i], m[j]); }

void swap_cols(Dense& m, std::size_t i, std::size_t j) {
    for (auto& row : m) std::swap(row[i], row[j]);
}

// Locate the entry of minimal nonzero absolute value in the submatrix with
// both indices >= t. Returns false if that submatrix is zero.
bool find_pivot(const Dense& m, std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    BigInt best;
    for (std::size_t i = t; i < m.size(); ++i) {
        for (std::size_t j = t; j < m[i].size(); ++j) {
            if (m[i][j] == 0) continue;
            BigInt a = abs(m[i][j]);
            if (!found || a < best) {
                found = true;
                best = std::move(a);
                pr = i;
                pc = j;
            }
        }
    }
    return found;
}

}  // namespace

SmithNormalForm smith_normal_form(const IntegerMatrix& input) {
    const std::size_t rows = input.rows(), cols = input.cols();
    Dense m(rows, std::vector<BigInt>(cols, 0));
    for (const auto& [pos, val] : input.entries()) m[pos.first][pos.second] = val;

    SmithNormalForm result;
    const std::size_t steps = std::min(rows, cols);
    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pr = t, pc = t;
        if (!find_pivot(m, t, pr, pc)) break;
        swap_rows(m, t, pr);
        swap_cols(m, t, pc);

        for (;;) {
            bool clean = true;
            // Clear the pivot column.
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                const BigInt q = m[i][t] / m[t][t];
                if (q != 0)
                    for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {  // remainder stays; it is smaller, promote it
                    swap_rows(m, t, i);
                    clean = false;
                }
            }
            // Clear the pivot row.
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                const BigInt q = m[t][j] / m[t][t];
                if (q != 0)
                    for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    swap_cols(m, t, j);
                    clean = false;
                }
            }
            if (!clean) continue;

            // Divisibility: the pivot must divide every remaining entry.
            bool fixed = true;
            for (std::size_t i = t + 1; i < rows && fixed; ++i) {
                for (std::size_t j = t + 1; j < cols && fixed; ++j) {
                    if (m[i][j] % m[t][t] != 0) {
                        for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
                        fixed = false;
                    }
                }
            }
            if (fixed) break;
        }
        if (m[t][t] < 0) m[t][t] = -m[t][t];
        result.invariant_factors.push_back(m[t][t]);
    }
    return result;
}

}  // namespace freestar
