#include "freestar/homology.hpp"

#include <algorithm>

namespace freestar {

TruncatedComplex::TruncatedComplex(std::vector<std::vector<Cell>> bases,
                                   std::vector<IntegerMatrix> boundaries)
    : bases_(std::move(bases)), boundaries_(std::move(boundaries)) {
    if (bases_.empty()) throw std::invalid_argument("TruncatedComplex: no bases");
    if (boundaries_.size() != bases_.size())
        throw std::invalid_argument("TruncatedComplex: boundary count mismatch");
    for (std::size_t n = 1; n < bases_.size(); ++n) {
        if (boundaries_[n].rows() != bases_[n - 1].size() ||
            boundaries_[n].cols() != bases_[n].size())
            throw std::invalid_argument("TruncatedComplex: boundary shape mismatch");
    }
    index_.resize(bases_.size());
    for (std::size_t n = 0; n < bases_.size(); ++n)
        for (std::size_t i = 0; i < bases_[n].size(); ++i) index_[n].emplace(bases_[n][i], i);
}

const IntegerMatrix& TruncatedComplex::boundary(unsigned dim) const {
    if (dim == 0 || dim > top_dimension())
        throw std::invalid_argument("TruncatedComplex::boundary: dimension out of range");
    return boundaries_[dim];
}

std::optional<std::size_t> TruncatedComplex::index_of(unsigned dim, const Cell& c) const {
    if (dim > top_dimension()) return std::nullopt;
    auto it = index_[dim].find(c);
    if (it == index_[dim].end()) return std::nullopt;
    return it->second;
}

HomologyGroup TruncatedComplex::homology(unsigned k) const {
    if (k + 1 > top_dimension())
        throw std::invalid_argument("homology: need the boundary one dimension up");
    const std::size_t n_k = bases_[k].size();
    const std::size_t rank_k = (k == 0) ? 0 : smith_normal_form(boundaries_[k]).rank();
    const SmithNormalForm up = smith_normal_form(boundaries_[k + 1]);

    HomologyGroup group;
    group.free_rank = n_k - rank_k - up.rank();
    for (const BigInt& d : up.invariant_factors)
        if (d > 1) group.torsion.push_back(d);
    return group;
}

TruncatedComplex tensor_trivial(const Resolution& res, unsigned top_dim,
                                bool check_closed_forms) {
    if (top_dim < 1) throw std::invalid_argument("tensor_trivial: top dimension must be >= 1");

    std::vector<std::vector<Cell>> bases(top_dim + 1);
    bases[0] = {Cell{}};
    for (unsigned n = 1; n <= top_dim; ++n) bases[n] = res.cells_dim(n);

    std::vector<std::map<Cell, std::size_t>> index(top_dim + 1);
    for (unsigned n = 0; n <= top_dim; ++n)
        for (std::size_t i = 0; i < bases[n].size(); ++i) index[n].emplace(bases[n][i], i);

    std::vector<IntegerMatrix> boundaries(top_dim + 1);
    for (unsigned n = 1; n <= top_dim; ++n) {
        IntegerMatrix m(bases[n - 1].size(), bases[n].size());
        for (std::size_t col = 0; col < bases[n].size(); ++col) {
            const Cell& c = bases[n][col];
            const ModuleElement& b = res.boundary(c);
            if (check_closed_forms) {
                if (auto closed = res.closed_form_boundary(c); closed && !(*closed == b))
                    throw InvariantViolation("closed-form boundary of " + c.str() +
                                             " disagrees with the recursion");
            }
            for (const auto& [key, coeff] : b.terms()) {
                auto it = index[n - 1].find(key.first);
                if (it == index[n - 1].end())
                    throw TruncationError("truncation leak: " + key.first.str() +
                                          " in the boundary of " + c.str() +
                                          " is outside the dimension-" + std::to_string(n - 1) +
                                          " basis");
                m.add(it->second, col, coeff);
            }
        }
        boundaries[n] = std::move(m);
    }
    return TruncatedComplex(std::move(bases), std::move(boundaries));
}

std::optional<ThetaImage> theta(const Cell& c) {
    const auto shape = recognize(c);
    if (!shape) return std::nullopt;
    using Kind = NamedShape::Kind;
    switch (shape->kind) {
        case Kind::LetterCell:
            return std::nullopt;
        case Kind::X:
            if (!shape->starred) return std::nullopt;
            // The matched cell has to reappear in d(theta(X_i*)) with
            // coefficient -1; d maps (X_i*, a^i) to X_i* - X_i, so the
            // matching takes the negative orientation.
            return ThetaImage{type_one_cell(shape->i, true), -1};
        case Kind::TypeI:
            if (shape->starred) return std::nullopt;  // (X_i*, a^i) is matched from below
            return ThetaImage{theta_one_cell(shape->i), -1};
        case Kind::TypeII:
            return ThetaImage{theta_two_cell(shape->i, shape->j, shape->starred), -1};
        case Kind::TypeIII:
            return ThetaImage{theta_three_cell(shape->i, shape->j, shape->k, shape->starred), -1};
        case Kind::ThetaI:
        case Kind::ThetaII:
        case Kind::ThetaIII:
            return std::nullopt;
    }
    return std::nullopt;
}

CollapsingScheme::CollapsingScheme(const TruncatedComplex& complex) : complex_(&complex) {
    const unsigned top = complex.top_dimension();
    classes_.resize(top + 1);
    std::vector<std::map<std::size_t, bool>> in_image(top + 1);
    for (unsigned n = 0; n <= top; ++n) {
        for (std::size_t i = 0; i < complex.basis(n).size(); ++i) {
            const auto t = theta(complex.basis(n)[i]);
            if (!t) continue;
            classes_[n][i] = CellClass::Redundant;
            if (n + 1 <= top) {
                if (auto idx = complex.index_of(n + 1, t->cell)) in_image[n + 1][*idx] = true;
            }
        }
    }
    for (unsigned n = 0; n <= top; ++n) {
        for (std::size_t i = 0; i < complex.basis(n).size(); ++i) {
            if (classes_[n].count(i)) continue;
            classes_[n][i] = in_image[n].count(i) ? CellClass::Collapsible : CellClass::Critical;
        }
    }
}

CellClass CollapsingScheme::classify(const Cell& c) const {
    const unsigned n = c.dimension();
    const auto idx = complex_->index_of(n, c);
    if (!idx) throw std::invalid_argument("classify: cell is not in the complex basis");
    return classes_[n].at(*idx);
}

std::vector<std::size_t> CollapsingScheme::critical_indices(unsigned dim) const {
    std::vector<std::size_t> out;
    for (const auto& [i, cls] : classes_.at(dim))
        if (cls == CellClass::Critical) out.push_back(i);
    return out;
}

namespace {

// d(theta(b)) as a chain in the dimension of b, via the complex matrices.
Chain boundary_of_theta(const TruncatedComplex& complex, unsigned dim, std::size_t idx) {
    Chain out;
    out.dim = dim;
    const auto t = theta(complex.basis(dim)[idx]);
    if (!t) return out;
    const auto up = complex.index_of(dim + 1, t->cell);
    if (!up) throw InvariantViolation("theta target " + t->cell.str() + " missing from the basis");
    const IntegerMatrix& m = complex.boundary(dim + 1);
    for (const auto& [pos, val] : m.entries())
        if (pos.second == *up) out.coeffs[pos.first] += t->sign * val;
    std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0; });
    return out;
}

// theta(d(b)) as a chain in the dimension of b.
Chain theta_of_boundary(const TruncatedComplex& complex, unsigned dim, std::size_t idx) {
    Chain out;
    out.dim = dim;
    if (dim == 0) return out;
    const IntegerMatrix& m = complex.boundary(dim);
    for (const auto& [pos, val] : m.entries()) {
        if (pos.second != idx) continue;
        const auto t = theta(complex.basis(dim - 1)[pos.first]);
        if (!t) continue;
        const auto up = complex.index_of(dim, t->cell);
        if (!up)
            throw InvariantViolation("theta target " + t->cell.str() + " missing from the basis");
        out.coeffs[*up] += t->sign * val;
    }
    std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0; });
    return out;
}

}  // namespace

MatchingReport verify_matching(const TruncatedComplex& complex, const Resolution& res) {
    MatchingReport report;
    const unsigned top = complex.top_dimension();

    for (unsigned n = 1; n <= top; ++n) {
        std::map<Cell, Cell> image_source;
        for (std::size_t i = 0; i < complex.basis(n).size(); ++i) {
            const Cell& b = complex.basis(n)[i];
            const auto t = theta(b);
            if (!t) continue;

            if (theta(t->cell)) {
                report.theta_squared_zero = false;
                report.failures.push_back("theta^2 != 0 at " + b.str());
            }
            if (auto [it, inserted] = image_source.emplace(t->cell, b); !inserted) {
                report.injective = false;
                report.failures.push_back("theta(" + it->second.str() + ") = +-theta(" + b.str() +
                                          ")");
            }

            const auto up = complex.index_of(n + 1, t->cell);
            if (!up) {
                report.targets_in_basis = false;
                report.failures.push_back("theta target " + t->cell.str() + " of " + b.str() +
                                          " is outside the dimension-" + std::to_string(n + 1) +
                                          " basis");
                continue;
            }

            // b must occur in d(theta(b)) with coefficient -1.
            const BigInt coeff = t->sign * complex.boundary(n + 1).at(i, *up);
            if (coeff != -1) {
                report.coefficient_minus_one = false;
                report.failures.push_back("coefficient of " + b.str() + " in d theta(b) is " +
                                          coeff.str() + ", expected -1");
            }

            // The matched column also has a lemma formula; cross-check it
            // against the recursion that filled the matrix.
            if (auto closed = res.closed_form_boundary(t->cell);
                closed && !(*closed == res.boundary(t->cell))) {
                report.coefficient_minus_one = false;
                report.failures.push_back("closed form of " + t->cell.str() +
                                          " disagrees with the recursion");
            }
        }
    }

    // Face order: b > b' when b' occurs in d(theta(b)) or theta(d(b)).
    for (unsigned n = 0; n <= top; ++n) {
        const std::size_t count = complex.basis(n).size();
        std::vector<std::vector<std::size_t>> succ(count);
        for (std::size_t i = 0; i < count; ++i) {
            auto add_targets = [&](const Chain& chain) {
                for (const auto& [j, coeff] : chain.coeffs)
                    if (j != i) succ[i].push_back(j);
            };
            if (n + 1 <= top) add_targets(boundary_of_theta(complex, n, i));
            add_targets(theta_of_boundary(complex, n, i));
        }
        // Depth-first cycle search.
        std::vector<int> color(count, 0);
        std::vector<std::pair<std::size_t, std::size_t>> stack;
        for (std::size_t start = 0; start < count && report.order_acyclic; ++start) {
            if (color[start] != 0) continue;
            stack.push_back({start, 0});
            color[start] = 1;
            while (!stack.empty()) {
                auto& [v, next] = stack.back();
                if (next < succ[v].size()) {
                    const std::size_t w = succ[v][next++];
                    if (color[w] == 1) {
                        report.order_acyclic = false;
                        report.failures.push_back("face order has a cycle through " +
                                                  complex.basis(n)[w].str() + " in dimension " +
                                                  std::to_string(n));
                        break;
                    }
                    if (color[w] == 0) {
                        color[w] = 1;
                        stack.push_back({w, 0});
                    }
                } else {
                    color[v] = 2;
                    stack.pop_back();
                }
            }
            stack.clear();
        }
    }
    return report;
}

Chain chain_of(const TruncatedComplex& complex, unsigned dim, const Cell& c) {
    const auto idx = complex.index_of(dim, c);
    if (!idx) throw std::invalid_argument("chain_of: cell not in basis");
    Chain out;
    out.dim = dim;
    out.coeffs[*idx] = 1;
    return out;
}

namespace {

Chain apply_boundary(const TruncatedComplex& complex, const Chain& x) {
    Chain out;
    if (x.dim == 0) return out;
    out.dim = x.dim - 1;
    const IntegerMatrix& m = complex.boundary(x.dim);
    for (const auto& [pos, val] : m.entries()) {
        auto it = x.coeffs.find(pos.second);
        if (it == x.coeffs.end()) continue;
        out.coeffs[pos.first] += val * it->second;
    }
    std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Chain apply_theta(const TruncatedComplex& complex, const Chain& x) {
    Chain out;
    out.dim = x.dim + 1;
    for (const auto& [i, coeff] : x.coeffs) {
        const auto t = theta(complex.basis(x.dim)[i]);
        if (!t) continue;
        const auto up = complex.index_of(x.dim + 1, t->cell);
        if (!up)
            throw InvariantViolation("theta target " + t->cell.str() + " missing from the basis");
        out.coeffs[*up] += t->sign * coeff;
    }
    std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0; });
    return out;
}

}  // namespace

Chain pi_theta(const TruncatedComplex& complex, const Chain& x) {
    Chain out = x;
    if (x.dim + 1 <= complex.top_dimension()) {
        const Chain dt = apply_boundary(complex, apply_theta(complex, x));
        for (const auto& [i, c] : dt.coeffs) out.coeffs[i] += c;
    } else {
        // Top-dimension cells are unmatched; theta vanishes there.
        for (const auto& [i, c] : x.coeffs)
            if (theta(complex.basis(x.dim)[i]))
                throw InvariantViolation("matched cell at the top of the truncation");
    }
    if (x.dim >= 1) {
        const Chain td = apply_theta(complex, apply_boundary(complex, x));
        for (const auto& [i, c] : td.coeffs) out.coeffs[i] += c;
    }
    std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Chain pi_theta_limit(const TruncatedComplex& complex, Chain x, std::size_t iteration_cap) {
    for (std::size_t it = 0; it < iteration_cap; ++it) {
        Chain next = pi_theta(complex, x);
        if (next == x) return x;
        x = std::move(next);
    }
    throw StabilizationError(
        "pi_theta did not stabilize; the matching or the truncation is inconsistent");
}

TruncatedComplex morse_complex(const TruncatedComplex& complex, const CollapsingScheme& scheme) {
    const unsigned top = complex.top_dimension();
    std::vector<std::vector<Cell>> bases(top + 1);
    std::vector<std::map<std::size_t, std::size_t>> to_morse(top + 1);  // complex idx -> morse idx
    for (unsigned n = 0; n <= top; ++n) {
        for (std::size_t i : scheme.critical_indices(n)) {
            to_morse[n][i] = bases[n].size();
            bases[n].push_back(complex.basis(n)[i]);
        }
    }

    std::vector<IntegerMatrix> boundaries(top + 1);
    for (unsigned n = 1; n <= top; ++n) {
        IntegerMatrix m(bases[n - 1].size(), bases[n].size());
        for (std::size_t col = 0; col < bases[n].size(); ++col) {
            Chain invariant = pi_theta_limit(complex, chain_of(complex, n, bases[n][col]));
            Chain db = apply_boundary(complex, invariant);
            for (const auto& [i, coeff] : db.coeffs) {
                auto it = to_morse[n - 1].find(i);
                if (it == to_morse[n - 1].end()) continue;  // projection onto critical cells
                m.add(it->second, col, coeff);
            }
        }
        boundaries[n] = std::move(m);
    }
    return TruncatedComplex(std::move(bases), std::move(boundaries));
}

HomologyReport homology_report(unsigned truncation, unsigned dim_bound, bool check_closed_forms) {
    if (dim_bound < 4 || dim_bound > 6)
        throw std::invalid_argument("homology_report: dimension bound must be in 4..6");
    Resolution res(RewritingSystem::r1(), Truncation{truncation, dim_bound});
    TruncatedComplex complex = tensor_trivial(res, dim_bound, check_closed_forms);

    HomologyReport report;
    report.truncation = truncation;
    report.dim_bound = dim_bound;
    for (unsigned k = 0; k + 1 <= dim_bound; ++k) report.groups.push_back(complex.homology(k));

    report.matching = verify_matching(complex, res);
    CollapsingScheme scheme(complex);
    for (unsigned n = 0; n <= dim_bound; ++n)
        report.critical_counts.push_back(scheme.critical_indices(n).size());

    TruncatedComplex morse = morse_complex(complex, scheme);
    for (unsigned k = 0; k + 1 <= dim_bound; ++k) report.morse_groups.push_back(morse.homology(k));
    report.morse_dimension3_empty = morse.basis(3).empty();
    return report;
}

}  // namespace freestar
