#include "freestar/resolution.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace freestar {

bool Truncation::admits(const Word& component) const {
    return component.size() <= max_component_len() && component.max_run() <= index_bound;
}

Cell::Cell(std::vector<Word> components) : components_(std::move(components)) {
    for (const Word& w : components_)
        if (w.empty()) throw std::invalid_argument("Cell: components must be nonempty");
}

Cell Cell::extended(Word next) const {
    std::vector<Word> comps = components_;
    comps.push_back(std::move(next));
    return Cell(std::move(comps));
}

Cell Cell::prefix() const {
    if (components_.empty()) throw std::invalid_argument("Cell::prefix: dimension 0");
    std::vector<Word> comps(components_.begin(), components_.end() - 1);
    return Cell(std::move(comps));
}

Cell Cell::star_dual() const {
    std::vector<Word> comps;
    comps.reserve(components_.size());
    for (const Word& w : components_) comps.push_back(w.complemented());
    return Cell(std::move(comps));
}

std::size_t Cell::total_length() const {
    std::size_t total = 0;
    for (const Word& w : components_) total += w.size();
    return total;
}

std::string Cell::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i > 0) out += '|';
        out += components_[i].text();
    }
    out += ')';
    return out;
}

ModuleElement ModuleElement::basis(Cell c, Word translate, long long coeff) {
    ModuleElement e;
    e.add(c, translate, coeff);
    return e;
}

ModuleElement& ModuleElement::add(const Cell& c, const Word& translate, long long coeff) {
    if (coeff == 0) return *this;
    auto key = std::make_pair(c, translate);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& rhs) {
    for (const auto& [key, coeff] : rhs.terms_) add(key.first, key.second, coeff);
    return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& rhs) {
    for (const auto& [key, coeff] : rhs.terms_) add(key.first, key.second, -coeff);
    return *this;
}

ModuleElement ModuleElement::operator+(const ModuleElement& rhs) const {
    ModuleElement out = *this;
    out += rhs;
    return out;
}

ModuleElement ModuleElement::operator-(const ModuleElement& rhs) const {
    ModuleElement out = *this;
    out -= rhs;
    return out;
}

ModuleElement ModuleElement::operator-() const {
    ModuleElement out;
    for (const auto& [key, coeff] : terms_) out.add(key.first, key.second, -coeff);
    return out;
}

ModuleElement ModuleElement::acted(const Word& right, const RewritingSystem& sys) const {
    ModuleElement out;
    for (const auto& [key, coeff] : terms_)
        out.add(key.first, sys.multiply(key.second, right), coeff);
    return out;
}

ModuleElement ModuleElement::star_dual() const {
    ModuleElement out;
    for (const auto& [key, coeff] : terms_)
        out.add(key.first.star_dual(), key.second.complemented(), coeff);
    return out;
}

long long ModuleElement::coefficient(const Cell& c, const Word& translate) const {
    auto it = terms_.find({c, translate});
    return it == terms_.end() ? 0 : it->second;
}

std::string ModuleElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, coeff] : terms_) {
        const long long mag = coeff < 0 ? -coeff : coeff;
        if (first) {
            if (coeff < 0) os << "-";
            first = false;
        } else {
            os << (coeff < 0 ? " - " : " + ");
        }
        if (mag != 1) os << mag << "*";
        os << key.first.str() << "∘"
           << (key.second.empty() ? std::string("1") : key.second.text());
    }
    return os.str();
}

namespace {

// Depth-first search for all v with (left, v) an edge pair: extend while the
// concatenation stays irreducible; when it first reduces, the extension is an
// edge-pair partner exactly when it is itself irreducible.
template <class Admit>
void collect_extensions(const RewritingSystem& sys, std::size_t max_right,
                        const Admit& admit, Word& ext, Word& whole, std::vector<Word>& out) {
    if (ext.size() >= max_right) return;
    for (unsigned c = 0; c < 2 * sys.rank(); ++c) {
        const Letter l = Letter::from_code(static_cast<std::uint8_t>(c));
        Word next_ext = ext.appended(l);
        if (!admit(next_ext)) continue;
        Word next_whole = whole.appended(l);
        if (sys.suffix_completes_lhs(next_whole)) {
            if (sys.is_irreducible(next_ext)) out.push_back(next_ext);
            continue;  // longer extensions would carry a reducible proper prefix
        }
        collect_extensions(sys, max_right, admit, next_ext, next_whole, out);
    }
}

void collect_irreducible(const RewritingSystem& sys, Word& w, std::size_t max_len,
                         std::vector<Word>& out) {
    if (!w.empty()) out.push_back(w);
    if (w.size() >= max_len) return;
    for (unsigned c = 0; c < 2 * sys.rank(); ++c) {
        Word next = w.appended(Letter::from_code(static_cast<std::uint8_t>(c)));
        if (sys.suffix_completes_lhs(next)) continue;
        collect_irreducible(sys, next, max_len, out);
    }
}

}  // namespace

std::vector<EdgePair> edge_pairs(const RewritingSystem& sys, std::size_t max_total_len) {
    std::vector<EdgePair> pairs;
    std::vector<Word> lefts;
    Word root;
    collect_irreducible(sys, root, max_total_len > 0 ? max_total_len - 1 : 0, lefts);
    for (const Word& left : lefts) {
        std::vector<Word> exts;
        Word ext, whole = left;
        collect_extensions(sys, max_total_len - left.size(),
                           [](const Word&) { return true; }, ext, whole, exts);
        for (Word& v : exts) pairs.push_back(EdgePair{left, std::move(v)});
    }
    std::sort(pairs.begin(), pairs.end(), [](const EdgePair& a, const EdgePair& b) {
        if (a.left != b.left) return a.left < b.left;
        return a.right < b.right;
    });
    return pairs;
}

std::optional<NamedShape> recognize(const Cell& c) {
    using Kind = NamedShape::Kind;
    const unsigned dim = c.dimension();
    if (dim == 0 || dim > 4) return std::nullopt;
    for (const Word& w : c.components())
        if (!w.is_binary()) return std::nullopt;

    if (c.component(0).size() != 1) return std::nullopt;
    const bool starred = c.component(0)[0].starred();

    // Normalize to the unstarred orientation and compare against patterns.
    const Cell base = starred ? c.star_dual() : c;
    const Letter a(0, false), as(0, true);

    if (dim == 1) return NamedShape{Kind::LetterCell, starred, 0, 0, 0};

    // Component 2 must be a^{i-1} A^i a^i.
    const Word& p = base.component(1);
    if ((p.size() + 1) % 3 != 0) return std::nullopt;
    const unsigned i = static_cast<unsigned>((p.size() + 1) / 3);
    if (i == 0 ||
        p != Word::repeated(a, i - 1) + Word::repeated(as, i) + Word::repeated(a, i))
        return std::nullopt;
    if (dim == 2) return NamedShape{Kind::X, starred, i, 0, 0};

    // Component 3: A^i, A^j a^j (j < i), or a^j A^k a^k (j < k <= i + j).
    const Word& q = base.component(2);
    NamedShape shape;
    shape.starred = starred;
    shape.i = i;
    if (q == Word::repeated(as, i)) {
        shape.kind = Kind::TypeI;
    } else {
        const auto runs = q.runs();
        if (runs.size() == 2 && runs[0].first == as && runs[1].first == a &&
            runs[0].second == runs[1].second && runs[0].second < i) {
            shape.kind = Kind::TypeII;
            shape.j = static_cast<unsigned>(runs[0].second);
        } else if (runs.size() == 3 && runs[0].first == a && runs[1].first == as &&
                   runs[2].first == a && runs[1].second == runs[2].second &&
                   runs[0].second < runs[1].second &&
                   runs[1].second <= shape.i + runs[0].second) {
            shape.kind = Kind::TypeIII;
            shape.j = static_cast<unsigned>(runs[0].second);
            shape.k = static_cast<unsigned>(runs[1].second);
        } else {
            return std::nullopt;
        }
    }
    if (dim == 3) return shape;

    // Component 4 must be the collapsing partner of the dimension-3 shape.
    const Word& w = base.component(3);
    switch (shape.kind) {
        case Kind::TypeI:
            if (w != Word::repeated(a, i) + Word::repeated(as, i)) return std::nullopt;
            shape.kind = Kind::ThetaI;
            return shape;
        case Kind::TypeII:
            if (w != Word::repeated(as, shape.j)) return std::nullopt;
            shape.kind = Kind::ThetaII;
            return shape;
        case Kind::TypeIII:
            if (w != Word::repeated(as, shape.k)) return std::nullopt;
            shape.kind = Kind::ThetaIII;
            return shape;
        default:
            return std::nullopt;
    }
}

namespace {

Word an(unsigned n) { return Word::repeated(Letter(0, false), n); }
Word An(unsigned n) { return Word::repeated(Letter(0, true), n); }

Cell maybe_dual(Cell c, bool starred) { return starred ? c.star_dual() : c; }

}  // namespace

Cell letter_cell(bool starred) { return Cell({Word::repeated(Letter(0, starred), 1)}); }

Cell x_cell(unsigned i, bool starred) {
    if (i == 0) throw std::invalid_argument("x_cell: i >= 1 required");
    return maybe_dual(Cell({an(1), an(i - 1) + An(i) + an(i)}), starred);
}

Cell type_one_cell(unsigned i, bool starred) {
    return maybe_dual(x_cell(i).extended(An(i)), starred);
}

Cell type_two_cell(unsigned i, unsigned j, bool starred) {
    if (!(1 <= j && j < i)) throw std::invalid_argument("type_two_cell: 1 <= j < i required");
    return maybe_dual(x_cell(i).extended(An(j) + an(j)), starred);
}

Cell type_three_cell(unsigned i, unsigned j, unsigned k, bool starred) {
    if (!(1 <= j && j < k && k <= i + j))
        throw std::invalid_argument("type_three_cell: 1 <= j < k <= i+j required");
    return maybe_dual(x_cell(i).extended(an(j) + An(k) + an(k)), starred);
}

Cell theta_one_cell(unsigned i, bool starred) {
    return maybe_dual(type_one_cell(i).extended(an(i) + An(i)), starred);
}

Cell theta_two_cell(unsigned i, unsigned j, bool starred) {
    return maybe_dual(type_two_cell(i, j).extended(An(j)), starred);
}

Cell theta_three_cell(unsigned i, unsigned j, unsigned k, bool starred) {
    return maybe_dual(type_three_cell(i, j, k).extended(An(k)), starred);
}

struct Resolution::Memo {
    std::mutex mutex;
    std::map<Cell, ModuleElement> boundaries;
    std::map<std::pair<Cell, Word>, ModuleElement> homotopies;
    std::map<unsigned, std::vector<Cell>> bases;
};

Resolution::Resolution(RewritingSystem sys, Truncation t)
    : sys_(std::move(sys)), trunc_(t), memo_(std::make_shared<Memo>()) {
    if (t.index_bound == 0) throw std::invalid_argument("Resolution: index bound must be >= 1");
}

void Resolution::check_admits(const Cell& c) const {
    if (c.dimension() > trunc_.dim_bound)
        throw TruncationError("truncation overflow: dimension of " + c.str() + " exceeds bound " +
                              std::to_string(trunc_.dim_bound));
    for (const Word& w : c.components())
        if (!trunc_.admits(w))
            throw TruncationError("truncation overflow: component " + w.text() + " of " + c.str() +
                                  " exceeds index bound " + std::to_string(trunc_.index_bound));
}

std::vector<Word> Resolution::edge_extensions(const Word& left) const {
    std::vector<Word> out;
    Word ext, whole = left;
    collect_extensions(sys_, trunc_.max_component_len(),
                       [this](const Word& e) { return trunc_.admits_prefix(e); }, ext, whole, out);
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<Cell>& Resolution::cells_dim(unsigned n) const {
    if (n == 0) throw std::invalid_argument("cells_dim: n >= 1 required");
    if (n > trunc_.dim_bound)
        throw TruncationError("cells_dim: dimension exceeds the truncation bound");
    {
        std::lock_guard<std::mutex> lock(memo_->mutex);
        auto it = memo_->bases.find(n);
        if (it != memo_->bases.end()) return it->second;
    }
    std::vector<Cell> cells;
    if (n == 1) {
        for (unsigned c = 0; c < 2 * sys_.rank(); ++c)
            cells.push_back(Cell({Word::repeated(Letter::from_code(static_cast<std::uint8_t>(c)), 1)}));
    } else {
        for (const Cell& base : cells_dim(n - 1))
            for (const Word& ext : edge_extensions(base.last()))
                cells.push_back(base.extended(ext));
        std::sort(cells.begin(), cells.end());
    }
    std::lock_guard<std::mutex> lock(memo_->mutex);
    return memo_->bases.emplace(n, std::move(cells)).first->second;
}

const ModuleElement& Resolution::boundary(const Cell& c) const {
    {
        std::lock_guard<std::mutex> lock(memo_->mutex);
        auto it = memo_->boundaries.find(c);
        if (it != memo_->boundaries.end()) return it->second;
    }
    ModuleElement result = compute_boundary(c);
    std::lock_guard<std::mutex> lock(memo_->mutex);
    return memo_->boundaries.emplace(c, std::move(result)).first->second;
}

ModuleElement Resolution::compute_boundary(const Cell& c) const {
    if (c.dimension() == 0)
        throw std::invalid_argument("boundary: the dimension-0 cell has the augmentation, not a boundary");
    check_admits(c);
    if (c.dimension() == 1) {
        // d_1(x) = () % x - () % 1.
        ModuleElement out;
        out.add(Cell{}, c.component(0), 1);
        out.add(Cell{}, Word{}, -1);
        return out;
    }
    const Cell front = c.prefix();
    const Word& last = c.last();
    ModuleElement correction = homotopy_applied(boundary(front).acted(last, sys_));
    ModuleElement out = ModuleElement::basis(front, last);
    out -= correction;
    return out;
}

const ModuleElement& Resolution::homotopy(const Cell& c, const Word& x) const {
    {
        std::lock_guard<std::mutex> lock(memo_->mutex);
        auto it = memo_->homotopies.find({c, x});
        if (it != memo_->homotopies.end()) return it->second;
    }
    ModuleElement result = compute_homotopy(c, x);
    std::lock_guard<std::mutex> lock(memo_->mutex);
    return memo_->homotopies.emplace(std::make_pair(c, x), std::move(result)).first->second;
}

ModuleElement Resolution::compute_homotopy(const Cell& c, const Word& x) const {
    if (!sys_.is_irreducible(x))
        throw std::invalid_argument("homotopy: translate must be irreducible");
    check_admits(c);

    if (c.dimension() == 0) {
        // i_1(x_1 ... x_k) = sum_t (x_t) % x_{t+1} ... x_k; i_1(1) = 0.
        ModuleElement out;
        for (std::size_t t = 0; t < x.size(); ++t)
            out.add(Cell({Word::repeated(x[t], 1)}), x.suffix_from(t + 1), 1);
        return out;
    }

    // Minimal p such that last . x[0..p) is reducible; the triggering lhs
    // always ends at the last letter, so the suffix test sees it.
    const Word& last = c.last();
    Word prefix_word = last;
    std::size_t p = 0;
    for (std::size_t t = 0; t < x.size(); ++t) {
        prefix_word = prefix_word.appended(x[t]);
        if (sys_.suffix_completes_lhs(prefix_word)) {
            p = t + 1;
            break;
        }
    }
    if (p == 0) return ModuleElement{};  // last . x is irreducible

    const Word v_next = x.prefix(p);
    const Word y = x.suffix_from(p);
    const Cell extended = c.extended(v_next);
    check_admits(extended);

    ModuleElement correction = homotopy_applied(boundary(c).acted(v_next, sys_));
    const std::size_t budget = c.total_length() + p;
    for (const auto& [key, coeff] : correction.terms()) {
        if (key.first.total_length() + key.second.size() >= budget)
            throw InvariantViolation("homotopy: correction term " + key.first.str() +
                                     " is not shorter than the extended cell");
    }

    ModuleElement out = ModuleElement::basis(extended, y);
    out += homotopy_applied(correction.acted(y, sys_));
    return out;
}

ModuleElement Resolution::boundary_applied(const ModuleElement& e) const {
    ModuleElement out;
    for (const auto& [key, coeff] : e.terms()) {
        const ModuleElement acted = boundary(key.first).acted(key.second, sys_);
        for (const auto& [bkey, bcoeff] : acted.terms())
            out.add(bkey.first, bkey.second, coeff * bcoeff);
    }
    return out;
}

ModuleElement Resolution::homotopy_applied(const ModuleElement& e) const {
    ModuleElement out;
    for (const auto& [key, coeff] : e.terms()) {
        ModuleElement lifted = homotopy(key.first, key.second);
        for (const auto& [lkey, lcoeff] : lifted.terms())
            out.add(lkey.first, lkey.second, coeff * lcoeff);
    }
    return out;
}

std::optional<ModuleElement> Resolution::closed_form_boundary(const Cell& c) const {
    const auto shape = recognize(c);
    if (!shape) return std::nullopt;
    using Kind = NamedShape::Kind;

    ModuleElement out;
    switch (shape->kind) {
        case Kind::LetterCell:
            return std::nullopt;
        case Kind::X: {
            const unsigned i = shape->i;
            for (unsigned s = 0; s < i; ++s) {
                out.add(letter_cell(false), an(s) + An(i) + an(i), 1);
                out.add(letter_cell(true), An(s) + an(i), 1);
            }
            break;
        }
        case Kind::TypeI:
            out.add(x_cell(shape->i), An(shape->i), 1);
            out.add(x_cell(shape->i, true), Word{}, -1);
            break;
        case Kind::TypeII:
            out.add(x_cell(shape->i), An(shape->j) + an(shape->j), 1);
            out.add(x_cell(shape->i), Word{}, -1);
            break;
        case Kind::TypeIII:
            out.add(x_cell(shape->i), an(shape->j) + An(shape->k) + an(shape->k), 1);
            out.add(x_cell(shape->i), an(shape->j), -1);
            break;
        case Kind::ThetaI:
            out.add(type_one_cell(shape->i), an(shape->i) + An(shape->i), 1);
            out.add(type_one_cell(shape->i, true), An(shape->i), 1);
            break;
        case Kind::ThetaII:
            out.add(type_two_cell(shape->i, shape->j), An(shape->j), 1);
            break;
        case Kind::ThetaIII:
            out.add(type_three_cell(shape->i, shape->j, shape->k), An(shape->k), 1);
            break;
    }
    return shape->starred ? out.star_dual() : out;
}

}  // namespace freestar
