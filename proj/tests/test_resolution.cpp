#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "freestar/resolution.hpp"

using namespace freestar;

namespace {

Word W(const char* text) { return Word::from_text(text); }

Resolution make_res(unsigned n, unsigned d = 4) {
    return Resolution(RewritingSystem::r1(), Truncation{n, d});
}

ModuleElement basis1(const char* cell_text, const char* translate) {
    return ModuleElement::basis(Cell({W(cell_text)}), W(translate));
}

}  // namespace

TEST_CASE("cell basics") {
    const Cell unit;
    CHECK(unit.dimension() == 0);
    CHECK(unit.str() == "()");

    const Cell x1 = x_cell(1);
    CHECK(x1.dimension() == 2);
    CHECK(x1.str() == "(a|Aa)");
    CHECK(x1.star_dual().str() == "(A|aA)");
    CHECK(x1.total_length() == 3);
    CHECK(x_cell(2).str() == "(a|aAAaa)");
    CHECK_THROWS_AS(Cell({Word{}}), std::invalid_argument);
}

TEST_CASE("edge pairs") {
    const auto r1 = RewritingSystem::r1();
    const auto pairs3 = edge_pairs(r1, 3);
    const std::set<std::pair<std::string, std::string>> got3 = [&] {
        std::set<std::pair<std::string, std::string>> s;
        for (const auto& p : pairs3) s.insert({p.left.text(), p.right.text()});
        return s;
    }();
    CHECK(got3.count({"a", "Aa"}) == 1);
    CHECK(got3.count({"A", "aA"}) == 1);
    CHECK(got3.count({"a", "a"}) == 0);  // "aa" is irreducible
    CHECK(got3 == std::set<std::pair<std::string, std::string>>{
                      {"a", "Aa"}, {"A", "aA"}, {"Aa", "A"}, {"aA", "a"}});

    const auto pairs4 = edge_pairs(r1, 4);
    bool found = false;
    for (const auto& p : pairs4) found = found || (p.left == W("Aa") && p.right == W("A"));
    CHECK(found);

    // Every claimed pair satisfies the definition.
    for (const auto& p : edge_pairs(r1, 8)) {
        CHECK(r1.is_irreducible(p.left));
        CHECK(r1.is_irreducible(p.right));
        const Word joined = p.left + p.right;
        CHECK_FALSE(r1.is_irreducible(joined));
        for (std::size_t len = 1; len < joined.size(); ++len)
            CHECK(r1.is_irreducible(joined.prefix(len)));
    }
}

TEST_CASE("cell bases per dimension") {
    auto res = make_res(2);
    const auto dim1 = res.cells_dim(1);
    REQUIRE(dim1.size() == 2);
    CHECK(dim1[0].str() == "(a)");
    CHECK(dim1[1].str() == "(A)");

    const auto dim2 = res.cells_dim(2);
    std::set<std::string> got;
    for (const Cell& c : dim2) got.insert(c.str());
    CHECK(got == std::set<std::string>{"(a|Aa)", "(a|aAAaa)", "(A|aA)", "(A|AaaAA)"});

    // Truncation 1 in dimension 3: exactly the two type-I cells.
    auto res1 = make_res(1);
    const auto dim3 = res1.cells_dim(3);
    std::set<std::string> got3;
    for (const Cell& c : dim3) got3.insert(c.str());
    CHECK(got3 == std::set<std::string>{"(a|Aa|A)", "(A|aA|a)"});

    CHECK_THROWS_AS(res.cells_dim(0), std::invalid_argument);
    CHECK_THROWS_AS(res.cells_dim(5), TruncationError);
}

TEST_CASE("dimension-3 cells are exactly the named types") {
    for (unsigned n = 1; n <= 5; ++n) {
        auto res = make_res(n);
        for (const Cell& c : res.cells_dim(3)) {
            const auto shape = recognize(c);
            REQUIRE(shape.has_value());
            const bool named = shape->kind == NamedShape::Kind::TypeI ||
                               shape->kind == NamedShape::Kind::TypeII ||
                               shape->kind == NamedShape::Kind::TypeIII;
            CHECK(named);
        }
        // and conversely every named cell with indices <= n is in the basis
        const auto& basis = res.cells_dim(3);
        const std::set<Cell> basis_set(basis.begin(), basis.end());
        for (unsigned i = 1; i <= n; ++i) {
            CHECK(basis_set.count(type_one_cell(i)) == 1);
            CHECK(basis_set.count(type_one_cell(i, true)) == 1);
            for (unsigned j = 1; j < i; ++j) CHECK(basis_set.count(type_two_cell(i, j)) == 1);
            for (unsigned j = 1; j <= n; ++j)
                for (unsigned k = j + 1; k <= std::min(i + j, n); ++k)
                    CHECK(basis_set.count(type_three_cell(i, j, k)) == 1);
        }
    }
}

TEST_CASE("shape recognition round trips") {
    CHECK(recognize(x_cell(3))->kind == NamedShape::Kind::X);
    CHECK(recognize(x_cell(3))->i == 3);
    CHECK(recognize(x_cell(3, true))->starred);

    const auto t3 = recognize(type_three_cell(2, 1, 3));
    REQUIRE(t3.has_value());
    CHECK(t3->kind == NamedShape::Kind::TypeIII);
    CHECK(t3->i == 2);
    CHECK(t3->j == 1);
    CHECK(t3->k == 3);

    const auto th2 = recognize(theta_two_cell(3, 2, true));
    REQUIRE(th2.has_value());
    CHECK(th2->kind == NamedShape::Kind::ThetaII);
    CHECK(th2->starred);

    CHECK_FALSE(recognize(Cell({W("a"), W("Aa"), W("A"), W("aaAA")})).has_value());
    CHECK_THROWS_AS(type_two_cell(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(type_three_cell(1, 2, 2), std::invalid_argument);
}

TEST_CASE("boundary of letters") {
    auto res = make_res(2);
    const auto d_a = res.boundary(Cell({W("a")}));
    ModuleElement expected;
    expected.add(Cell{}, W("a"), 1);
    expected.add(Cell{}, Word{}, -1);
    CHECK(d_a == expected);
    CHECK(d_a.str() == "-()∘1 + ()∘a");

    // augmentation of d(a) is zero: the coefficients sum to zero
    long long total = 0;
    for (const auto& [key, coeff] : d_a.terms()) total += coeff;
    CHECK(total == 0);
}

TEST_CASE("contracting homotopy in low dimension") {
    auto res = make_res(2);

    CHECK(res.homotopy(Cell{}, Word{}).is_zero());
    CHECK(res.homotopy(Cell{}, W("aA")) == basis1("a", "A") + basis1("A", ""));
    CHECK(res.homotopy(Cell{}, W("Aa")) == basis1("A", "a") + basis1("a", ""));

    CHECK(res.homotopy(Cell({W("a")}), W("a")).is_zero());
    CHECK(res.homotopy(Cell({W("a")}), W("Aa")) == ModuleElement::basis(x_cell(1), Word{}));
    CHECK(res.homotopy(Cell({W("A")}), W("aA")) == ModuleElement::basis(x_cell(1, true), Word{}));

    CHECK_THROWS_AS(res.homotopy(Cell{}, W("aAa")), std::invalid_argument);
}

TEST_CASE("boundary matches the first lemma") {
    auto res = make_res(3);
    // d(X_1) = (a) % Aa + (A) % a
    CHECK(res.boundary(x_cell(1)) == basis1("a", "Aa") + basis1("A", "a"));

    // d(X_2) = (a) % (AAaa + aAAaa) + (A) % (aa + Aaa)
    const ModuleElement expected2 = basis1("a", "AAaa") + basis1("a", "aAAaa") +
                                    basis1("A", "aa") + basis1("A", "Aaa");
    CHECK(res.boundary(x_cell(2)) == expected2);

    // d(X_1, A) = X_1 % A - X_1*
    const ModuleElement expected3 =
        ModuleElement::basis(x_cell(1), W("A")) - ModuleElement::basis(x_cell(1, true), Word{});
    CHECK(res.boundary(type_one_cell(1)) == expected3);

    // chain condition instance
    CHECK(res.boundary_applied(res.boundary(x_cell(1))).is_zero());
}

TEST_CASE("closed forms match the recursion everywhere they apply") {
    auto res = make_res(3);
    std::size_t checked = 0;
    for (unsigned dim = 2; dim <= 4; ++dim) {
        for (const Cell& c : res.cells_dim(dim)) {
            const auto closed = res.closed_form_boundary(c);
            if (!closed) continue;
            CHECK(*closed == res.boundary(c));
            ++checked;
        }
    }
    CHECK(checked > 20);

    // The dimension-4 lemma shapes, spelled out.
    CHECK(*res.closed_form_boundary(theta_one_cell(1)) ==
          ModuleElement::basis(type_one_cell(1), W("aA")) +
              ModuleElement::basis(type_one_cell(1, true), W("A")));
    CHECK(*res.closed_form_boundary(theta_two_cell(2, 1)) ==
          ModuleElement::basis(type_two_cell(2, 1), W("A")));
    CHECK(*res.closed_form_boundary(theta_three_cell(2, 1, 2)) ==
          ModuleElement::basis(type_three_cell(2, 1, 2), W("AA")));
}

TEST_CASE("chain condition across the truncation") {
    auto res = make_res(3);
    for (unsigned dim = 2; dim <= 4; ++dim)
        for (const Cell& c : res.cells_dim(dim))
            CHECK(res.boundary_applied(res.boundary(c)).is_zero());
}

TEST_CASE("homotopy identity on low-dimensional basis elements") {
    auto res = make_res(3);
    const auto translates = irreducible_words(res.system(), 6);
    for (unsigned dim = 1; dim <= 2; ++dim) {
        for (const Cell& c : res.cells_dim(dim)) {
            if (c.total_length() > 8) continue;
            for (const Word& x : translates) {
                if (c.total_length() + x.size() > 8) continue;
                ModuleElement lhs = res.boundary_applied(res.homotopy(c, x));
                lhs += res.homotopy_applied(res.boundary(c).acted(x, res.system()));
                CHECK(lhs == ModuleElement::basis(c, x));
            }
        }
    }
}

TEST_CASE("star duality commutes with the boundary") {
    auto res = make_res(3);
    for (unsigned dim = 2; dim <= 4; ++dim)
        for (const Cell& c : res.cells_dim(dim))
            CHECK(res.boundary(c).star_dual() == res.boundary(c.star_dual()));
}

TEST_CASE("truncation overflow is loud") {
    auto res = make_res(1);
    CHECK_THROWS_AS(res.boundary(x_cell(2)), TruncationError);
    CHECK_THROWS_AS(res.homotopy(Cell({W("a")}), W("aAAaa")), TruncationError);

    // In-range requests do not throw.
    CHECK_NOTHROW(res.boundary(x_cell(1)));
}

TEST_CASE("module element arithmetic and rendering") {
    ModuleElement e;
    e.add(x_cell(1), Word{}, 2);
    e.add(x_cell(1), Word{}, -2);
    CHECK(e.is_zero());

    ModuleElement f = ModuleElement::basis(x_cell(1), W("A"), 3) -
                      ModuleElement::basis(x_cell(1, true), Word{});
    CHECK(f.term_count() == 2);
    CHECK(f.coefficient(x_cell(1), W("A")) == 3);
    CHECK(f.coefficient(x_cell(1, true), Word{}) == -1);
    CHECK(f.str() == "3*(a|Aa)∘A - (A|aA)∘1");
    CHECK((-f).coefficient(x_cell(1), W("A")) == -3);
    CHECK(ModuleElement{}.str() == "0");

    // the right action renormalizes translates
    const auto sys = RewritingSystem::r1();
    const ModuleElement acted = ModuleElement::basis(x_cell(1), W("A")).acted(W("aA"), sys);
    CHECK(acted == ModuleElement::basis(x_cell(1), W("A")));
}
