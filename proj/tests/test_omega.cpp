#include "doctest.h"

#include "qgrass/omega.hpp"
#include "qgrass/qcomb.hpp"

#include <random>

using namespace qgrass;

namespace {

SuperTuple T(IVec a, IVec mu) { return SuperTuple{std::move(a), std::move(mu)}; }

OmegaElement random_element(const Shape& sh, std::mt19937& rng, int terms) {
    const Field& f = shape_field(sh);
    auto all = enumerate_all(sh);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    std::uniform_int_distribution<int> c(-3, 3);
    OmegaElement v{sh, {}};
    for (int k = 0; k < terms; ++k) v.add(all[pick(rng)], f.q_pow(c(rng)) * Rational(c(rng)));
    return v;
}

}  // namespace

TEST_CASE("products of generators") {
    Shape sh{2, 1, 3, 1};
    const Field& f = shape_field(sh);
    auto one = OmegaElement::monomial(sh, T({0, 0}, {0}), f.one());
    auto x1 = OmegaElement::monomial(sh, T({1, 0}, {0}), f.one());
    auto x2 = OmegaElement::monomial(sh, T({0, 1}, {0}), f.one());
    auto x3 = OmegaElement::monomial(sh, T({0, 0}, {1}), f.one());
    CHECK(multiply(one, x1) == x1);
    CHECK(multiply(x1, one) == x1);
    CHECK(multiply(x1, x1) == OmegaElement::monomial(sh, T({2, 0}, {0}), f.q() + f.q_pow(-1)));
    CHECK(multiply(x3, x3).is_zero());
    CHECK(multiply(x2, x1) == OmegaElement::monomial(sh, T({1, 1}, {0}), f.q()));
    CHECK(multiply(x1, x2) == OmegaElement::monomial(sh, T({1, 1}, {0}), f.one()));
    CHECK(multiply(multiply(x1, x1), x1).is_zero());

    Shape odd{1, 2, 3, 1};
    const Field& g = shape_field(odd);
    auto y1 = OmegaElement::monomial(odd, T({0}, {1, 0}), g.one());
    auto y2 = OmegaElement::monomial(odd, T({0}, {0, 1}), g.one());
    auto y12 = multiply(y1, y2);
    CHECK(y12 == OmegaElement::monomial(odd, T({0}, {1, 1}), g.one()));
    CHECK(multiply(y2, y1) == OmegaElement::monomial(odd, T({0}, {1, 1}), -g.q()));
}

TEST_CASE("truncated and untruncated products") {
    Shape sh{2, 1, 3, 1};
    CHECK_FALSE(monomial_product(sh, T({2, 0}, {0}), T({1, 0}, {0}), true).has_value());
    auto t = monomial_product(sh, T({1, 0}, {0}), T({3, 0}, {0}), false);
    REQUIRE(t.has_value());
    CHECK(t->tuple == T({4, 0}, {0}));
    CHECK(t->coef == q_binom(4, 1, shape_field(sh)));
    CHECK_FALSE(monomial_product(sh, T({2, 0}, {0}), T({2, 0}, {0}), false).has_value());
}

TEST_CASE("associativity on random elements") {
    std::mt19937 rng(3);
    for (const auto& sh : {Shape{2, 1, 3, 1}, Shape{2, 2, 3, 1}, Shape{3, 2, 3, 2}}) {
        for (int t = 0; t < 15; ++t) {
            auto a = random_element(sh, rng, 3), b = random_element(sh, rng, 3), c = random_element(sh, rng, 3);
            CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
            CHECK(multiply(multiply(a, b, false), c, false) == multiply(a, multiply(b, c, false), false));
        }
    }
}

TEST_CASE("generator action on monomials") {
    Shape sh{2, 1, 3, 2};
    const Field& f = shape_field(sh);
    auto fm = act_monomial(sh, {GenKind::F, 2}, T({1, 4}, {0}));
    REQUIRE(fm.has_value());
    CHECK(fm->tuple == T({1, 3}, {1}));
    CHECK(fm->coef == f.one());
    CHECK_FALSE(act_monomial(sh, {GenKind::F, 2}, T({1, 4}, {1})).has_value());
    auto em = act_monomial(sh, {GenKind::E, 2}, T({1, 3}, {1}));
    REQUIRE(em.has_value());
    CHECK(em->tuple == T({1, 4}, {0}));
    CHECK(em->coef == q_int(4, f));
    CHECK_FALSE(act_monomial(sh, {GenKind::E, 1}, T({4, 0}, {0})).has_value());
    auto e1 = act_monomial(sh, {GenKind::E, 1}, T({1, 2}, {0}));
    REQUIRE(e1.has_value());
    CHECK(e1->tuple == T({2, 1}, {0}));
    CHECK(e1->coef == q_int(2, f));
    auto k1 = act_monomial(sh, {GenKind::K, 1}, T({4, 1}, {1}));
    CHECK(k1->coef == f.q_pow(4));
    auto k3 = act_monomial(sh, {GenKind::K, 3}, T({4, 1}, {1}));
    CHECK(k3->coef == f.q_pow(-1));
    auto kinv = act_monomial(sh, {GenKind::Kinv, 1}, T({4, 1}, {1}));
    CHECK(kinv->coef == f.q_pow(-4));
    // e_1 on alpha_1 = box would leave the box
    CHECK_FALSE(act_monomial(sh, {GenKind::E, 1}, T({5, 1}, {0})).has_value());
    CHECK_THROWS_AS(validate(Generator{GenKind::E, 3}, sh), std::invalid_argument);
    CHECK_NOTHROW(validate(Generator{GenKind::K, 3}, sh));

    Shape two{2, 2, 3, 1};
    auto e3 = act_monomial(two, {GenKind::E, 3}, T({0, 0}, {0, 1}));
    REQUIRE(e3.has_value());
    CHECK(e3->tuple == T({0, 0}, {1, 0}));
    auto f3 = act_monomial(two, {GenKind::F, 3}, T({0, 0}, {1, 0}));
    REQUIRE(f3.has_value());
    CHECK(f3->tuple == T({0, 0}, {0, 1}));
}

TEST_CASE("graded pieces and their matrices") {
    Shape sh{2, 1, 3, 1};
    GradedPiece p0 = GradedPiece::build(sh, 0);
    ActionMatrices a0 = action_matrices(p0);
    CHECK(a0.dim == 1);
    for (const auto& e : a0.e) CHECK(e.is_zero());
    for (const auto& f : a0.f) CHECK(f.is_zero());
    for (const auto& k : a0.K) CHECK(k == SparseMatrix::identity(1, p0.field()));

    GradedPiece p3 = GradedPiece::build(sh, 3);
    std::mt19937 rng(9);
    for (int t = 0; t < 10; ++t) {
        OmegaElement v{sh, {}};
        std::uniform_int_distribution<int> pick(0, p3.dim() - 1), c(-4, 4);
        for (int k = 0; k < 3; ++k) v.add(p3.basis[pick(rng)], p3.field().from_int(c(rng)));
        CHECK(p3.element_of(p3.vector_of(v)) == v);
        ActionMatrices am = action_matrices(p3);
        for (const auto& g : am.labels(sh)) CHECK(p3.vector_of(act_generator(g, v)) == apply(am.get(g), p3.vector_of(v)));
    }
}

TEST_CASE("anticommutator relation on a small piece") {
    Shape sh{2, 1, 3, 1};
    GradedPiece p = GradedPiece::build(sh, 1);
    ActionMatrices am = action_matrices(p);
    const Field& f = p.field();
    REQUIRE(am.dim == 3);
    SparseMatrix lhs = am.e[1] * am.f[1] + am.f[1] * am.e[1];
    SparseMatrix rhs = (am.K[1] * am.Kinv[2] - am.Kinv[1] * am.K[2]).scaled((f.q() - f.q_pow(-1)).inverse());
    CHECK(lhs == rhs);
    CHECK((am.e[1] * am.e[1]).is_zero());
    CHECK((am.f[1] * am.f[1]).is_zero());
}

TEST_CASE("defining relations hold on every piece") {
    for (const auto& sh : {Shape{2, 1, 3, 1}, Shape{2, 1, 3, 2}, Shape{2, 2, 3, 1}}) {
        for (int s = 0; s <= sh.top_degree(); ++s) {
            GradedPiece p = GradedPiece::build(sh, s);
            RelationsReport rr = relations_check(action_matrices(p), p);
            INFO(sh.str() << " s=" << s);
            CHECK(rr.ok());
            for (const auto& fam : rr.families) CHECK(fam.failed == 0);
        }
    }
    Shape big{3, 2, 3, 2};
    GradedPiece p = GradedPiece::build(big, 9);
    RelationsReport rr = relations_check(action_matrices(p), p);
    CHECK(rr.ok());
    bool has_r7 = false;
    for (const auto& fam : rr.families) has_r7 = has_r7 || (fam.name == "R7" && fam.checked > 0);
    CHECK(has_r7);
}

TEST_CASE("relation checker rejects a corrupted action") {
    Shape sh{2, 1, 3, 2};
    GradedPiece p = GradedPiece::build(sh, 4);
    ActionMatrices am = action_matrices(p);
    auto nz = am.e[0].first_nonzero();
    REQUIRE(nz.has_value());
    am.e[0].add(nz->first, nz->second, p.field().one());
    CHECK_FALSE(relations_check(am, p).ok());
}

TEST_CASE("dimension checks") {
    CHECK(dim_check(Shape{2, 1, 3, 1}, 2).enumerated == 5);
    CHECK(dim_check(Shape{2, 1, 3, 1}, 2).formula == 5);
    CHECK(dim_check(Shape{2, 2, 5, 1}, 0).ok());
    CHECK(dim_check(Shape{3, 2, 3, 2}, 17).enumerated == 1);
    CHECK(dim_check(Shape{3, 2, 3, 2}, 17).ok());
}
