#include "doctest.h"

#include "qgrass/derham.hpp"
#include "qgrass/qcomb.hpp"

#include <algorithm>
#include <map>
#include <random>

using namespace qgrass;

namespace {

XiIndex X(IVec b) { return XiIndex{std::move(b)}; }

DFormIndex F(IVec a, IVec c, IVec xi) { return DFormIndex{SuperTuple{std::move(a), std::move(c)}, XiIndex{std::move(xi)}}; }

}  // namespace

TEST_CASE("wedge of differentials") {
    const Field& f = Field::get(3);
    CHECK_FALSE(wedge(X({1, 0, 0}), X({1, 0, 0}), f).has_value());
    auto ji = wedge(X({0, 1, 0}), X({1, 0, 0}), f);
    REQUIRE(ji.has_value());
    CHECK(ji->xi == X({1, 1, 0}));
    CHECK(ji->coef == -f.q());
    auto ij = wedge(X({1, 0, 0}), X({0, 1, 0}), f);
    CHECK(ij->coef == f.one());
    // associativity of the wedge on all triples of 4 generators
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b)
            for (int c = 0; c < 16; ++c) {
                auto bits = [](int m) { return X({m & 1, (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1}); };
                auto ab = wedge(bits(a), bits(b), f);
                auto bc = wedge(bits(b), bits(c), f);
                auto left = ab ? wedge(ab->xi, bits(c), f) : std::nullopt;
                auto right = bc ? wedge(bits(a), bc->xi, f) : std::nullopt;
                REQUIRE(left.has_value() == right.has_value());
                if (left) CHECK(ab->coef * left->coef == bc->coef * right->coef);
            }
}

TEST_CASE("differential on low forms") {
    Shape sh{2, 1, 3, 1};
    const Field& f = Field::get(3);
    CHECK(apply_d(sh, F({0, 0}, {0}, {0, 0, 0})).empty());
    auto d3 = apply_d(sh, F({0, 0}, {1}, {0, 0, 0}));
    REQUIRE(d3.size() == 1);
    CHECK(d3[0].form == F({0, 0}, {0}, {0, 0, 1}));
    CHECK(d3[0].coef == f.one());
    auto d1 = apply_d(sh, F({1, 0}, {0}, {0, 0, 0}));
    REQUIRE(d1.size() == 1);
    CHECK(d1[0].form == F({0, 0}, {0}, {1, 0, 0}));
    auto d2 = apply_d(sh, F({1, 1}, {0}, {0, 0, 0}));
    REQUIRE(d2.size() == 2);
    CHECK(d2[1].coef == f.q());
    auto top = d_matrix(sh, 3);
    CHECK(top.rows() == 0);
    CHECK(top.is_zero());
}

TEST_CASE("basis order inside a degree") {
    Shape sh{2, 1, 3, 1};
    auto forms = enumerate_forms(sh, 2);
    CHECK(forms.size() == 18 * 3);
    CHECK(std::is_sorted(forms.begin(), forms.end()));
    CHECK(forms.front().xi.word() == std::vector<int>{1, 2});
    CHECK(forms.back().xi.word() == std::vector<int>{2, 3});
}

TEST_CASE("d squares to zero") {
    for (const auto& sh : {Shape{2, 1, 3, 1}, Shape{2, 1, 3, 2}, Shape{2, 2, 3, 1}, Shape{1, 2, 5, 1}}) {
        ComplexCheck cc = complex_check(sh);
        INFO(sh.str());
        CHECK(cc.ok);
        CHECK(cc.products == 2 * (sh.m + sh.n));
    }
}

TEST_CASE("partial derivatives q-commute") {
    Shape sh{2, 1, 3, 1};
    for (int s = 0; s <= sh.top_degree(); ++s) {
        ComplexCheck cc = partial_ops_check(sh, s);
        INFO("s=" << s);
        CHECK(cc.ok);
    }
    CHECK(partial_ops_check(Shape{2, 2, 3, 1}, 4).ok);
}

TEST_CASE("weight blocks") {
    Shape sh{2, 1, 3, 1};
    auto lam = SuperWeight::of(sh, {1, 0, 0});
    CHECK(enumerate_block(sh, lam, 0).size() == 1);
    CHECK(enumerate_block(sh, lam, 1).size() == 2);
    CHECK(enumerate_block(sh, lam, 2).size() == 1);
    CHECK(enumerate_block(sh, lam, 3).empty());
    auto full = SuperWeight::of(sh, {3, 3, 0});
    CHECK(full.k == 2);
    CHECK(enumerate_block(sh, full, 1).empty());
    auto zero = SuperWeight::of(sh, {0, 0, 0});
    CHECK(zero.is_zero());
    CHECK(enumerate_block(sh, zero, 0).size() == 1);
    CHECK_THROWS_AS(SuperWeight::of(sh, {0, 0, 2}), std::invalid_argument);

    for (const auto& shape : {Shape{2, 1, 3, 1}, Shape{2, 2, 3, 1}, Shape{2, 1, 3, 2}}) {
        BlockCheck bc = weight_blocks_check(shape);
        INFO(shape.str());
        CHECK(bc.ok());
        // independent grouping of every form by its weight
        for (int s = 0; s <= shape.m + shape.n; ++s) {
            std::map<IVec, std::vector<DFormIndex>> groups;
            for (const auto& w : enumerate_forms(shape, s)) groups[super_weight(shape, w).lambda].push_back(w);
            for (auto& [l, forms] : groups) {
                auto block = enumerate_block(shape, SuperWeight::of(shape, l), s);
                std::sort(forms.begin(), forms.end());
                CHECK(block == forms);
            }
            auto blocks = weight_blocks(shape, s);
            CHECK(blocks.size() == groups.size());
        }
    }
}

TEST_CASE("critical weights") {
    Shape sh{2, 1, 3, 1};
    auto c1 = critical_weights(sh, 1);
    REQUIRE(c1.size() == 3);
    std::vector<IVec> lams;
    for (const auto& c : c1) lams.push_back(c.weight.lambda);
    std::sort(lams.begin(), lams.end());
    CHECK(lams == std::vector<IVec>{{0, 0, 0}, {0, 3, 0}, {3, 0, 0}});
    auto c0 = critical_weights(sh, 0);
    REQUIRE(c0.size() == 1);
    CHECK(c0[0].weight.is_zero());
    for (const auto& shape : {Shape{2, 1, 3, 1}, Shape{2, 2, 3, 1}, Shape{3, 2, 3, 2}})
        for (int s = 0; s <= shape.m + shape.n; ++s) {
            auto cw = critical_weights(shape, s);
            CHECK(static_cast<long long>(cw.size()) == binomial(shape.m + shape.n, s));
            for (const auto& c : cw) {
                CHECK(c.weight.critical(shape));
                CHECK(apply_d(shape, c.form).empty());
                CHECK(super_weight(shape, c.form) == c.weight);
            }
        }
}

TEST_CASE("cohomology of truncated complexes") {
    struct Case {
        Shape sh;
        std::vector<long long> betti;
    };
    for (const auto& c : {Case{{2, 1, 3, 1}, {1, 3, 3, 1}}, Case{{2, 2, 3, 1}, {1, 4, 6, 4, 1}},
                          Case{{2, 1, 3, 2}, {1, 3, 3, 1}}, Case{{1, 1, 5, 2}, {1, 2, 1}}}) {
        CohomologyTable tab = cohomology(c.sh);
        INFO(c.sh.str());
        std::vector<long long> h;
        for (const auto& r : tab.rows) h.push_back(r.dim_H);
        CHECK(h == c.betti);
        CHECK(tab.ok());
        for (const auto& r : tab.rows) CHECK(r.critical == r.expected);
        CHECK(static_cast<long long>(tab.critical_forms.size()) == (1LL << (c.sh.m + c.sh.n)));
    }
}

TEST_CASE("exactness of single weight blocks") {
    PoincareReport a = poincare_check(2, 1, 3, {1, 0, 0});
    CHECK(a.exact);
    CHECK(a.shape.r == 2);
    CHECK(std::vector<long long>(a.dims.begin(), a.dims.begin() + 3) == std::vector<long long>{1, 2, 1});
    CHECK(std::vector<long long>(a.ranks.begin(), a.ranks.begin() + 2) == std::vector<long long>{1, 1});
    PoincareReport b = poincare_check(2, 1, 3, {2, 2, 1});
    CHECK(b.exact);
    CHECK(b.shape.r * 3 > 4 + 3);
    // the same weight is already exact at r = 2, where no coordinate reaches r*ell
    Shape r2{2, 1, 3, 2};
    auto lam = SuperWeight::of(r2, {2, 2, 1});
    CHECK_FALSE(lam.critical(r2));
    for (int s = -1; s < 3; ++s) {
        auto src = enumerate_block(r2, lam, s), mid = enumerate_block(r2, lam, s + 1),
             dst = enumerate_block(r2, lam, s + 2);
        int in = (src.empty() || mid.empty()) ? 0 : rank(d_matrix(r2, src, mid));
        int out = (mid.empty() || dst.empty()) ? 0 : rank(d_matrix(r2, mid, dst));
        CHECK(static_cast<int>(mid.size()) - in - out == 0);
    }
    CHECK_THROWS_AS(poincare_check(2, 1, 3, {0, 0, 0}), std::invalid_argument);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> ev(0, 7), bit(0, 1);
    for (int t = 0; t < 10; ++t) {
        IVec l{ev(rng), ev(rng), bit(rng), bit(rng)};
        if (std::all_of(l.begin(), l.end(), [](int v) { return v == 0; })) l[0] = 1;
        CHECK(poincare_check(2, 2, 3, l).exact);
    }
}
