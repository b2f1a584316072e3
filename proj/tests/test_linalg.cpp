#include "doctest.h"

#include "qgrass/linalg.hpp"
#include "qgrass/omega.hpp"

#include <random>

using namespace qgrass;

namespace {

using Dense = std::vector<std::vector<CycNum>>;

// Plain dense Gaussian elimination, row by row.
int dense_rank(Dense a) {
    int rows = static_cast<int>(a.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[p], a[r]);
        CycNum inv = a[r][c].inverse();
        for (int i = r + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            CycNum k = a[i][c] * inv;
            for (int j = c; j < cols; ++j) a[i][j] -= k * a[r][j];
        }
        ++r;
    }
    return r;
}

Dense to_dense(const SparseMatrix& m, const Field& f) {
    Dense d(m.rows(), std::vector<CycNum>(m.cols(), f.zero()));
    for (int j = 0; j < m.cols(); ++j)
        for (const auto& [i, v] : m.col(j).e) d[i][j] = v;
    return d;
}

SparseMatrix random_matrix(int rows, int cols, int rank_cap, const Field& f, std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-2, 2), e(0, f.order() - 1);
    auto rnd = [&](int r, int k) {
        SparseMatrix m(r, k);
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < r; ++i) {
                int v = c(rng);
                if (v) m.add(i, j, f.q_pow(e(rng)) * Rational(v));
            }
        return m;
    };
    return rnd(rows, rank_cap) * rnd(rank_cap, cols);
}

Subspace random_subspace(int ambient, int gens, const Field& f, std::mt19937& rng) {
    SparseMatrix m = random_matrix(ambient, gens, std::max(1, gens - 1), f, rng);
    Subspace s(ambient);
    for (int j = 0; j < gens; ++j) s.insert(m.col(j));
    return s;
}

// Dimension of {X : XM = MX} from the full d^2 x d^2 system.
int commutant_dim_oracle(const std::vector<SparseMatrix>& mats, int d, const Field& f) {
    std::vector<SparseVec> rows;
    for (const auto& m : mats) {
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                // (XM - MX)_{ab} = sum_c X_ac M_cb - M_ac X_cb ; unknown X_ij at index j*d + i
                SparseMatrix row(1, d * d);
                for (int c = 0; c < d; ++c) {
                    CycNum mcb = m.get(c, b), mac = m.get(a, c);
                    if (!mcb.is_zero()) row.add(0, c * d + a, mcb);
                    if (!mac.is_zero()) row.add(0, b * d + c, -mac);
                }
                auto rv = row.row_vectors();
                if (!rv[0].empty()) rows.push_back(rv[0]);
            }
    }
    if (rows.empty()) return d * d;
    return nullspace(SparseMatrix::from_rows(d * d, rows), &f).dim();
}

}  // namespace

TEST_CASE("rank and nullspace basics") {
    const Field& f = Field::get(3);
    auto id = SparseMatrix::identity(4, f);
    CHECK(rank(id) == 4);
    CHECK(nullspace(id).dim() == 0);
    SparseMatrix zero(3, 5);
    CHECK(rank(zero) == 0);
    CHECK(nullspace(zero, &f).dim() == 5);
    SparseMatrix m(2, 2);
    m.add(0, 0, f.one());
    m.add(0, 1, f.q());
    m.add(1, 0, f.q_pow(-1));
    m.add(1, 1, f.one());
    CHECK(rank(m) == 1);
    CHECK(nullspace(m).dim() == 1);
}

TEST_CASE("rank against dense elimination") {
    std::mt19937 rng(17);
    for (int d : {3, 5, 6}) {
        const Field& f = Field::get(d);
        for (int t = 0; t < 25; ++t) {
            std::uniform_int_distribution<int> dim(1, 7);
            int r = dim(rng), c = dim(rng), k = dim(rng);
            SparseMatrix a = random_matrix(r, c, k, f, rng);
            int rk = rank(a);
            CHECK(rk == dense_rank(to_dense(a, f)));
            Subspace ker = nullspace(a, &f);
            CHECK(ker.dim() == c - rk);
            for (const auto& v : ker.basis()) CHECK(apply(a, v).empty());
            CHECK(image(a).dim() == rk);
            CHECK(rank(a.transpose()) == rk);
        }
    }
}

TEST_CASE("matrix algebra") {
    std::mt19937 rng(23);
    const Field& f = Field::get(5);
    for (int t = 0; t < 10; ++t) {
        SparseMatrix a = random_matrix(4, 4, 3, f, rng), b = random_matrix(4, 4, 4, f, rng),
                     c = random_matrix(4, 4, 2, f, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(power(a, 3) == a * a * a);
        CHECK(power(a, 1) == a);
        CHECK_THROWS(power(a, 0));
        CHECK((a * b).transpose() == b.transpose() * a.transpose());
    }
}

TEST_CASE("subspace lattice") {
    std::mt19937 rng(29);
    const Field& f = Field::get(3);
    Subspace zero(6);
    Subspace ambient = Subspace::full(6, f);
    for (int t = 0; t < 50; ++t) {
        std::uniform_int_distribution<int> g(1, 5);
        Subspace u = random_subspace(6, g(rng), f, rng), v = random_subspace(6, g(rng), f, rng);
        CHECK(sum(u, v).dim() + intersect(u, v).dim() == u.dim() + v.dim());
        CHECK(sum(u, zero) == u);
        CHECK(intersect(u, ambient) == u);
        CHECK(sum(u, v).contains(u));
        CHECK(u.contains(intersect(u, v)));
        CHECK(quotient_dim(sum(u, v), u) == sum(u, v).dim() - u.dim());
        for (const auto& b : u.basis()) {
            auto coords = u.coordinates(b);
            SparseVec back;
            auto basis = u.basis();
            for (size_t k = 0; k < basis.size(); ++k) axpy(back, coords[k], basis[k]);
            CHECK(back == b);
        }
    }
    CHECK(quotient_dim(ambient, zero) == 6);
    CHECK(ambient.is_coordinate());
}

TEST_CASE("commutants") {
    const Field& f = Field::get(3);
    CHECK(commutant({SparseMatrix::identity(3, f)}, 3, f).size() == 9);
    CHECK(commutant({}, 3, f).size() == 9);
    Shape sh{2, 1, 3, 1};
    GradedPiece p = GradedPiece::build(sh, 1);
    ActionMatrices am = action_matrices(p);
    auto gens = am.module_generators();
    CHECK(commutant(gens, am.dim, p.field()).size() == 1);

    std::mt19937 rng(31);
    for (int t = 0; t < 10; ++t) {
        std::vector<SparseMatrix> mats{random_matrix(4, 4, 2, f, rng)};
        if (t % 2) mats.push_back(SparseMatrix::diagonal({f.one(), f.one(), f.q(), f.q()}));
        auto basis = commutant(mats, 4, f);
        CHECK(static_cast<int>(basis.size()) == commutant_dim_oracle(mats, 4, f));
        for (const auto& x : basis)
            for (const auto& m : mats) CHECK(x * m == m * x);
    }
    for (const auto& shape : {Shape{2, 1, 3, 2}, Shape{2, 2, 3, 1}})
        for (int s : {2, 3, 4}) {
            GradedPiece q = GradedPiece::build(shape, s);
            ActionMatrices aq = action_matrices(q);
            auto g = aq.module_generators();
            CHECK(static_cast<int>(commutant(g, aq.dim, q.field()).size()) ==
                  commutant_dim_oracle(g, aq.dim, q.field()));
        }
}

TEST_CASE("local algebras") {
    const Field& f = Field::get(3);
    CHECK(is_local_algebra({SparseMatrix::identity(2, f)}, f));
    std::vector<SparseMatrix> full;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            SparseMatrix e(2, 2);
            e.add(i, j, f.one());
            full.push_back(e);
        }
    auto rep = local_algebra_report(full, f);
    CHECK_FALSE(rep.local);
    CHECK(rep.dim == 4);
    CHECK(rep.semisimple_dim == 4);
    SparseMatrix nil(2, 2);
    nil.add(0, 1, f.one());
    auto tri = local_algebra_report({SparseMatrix::identity(2, f), nil}, f);
    CHECK(tri.local);
    CHECK(tri.semisimple_dim == 1);
    auto diag = local_algebra_report({SparseMatrix::diagonal({f.one(), f.zero()}), SparseMatrix::identity(2, f)}, f);
    CHECK_FALSE(diag.local);
}
