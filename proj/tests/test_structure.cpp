#include "doctest.h"

#include "qgrass/structure.hpp"

#include <random>

using namespace qgrass;

namespace {

SuperTuple T(IVec a, IVec mu) { return SuperTuple{std::move(a), std::move(mu)}; }

struct Piece {
    GradedPiece piece;
    ActionMatrices am;
    ModuleAction mod;
};

Piece make(const Shape& sh, int s) {
    Piece p{GradedPiece::build(sh, s), {}, {}};
    p.am = action_matrices(p.piece);
    p.mod = module_of(p.piece, p.am);
    return p;
}

SparseVec unit_of(const Piece& p, const SuperTuple& t) {
    int k = p.piece.find(t);
    REQUIRE(k >= 0);
    return SparseVec::unit(k, p.piece.field());
}

// Conjugates every generator by a random unipotent change of basis.
ModuleAction conjugate(const ModuleAction& mod, std::mt19937& rng, SparseMatrix* p_out, SparseMatrix* pinv_out) {
    const Field& f = *mod.field;
    std::uniform_int_distribution<int> c(-2, 2);
    SparseMatrix n(mod.dim, mod.dim);
    for (int j = 0; j < mod.dim; ++j)
        for (int i = 0; i < j; ++i)
            if (int v = c(rng); v != 0 && (i + j) % 3 == 0) n.add(i, j, f.from_int(v));
    SparseMatrix id = SparseMatrix::identity(mod.dim, f);
    SparseMatrix p = id + n, pinv = id, term = id;
    for (int k = 1; k < mod.dim; ++k) {
        term = (term * n).scaled(f.from_int(-1));
        pinv = pinv + term;
    }
    REQUIRE(p * pinv == id);
    ModuleAction out;
    out.dim = mod.dim;
    out.field = mod.field;
    out.monomial = false;
    for (const auto& x : mod.raising) out.raising.push_back(pinv * x * p);
    for (const auto& x : mod.all) out.all.push_back(pinv * x * p);
    *p_out = p;
    *pinv_out = pinv;
    return out;
}

}  // namespace

TEST_CASE("cyclic closures") {
    Shape sh{2, 1, 3, 1};
    for (int s = 0; s <= sh.top_degree(); ++s) {
        Piece p = make(sh, s);
        SparseVec top = SparseVec::unit(p.piece.dim() - 1, p.piece.field());
        CHECK(cyclic_closure(top, p.mod).space.dim() == p.piece.dim());
    }
    Piece p = make(Shape{3, 2, 3, 2}, 3);
    auto eta = eta_repr(Shape{3, 2, 3, 2}, {0, 0, 0}, 3);
    CHECK(cyclic_closure(unit_of(p, eta), p.mod).space.dim() == dim_restricted(3, 2, 3, 3));
    CHECK_THROWS_AS(cyclic_closure(SparseVec{}, p.mod), std::invalid_argument);
    auto cm = cyclic_closure(unit_of(p, eta), p.mod);
    CHECK(is_invariant(p.mod, cm.space));
}

TEST_CASE("restricted pieces are simple") {
    for (const auto& sh : {Shape{2, 1, 3, 1}, Shape{3, 2, 3, 1}, Shape{2, 2, 5, 1}}) {
        for (int s = 0; s <= sh.top_degree(); ++s) {
            Piece p = make(sh, s);
            SimplicityReport sr = simplicity_report(p.mod);
            INFO(sh.str() << " s=" << s);
            CHECK(sr.simple);
            CHECK(sr.consistent);
            CHECK(sr.highest_weight_test);
        }
    }
}

TEST_CASE("higher energy monomials generate non-simple modules") {
    Shape sh{3, 2, 3, 2};
    Piece p = make(sh, 10);
    auto lo = cyclic_closure(unit_of(p, eta_repr(sh, {1, 0, 0}, 10)), p.mod);
    CHECK(simplicity_certify(lo, p.mod));
    auto hi = cyclic_closure(unit_of(p, eta_repr(sh, {1, 1, 0}, 10)), p.mod);
    CHECK_FALSE(simplicity_certify(hi, p.mod));
    CHECK_FALSE(simplicity_report(p.mod).simple);
}

TEST_CASE("restriction and quotient") {
    Piece p = make(Shape{2, 1, 3, 2}, 4);
    const Field& f = p.piece.field();
    Subspace line(p.mod.dim);
    line.insert(SparseVec::unit(0, f));
    line.insert(SparseVec::unit(p.mod.dim - 1, f));
    if (!is_invariant(p.mod, line)) CHECK_THROWS_AS(restrict_to(p.mod, line), std::invalid_argument);
    auto cm = cyclic_closure(SparseVec::unit(0, f), p.mod);
    ModuleAction sub = restrict_to(p.mod, cm.space);
    CHECK(sub.dim == cm.space.dim());
    QuotientModule q = quotient(p.mod, cm.space);
    CHECK(q.action.dim == p.mod.dim - cm.space.dim());
    ModuleAction sum = direct_sum(sub, q.action);
    CHECK(sum.dim == p.mod.dim);
}

TEST_CASE("energy filtration") {
    Shape big{3, 2, 3, 2};
    Piece p = make(big, 10);
    FiltrationReport fr = edeg_filtration(p.piece, p.am);
    CHECK(fr.E0 == 1);
    CHECK(fr.E == 3);
    CHECK(fr.loewy_length == 3);
    CHECK(fr.ok());
    CHECK(fr.layer_dims == std::vector<int>{15, 78, 5});
    Piece one = make(big, 1);
    FiltrationReport f1 = edeg_filtration(one.piece, one.am);
    CHECK(f1.loewy_length == 1);
    CHECK(f1.chain.front().dim() == one.piece.dim());
    for (const auto& sh : {Shape{2, 1, 3, 2}, Shape{2, 2, 3, 2}})
        for (int s = 0; s <= sh.top_degree(); ++s) {
            Piece q = make(sh, s);
            FiltrationReport r = edeg_filtration(q.piece, q.am);
            INFO(sh.str() << " s=" << s);
            CHECK(r.ok());
            CHECK(r.layer_multiplicities == r.multiplicity_formula);
        }
}

TEST_CASE("socle certificates") {
    Shape big{3, 2, 3, 2};
    Piece p12 = make(big, 12);
    SocleCertificate c12 = socle_certify(p12.piece, p12.am);
    CHECK(c12.ok());
    CHECK(c12.summands == 3);
    CHECK_FALSE(c12.probabilistic);
    Piece p5 = make(big, 5);
    SocleCertificate c5 = socle_certify(p5.piece, p5.am);
    CHECK(c5.ok());
    CHECK(c5.summands == 1);
    CHECK(c5.socle.dim() == dim_restricted(3, 2, 3, 5));
    Piece p1 = make(big, 1);
    SocleCertificate c1 = socle_certify(p1.piece, p1.am);
    CHECK(c1.ok());
    CHECK(c1.socle.dim() == p1.piece.dim());

    // a candidate that is too large fails step (b), one that is too small fails (c)
    Subspace everything = Subspace::full(p12.mod.dim, p12.piece.field());
    CHECK_FALSE(certify_socle(p12.mod, everything, {SparseVec::unit(0, p12.piece.field())}).ok());
    SparseVec g0 = unit_of(p12, eta_repr(big, {0, 1, 1}, 12));
    Subspace part = cyclic_closure(g0, p12.mod).space;
    SocleCertificate small = certify_socle(p12.mod, part, {g0});
    CHECK(small.invariant);
    CHECK(small.summands_simple);
    CHECK_FALSE(small.exclusion);
}

TEST_CASE("socle certificate after a change of basis") {
    std::mt19937 rng(41);
    Shape big{3, 2, 3, 2};
    Piece p = make(big, 12);
    SocleCertificate plain = socle_certify(p.piece, p.am);
    SparseMatrix P, Pinv;
    ModuleAction twisted = conjugate(p.mod, rng, &P, &Pinv);
    Subspace s(twisted.dim);
    for (const auto& v : plain.socle.basis()) s.insert(apply(Pinv, v));
    std::vector<SparseVec> gens;
    for (const auto& kv : k_set(big, 2)) gens.push_back(apply(Pinv, unit_of(p, eta_repr(big, kv, 12))));
    SocleCertificate cert = certify_socle(twisted, s, gens);
    CHECK(cert.probabilistic);
    CHECK(cert.ok());
}

TEST_CASE("indecomposability") {
    Shape sh{2, 1, 3, 2};
    for (int s = 0; s <= sh.top_degree(); ++s) {
        Piece p = make(sh, s);
        CHECK(indecomposability_certify(p.piece, p.am));
    }
    Piece a = make(sh, 4), b = make(sh, 4);
    CHECK_FALSE(indecomposable(direct_sum(a.mod, b.mod)));
    Piece c = make(sh, 3);
    Piece d = make(sh, 3);
    LocalAlgebraReport rep;
    CHECK_FALSE(indecomposable(direct_sum(c.mod, d.mod), &rep));
    CHECK(rep.semisimple_dim > 1);
    Shape big{3, 2, 3, 2};
    for (int s : {5, 10, 12}) {
        Piece p = make(big, s);
        CHECK(indecomposability_certify(p.piece, p.am));
    }
}

TEST_CASE("socle filtration") {
    Shape sh{2, 1, 3, 2};
    for (int s = 0; s <= sh.top_degree(); ++s) {
        Piece p = make(sh, s);
        INFO("s=" << s);
        CHECK(socle_filtration_check(p.piece, p.am).ok());
    }
    Piece p = make(Shape{3, 2, 3, 2}, 10);
    SocleFiltrationReport rep = socle_filtration_check(p.piece, p.am);
    CHECK(rep.levels.size() == 3);
    CHECK(rep.ok());
}

TEST_CASE("equivalent and dominated monomials") {
    Shape sh{2, 1, 3, 2};
    Piece p = make(sh, 4);
    auto a = cyclic_closure(unit_of(p, T({3, 0}, {1})), p.mod).space;
    auto b = cyclic_closure(unit_of(p, T({4, 0}, {0})), p.mod).space;
    CHECK(a == b);
    Piece q = make(sh, 6);
    auto big = cyclic_closure(unit_of(q, T({3, 3}, {0})), q.mod).space;
    auto small = cyclic_closure(unit_of(q, T({5, 1}, {0})), q.mod).space;
    CHECK(big.contains(small));
    CHECK(big.dim() > small.dim());
    for (const auto& shape : {Shape{2, 1, 3, 2}, Shape{2, 2, 3, 2}})
        for (int s = 0; s <= shape.top_degree(); ++s) {
            Piece r = make(shape, s);
            INFO(shape.str() << " s=" << s);
            CHECK(energy_order_check(r.piece, r.am).ok());
        }
}

TEST_CASE("inclusion net") {
    Shape big{3, 2, 3, 2};
    Piece p = make(big, 12);
    InclusionNet net = inclusion_net(p.piece, p.am);
    CHECK(net.ok());
    REQUIRE(net.vertices.size() == 4);
    int top = -1;
    for (size_t k = 0; k < net.vertices.size(); ++k)
        if (net.vertices[k].kappa == EnergyVector{1, 1, 1}) top = static_cast<int>(k);
    REQUIRE(top >= 0);
    CHECK(net.edges.size() == 3);
    for (const auto& e : net.edges) {
        CHECK(e.to == top);
        CHECK(e.componentwise);
    }
    std::string dot = net.dot();
    CHECK(dot.find("digraph") == 0);
    CHECK(dot.find("kappa=111") != std::string::npos);
    for (int s = 0; s <= big.top_degree(); ++s) {
        Piece q = make(big, s);
        CHECK(inclusion_net(q.piece, q.am).ok());
    }
}
