#include "qgrass/structure.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qgrass {

ModuleAction module_of(const GradedPiece& piece, const ActionMatrices& am) {
    ModuleAction mod;
    mod.dim = am.dim;
    mod.field = &piece.field();
    mod.raising = am.e;
    mod.all = am.module_generators();
    mod.monomial = true;
    return mod;
}

ModuleAction restrict_to(const ModuleAction& mod, const Subspace& n) {
    ModuleAction out;
    out.dim = n.dim();
    out.field = mod.field;
    out.monomial = mod.monomial && n.is_coordinate();
    auto basis = n.basis();
    auto piv = n.pivots();
    auto restrict_one = [&](const SparseMatrix& x) {
        SparseMatrix r(out.dim, out.dim);
        for (int j = 0; j < out.dim; ++j) {
            SparseVec img = apply(x, basis[j]);
            if (!n.member(img)) throw std::invalid_argument("restrict_to: subspace is not invariant");
            SparseVec c;
            for (int a = 0; a < out.dim; ++a) {
                CycNum v = img.get(piv[a]);
                if (!v.is_zero()) c.e.emplace_back(a, v);
            }
            r.set_col(j, std::move(c));
        }
        return r;
    };
    for (const auto& x : mod.raising) out.raising.push_back(restrict_one(x));
    for (const auto& x : mod.all) out.all.push_back(restrict_one(x));
    return out;
}

QuotientModule quotient(const ModuleAction& mod, const Subspace& v) {
    QuotientModule q;
    std::vector<int> pos(mod.dim, -1);
    std::vector<char> is_pivot(mod.dim, 0);
    for (int p : v.raw_pivots()) is_pivot[p] = 1;
    for (int c = 0; c < mod.dim; ++c)
        if (!is_pivot[c]) {
            pos[c] = static_cast<int>(q.columns.size());
            q.columns.push_back(c);
        }
    int d = static_cast<int>(q.columns.size());
    q.action.dim = d;
    q.action.field = mod.field;
    q.action.monomial = mod.monomial && v.is_coordinate();
    auto project = [&](const SparseMatrix& x) {
        SparseMatrix r(d, d);
        for (int b = 0; b < d; ++b) {
            SparseVec w = v.reduce(x.col(q.columns[b]));
            SparseVec c;
            for (const auto& [i, val] : w.e) c.e.emplace_back(pos[i], val);
            r.set_col(b, std::move(c));
        }
        return r;
    };
    for (const auto& x : mod.raising) q.action.raising.push_back(project(x));
    for (const auto& x : mod.all) q.action.all.push_back(project(x));
    return q;
}

ModuleAction direct_sum(const ModuleAction& a, const ModuleAction& b) {
    if (a.all.size() != b.all.size() || a.raising.size() != b.raising.size())
        throw std::invalid_argument("direct_sum: generator lists differ");
    ModuleAction out;
    out.dim = a.dim + b.dim;
    out.field = a.field ? a.field : b.field;
    out.monomial = a.monomial && b.monomial;
    auto block = [&](const SparseMatrix& x, const SparseMatrix& y) {
        SparseMatrix r(out.dim, out.dim);
        for (int j = 0; j < a.dim; ++j) r.set_col(j, x.col(j));
        for (int j = 0; j < b.dim; ++j) {
            SparseVec c;
            for (const auto& [i, v] : y.col(j).e) c.e.emplace_back(i + a.dim, v);
            r.set_col(a.dim + j, std::move(c));
        }
        return r;
    };
    for (size_t k = 0; k < a.raising.size(); ++k) out.raising.push_back(block(a.raising[k], b.raising[k]));
    for (size_t k = 0; k < a.all.size(); ++k) out.all.push_back(block(a.all[k], b.all[k]));
    return out;
}

bool is_invariant(const ModuleAction& mod, const Subspace& v) {
    for (const auto& x : mod.all)
        for (const auto& r : v.raw_rows())
            if (!v.member(apply(x, r))) return false;
    return true;
}

CyclicModule cyclic_closure(const SparseVec& v, const ModuleAction& mod) {
    if (v.empty()) throw std::invalid_argument("cyclic_closure: zero generator");
    CyclicModule cm{v, Subspace(mod.dim)};
    std::vector<SparseVec> queue{cm.space.insert(v)};
    while (!queue.empty()) {
        SparseVec w = std::move(queue.back());
        queue.pop_back();
        for (const auto& x : mod.all) {
            SparseVec img = apply(x, w);
            if (img.empty()) continue;
            SparseVec added = cm.space.insert(img);
            if (!added.empty()) queue.push_back(std::move(added));
        }
    }
    return cm;
}

CyclicModule cyclic_closure(const SparseVec& v, const GradedPiece& piece, const ActionMatrices& am) {
    return cyclic_closure(v, module_of(piece, am));
}

Subspace maximal_vectors(const ModuleAction& mod) {
    if (mod.raising.empty()) {
        Subspace all(mod.dim);
        for (int i = 0; i < mod.dim; ++i) all.insert(SparseVec::unit(i, *mod.field));
        return all;
    }
    std::vector<SparseVec> rows;
    for (const auto& x : mod.raising) {
        auto r = x.row_vectors();
        for (auto& v : r)
            if (!v.empty()) rows.push_back(std::move(v));
    }
    if (rows.empty()) {
        Subspace all(mod.dim);
        for (int i = 0; i < mod.dim; ++i) all.insert(SparseVec::unit(i, *mod.field));
        return all;
    }
    return nullspace(SparseMatrix::from_rows(mod.dim, rows), mod.field);
}

namespace {

// Candidate generators of submodules: the basis of the maximal-vector space, plus
// pseudo-random combinations when that basis is not made of weight vectors.
std::vector<SparseVec> maximal_candidates(const ModuleAction& mod, const Subspace& m, bool* probabilistic) {
    std::vector<SparseVec> out = m.basis();
    bool rigorous = mod.monomial && m.is_coordinate();
    if (probabilistic) *probabilistic = !rigorous;
    if (rigorous || out.empty()) return out;
    std::mt19937 rng(20240601u);
    std::uniform_int_distribution<int> coef(-5, 5);
    auto basis = m.basis();
    for (int k = 0; k < 50; ++k) {
        SparseVec v;
        for (const auto& b : basis) {
            int c = coef(rng);
            if (c != 0) axpy(v, mod.field->from_int(c), b);
        }
        if (!v.empty()) out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

SimplicityReport simplicity_report(const ModuleAction& mod) {
    SimplicityReport rep;
    rep.dim = mod.dim;
    if (mod.dim == 0) {
        rep.consistent = true;
        return rep;
    }
    Subspace m = maximal_vectors(mod);
    rep.maximal_dim = m.dim();
    if (m.dim() == 1) rep.highest_weight_test = cyclic_closure(m.basis().front(), mod).space.dim() == mod.dim;

    bool probabilistic = false;
    rep.single_vector_test = true;
    for (const auto& y : maximal_candidates(mod, m, &probabilistic)) {
        if (cyclic_closure(y, mod).space.dim() != mod.dim) {
            rep.single_vector_test = false;
            break;
        }
    }
    auto comm = commutant(mod.all, mod.dim, *mod.field);
    auto local = local_algebra_report(comm, *mod.field);
    rep.commutant_local = local.local && local.semisimple_dim == 1;
    rep.simple = rep.commutant_local && rep.single_vector_test;
    // a one-dimensional maximal space that generates the module forces simplicity
    rep.consistent = !rep.highest_weight_test || rep.simple;
    if (!rep.consistent) rep.simple = false;
    return rep;
}

bool simplicity_certify(const CyclicModule& cm, const ModuleAction& mod) {
    return simplicity_report(restrict_to(mod, cm.space)).simple;
}

namespace {

Subspace coordinate_span(int dim, const std::vector<int>& idx, const Field& f) {
    Subspace s(dim);
    for (int i : idx) s.insert(SparseVec::unit(i, f));
    return s;
}

std::pair<int, int> energy_bounds(const GradedPiece& piece) {
    int lo = 1 << 30, hi = -1;
    for (const auto& t : piece.basis) {
        int e = edeg(t, piece.shape.ell);
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    return {lo, hi};
}

std::vector<EnergyVector> realizable(const Shape& sh, int kappa, int s) {
    std::vector<EnergyVector> out;
    for (auto& k : k_set(sh, kappa))
        if (eta_realizable(sh, k, s)) out.push_back(k);
    return out;
}

}  // namespace

FiltrationReport edeg_filtration(const GradedPiece& piece, const ActionMatrices& am) {
    const Shape& sh = piece.shape;
    const Field& f = piece.field();
    FiltrationReport rep;
    rep.shape = sh;
    rep.s = piece.s;
    if (piece.dim() == 0) return rep;
    auto [lo, hi] = energy_bounds(piece);
    rep.E0 = lo;
    rep.E = hi;
    ModuleAction mod = module_of(piece, am);
    std::vector<int> members;
    rep.strictly_increasing = true;
    rep.invariant = true;
    rep.layers_match = true;
    rep.primitive_vectors = true;
    for (int i = 0; lo + i <= hi; ++i) {
        int kappa = lo + i;
        int before = static_cast<int>(members.size());
        for (int k = 0; k < piece.dim(); ++k)
            if (edeg(piece.basis[k], sh.ell) == kappa) members.push_back(k);
        int layer = static_cast<int>(members.size()) - before;
        Subspace vi = coordinate_span(piece.dim(), members, f);
        if (layer == 0) rep.strictly_increasing = false;
        if (!is_invariant(mod, vi)) rep.invariant = false;
        rep.layer_dims.push_back(layer);
        auto ks = k_set(sh, kappa);
        long long mult = static_cast<long long>(ks.size());
        rep.layer_multiplicities.push_back(mult);
        rep.multiplicity_formula.push_back(k_count(sh, kappa));
        long long expect = k_count(sh, kappa) * dim_restricted(sh.m, sh.n, sh.ell, piece.s - kappa * sh.ell);
        rep.expected_layer_dims.push_back(expect);
        if (mult != k_count(sh, kappa) || expect != layer) rep.layers_match = false;
        const Subspace* prev = rep.chain.empty() ? nullptr : &rep.chain.back();
        for (const auto& kv : realizable(sh, kappa, piece.s)) {
            int idx = piece.find(eta_repr(sh, kv, piece.s));
            for (const auto& e : am.e) {
                SparseVec img = e.col(idx);
                bool ok = prev ? prev->member(img) : img.empty();
                if (!ok) rep.primitive_vectors = false;
            }
        }
        rep.chain.push_back(std::move(vi));
    }
    rep.loewy_length = static_cast<int>(rep.chain.size());
    if (rep.chain.back().dim() != piece.dim()) rep.strictly_increasing = false;
    return rep;
}

SocleCertificate certify_socle(const ModuleAction& mod, const Subspace& s_cand,
                               const std::vector<SparseVec>& summand_generators) {
    SocleCertificate cert;
    cert.socle = s_cand;
    auto note = [&](const std::string& line) { cert.log.push_back(line); };
    cert.invariant = is_invariant(mod, s_cand);
    note("(a) candidate of dimension " + std::to_string(s_cand.dim()) +
         (cert.invariant ? " is invariant" : " is NOT invariant"));

    cert.summands = static_cast<int>(summand_generators.size());
    cert.summands_simple = !summand_generators.empty();
    Subspace total(mod.dim);
    int dim_sum = 0;
    for (const auto& g : summand_generators) {
        CyclicModule cm = cyclic_closure(g, mod);
        SimplicityReport sr = simplicity_report(restrict_to(mod, cm.space));
        cert.summand_dims.push_back(cm.space.dim());
        dim_sum += cm.space.dim();
        total = sum(total, cm.space);
        if (!sr.simple) cert.summands_simple = false;
        note("(b) summand of dimension " + std::to_string(cm.space.dim()) + (sr.simple ? " simple" : " NOT simple") +
             " (maximal space " + std::to_string(sr.maximal_dim) + ", commutant " +
             (sr.commutant_local ? "local" : "not local") + ")");
    }
    cert.direct_sum_equal = dim_sum == total.dim() && total == s_cand;
    note("(b) sum of summands is " + std::string(dim_sum == total.dim() ? "direct" : "not direct") + " and " +
         (total == s_cand ? "equals" : "differs from") + " the candidate");

    Subspace m = maximal_vectors(mod);
    bool probabilistic = false;
    auto cands = maximal_candidates(mod, m, &probabilistic);
    cert.probabilistic = probabilistic;
    cert.exclusion = true;
    int tested = 0;
    for (const auto& y : cands) {
        if (s_cand.member(y)) continue;
        ++tested;
        CyclicModule cm = cyclic_closure(y, mod);
        int meet = intersect(s_cand, cm.space).dim();
        if (meet == 0 || meet == cm.space.dim()) {
            cert.exclusion = false;
            note("(c) maximal vector outside the candidate generates a module meeting it in dimension " +
                 std::to_string(meet) + " of " + std::to_string(cm.space.dim()));
        }
    }
    note("(c) maximal space of dimension " + std::to_string(m.dim()) + ", " + std::to_string(tested) +
         " vectors outside the candidate tested" + (probabilistic ? " (probabilistic)" : " (weight basis)"));
    return cert;
}

SocleCertificate socle_certify(const GradedPiece& piece, const ActionMatrices& am) {
    const Shape& sh = piece.shape;
    validate(sh, true);
    if (piece.dim() == 0) throw std::invalid_argument("socle_certify: empty piece");
    auto [lo, hi] = energy_bounds(piece);
    (void)hi;
    std::vector<int> low;
    for (int k = 0; k < piece.dim(); ++k)
        if (edeg(piece.basis[k], sh.ell) == lo) low.push_back(k);
    std::vector<SparseVec> gens;
    for (const auto& kv : realizable(sh, lo, piece.s))
        gens.push_back(SparseVec::unit(piece.find(eta_repr(sh, kv, piece.s)), piece.field()));
    return certify_socle(module_of(piece, am), coordinate_span(piece.dim(), low, piece.field()), gens);
}

bool indecomposable(const ModuleAction& mod, LocalAlgebraReport* rep) {
    auto comm = commutant(mod.all, mod.dim, *mod.field);
    auto r = local_algebra_report(comm, *mod.field);
    if (rep) *rep = r;
    return r.local;
}

bool indecomposability_certify(const GradedPiece& piece, const ActionMatrices& am, LocalAlgebraReport* rep) {
    return indecomposable(module_of(piece, am), rep);
}

bool SocleFiltrationReport::ok() const {
    if (levels.empty()) return false;
    for (const auto& l : levels)
        if (!l.ok()) return false;
    return true;
}

SocleFiltrationReport socle_filtration_check(const GradedPiece& piece, const ActionMatrices& am) {
    const Shape& sh = piece.shape;
    validate(sh, true);
    SocleFiltrationReport rep;
    if (piece.dim() == 0) return rep;
    const Field& f = piece.field();
    auto [lo, hi] = energy_bounds(piece);
    ModuleAction mod = module_of(piece, am);
    std::vector<int> below;
    for (int kappa = lo; kappa <= hi; ++kappa) {
        QuotientModule q = quotient(mod, coordinate_span(piece.dim(), below, f));
        std::vector<int> pos(piece.dim(), -1);
        for (size_t k = 0; k < q.columns.size(); ++k) pos[q.columns[k]] = static_cast<int>(k);
        std::vector<int> layer;
        for (int k = 0; k < piece.dim(); ++k)
            if (edeg(piece.basis[k], sh.ell) == kappa) layer.push_back(pos[k]);
        std::vector<SparseVec> gens;
        for (const auto& kv : realizable(sh, kappa, piece.s))
            gens.push_back(SparseVec::unit(pos[piece.find(eta_repr(sh, kv, piece.s))], f));
        SocleCertificate cert = certify_socle(q.action, coordinate_span(q.action.dim, layer, f), gens);
        cert.log.insert(cert.log.begin(), "level " + std::to_string(kappa - lo) + ": quotient of dimension " +
                                               std::to_string(q.action.dim));
        rep.levels.push_back(std::move(cert));
        for (int k = 0; k < piece.dim(); ++k)
            if (edeg(piece.basis[k], sh.ell) == kappa) below.push_back(k);
    }
    return rep;
}

namespace {

std::string kappa_str(const EnergyVector& k) {
    std::string s;
    for (int v : k) s += std::to_string(v);
    return s;
}

}  // namespace

std::string InclusionNet::dot() const {
    std::ostringstream os;
    os << "digraph net {\n";
    os << "  label=\"" << shape.str() << " s=" << s << "\";\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=box];\n";
    for (size_t i = 0; i < vertices.size(); ++i)
        os << "  v" << i << " [label=\"kappa=" << kappa_str(vertices[i].kappa) << "\\ndim=" << vertices[i].dim
           << "\"];\n";
    for (const auto& e : edges)
        os << "  v" << e.from << " -> v" << e.to << (e.componentwise ? "" : " [style=dashed]") << ";\n";
    os << "}\n";
    return os.str();
}

InclusionNet inclusion_net(const GradedPiece& piece, const ActionMatrices& am) {
    const Shape& sh = piece.shape;
    validate(sh, true);
    InclusionNet net;
    net.shape = sh;
    net.s = piece.s;
    if (piece.dim() == 0) return net;
    ModuleAction mod = module_of(piece, am);
    auto [lo, hi] = energy_bounds(piece);
    std::vector<Subspace> spaces;
    std::vector<int> grade;
    for (int kappa = lo; kappa <= hi; ++kappa)
        for (const auto& kv : realizable(sh, kappa, piece.s)) {
            NetVertex v;
            v.kappa = kv;
            v.eta = eta_repr(sh, kv, piece.s);
            spaces.push_back(cyclic_closure(SparseVec::unit(piece.find(v.eta), piece.field()), mod).space);
            v.dim = spaces.back().dim();
            net.vertices.push_back(v);
            grade.push_back(kappa);
        }
    int nv = static_cast<int>(net.vertices.size());
    for (int a = 0; a < nv; ++a)
        for (int b = 0; b < nv; ++b) {
            if (grade[b] != grade[a] + 1) continue;
            bool comp = geq_partial(net.vertices[b].kappa, net.vertices[a].kappa);
            bool strict = spaces[b].contains(spaces[a]) && spaces[b].dim() > spaces[a].dim();
            if (strict) net.edges.push_back({a, b, comp});
            if (comp && !strict) net.missing.emplace_back(a, b);
        }
    net.orders = energy_order_check(piece, am, 2000, 7);
    return net;
}

OrderCheck energy_order_check(const GradedPiece& piece, const ActionMatrices& am, long long max_pairs,
                              unsigned seed) {
    const Shape& sh = piece.shape;
    OrderCheck chk;
    int d = piece.dim();
    if (d == 0) return chk;
    ModuleAction mod = module_of(piece, am);
    std::vector<std::optional<Subspace>> cache(d);
    auto space = [&](int k) -> const Subspace& {
        if (!cache[k]) cache[k] = cyclic_closure(SparseVec::unit(k, piece.field()), mod).space;
        return *cache[k];
    };
    auto test = [&](int a, int b) {
        const SuperTuple &ta = piece.basis[a], &tb = piece.basis[b];
        EnergyVector ea = edeg_vector(ta, sh.ell), eb = edeg_vector(tb, sh.ell);
        if (ea == eb) {
            ++chk.equiv_pairs;
            if (!(space(a) == space(b))) ++chk.equiv_failures;
        } else if (geq_partial(ea, eb)) {
            ++chk.partial_pairs;
            if (!(space(a).contains(space(b)) && space(a).dim() > space(b).dim())) ++chk.partial_failures;
        } else if (edeg(ta, sh.ell) == edeg(tb, sh.ell)) {
            ++chk.incomparable_pairs;
            if (space(a).contains(space(b)) || space(b).contains(space(a))) ++chk.incomparable_failures;
        }
    };
    long long all_pairs = static_cast<long long>(d) * d;
    if (max_pairs == 0 || max_pairs >= all_pairs) {
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                if (a != b) test(a, b);
    } else {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> pick(0, d - 1);
        for (long long k = 0; k < max_pairs; ++k) {
            int a = pick(rng), b = pick(rng);
            if (a != b) test(a, b);
        }
    }
    return chk;
}

}  // namespace qgrass
