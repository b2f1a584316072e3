#include "qgrass/omega.hpp"

#include "qgrass/qcomb.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qgrass {

const Field& shape_field(const Shape& sh) {
    validate(RootSpec{sh.ell, sh.ell});
    return Field::get(sh.ell);
}

std::string Generator::str() const {
    switch (kind) {
        case GenKind::E: return "e" + std::to_string(index);
        case GenKind::F: return "f" + std::to_string(index);
        case GenKind::K: return "K" + std::to_string(index);
        case GenKind::Kinv: return "K" + std::to_string(index) + "^-1";
    }
    return "?";
}

void validate(const Generator& g, const Shape& sh) {
    int top = (g.kind == GenKind::E || g.kind == GenKind::F) ? sh.m + sh.n - 1 : sh.m + sh.n;
    if (g.index < 1 || g.index > top)
        throw std::invalid_argument("generator " + g.str() + " out of range for " + sh.str());
}

OmegaElement OmegaElement::monomial(const Shape& sh, const SuperTuple& t, const CycNum& c) {
    OmegaElement v;
    v.shape = sh;
    v.add(t, c);
    return v;
}

void OmegaElement::add(const SuperTuple& t, const CycNum& c) {
    if (c.is_zero()) return;
    auto it = terms.find(t);
    if (it == terms.end()) {
        terms.emplace(t, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

bool OmegaElement::operator==(const OmegaElement& o) const {
    if (!(shape == o.shape) || terms.size() != o.terms.size()) return false;
    auto a = terms.begin();
    for (auto b = o.terms.begin(); b != o.terms.end(); ++a, ++b)
        if (!(a->first == b->first) || !(a->second == b->second)) return false;
    return true;
}

std::string OmegaElement::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << t.str();
    }
    return os.str();
}

namespace {

void check_shapes(const Shape& a, const Shape& b) {
    if (!(a == b)) throw std::invalid_argument("shape mismatch: " + a.str() + " vs " + b.str());
}

}  // namespace

std::optional<Term> monomial_product(const Shape& sh, const SuperTuple& a, const SuperTuple& b,
                                     bool truncated) {
    const Field& f = shape_field(sh);
    for (int j = 0; j < sh.n; ++j)
        if (a.mu[j] && b.mu[j]) return std::nullopt;
    SuperTuple t{IVec(sh.m), IVec(sh.n)};
    for (int i = 0; i < sh.m; ++i) {
        t.alpha[i] = a.alpha[i] + b.alpha[i];
        if (truncated && t.alpha[i] > sh.box()) return std::nullopt;
    }
    for (int j = 0; j < sh.n; ++j) t.mu[j] = a.mu[j] | b.mu[j];
    CycNum c = f.one();
    for (int i = 0; i < sh.m; ++i) {
        c *= q_binom(t.alpha[i], a.alpha[i], f);
        if (c.is_zero()) return std::nullopt;
    }
    long long mu_size = 0, beta_size = 0;
    for (int v : a.mu) mu_size += v;
    for (int v : b.alpha) beta_size += v;
    long long qexp = mu_size * beta_size + star(a.alpha, b.alpha);
    long long swaps = star(a.mu, b.mu);
    c *= f.q_pow(qexp + swaps);
    if (swaps % 2) c = -c;
    return Term{c, t};
}

OmegaElement multiply(const OmegaElement& a, const OmegaElement& b, bool truncated) {
    check_shapes(a.shape, b.shape);
    OmegaElement out;
    out.shape = a.shape;
    for (const auto& [ta, ca] : a.terms)
        for (const auto& [tb, cb] : b.terms)
            if (auto p = monomial_product(a.shape, ta, tb, truncated)) out.add(p->tuple, ca * cb * p->coef);
    return out;
}

std::optional<Term> act_monomial(const Shape& sh, const Generator& g, const SuperTuple& x, bool truncated) {
    validate(g, sh);
    const Field& f = shape_field(sh);
    const int m = sh.m;
    const int i = g.index;
    if (g.kind == GenKind::K || g.kind == GenKind::Kinv) {
        long long e = i <= m ? x.alpha[i - 1] : -x.mu[i - m - 1];
        if (g.kind == GenKind::Kinv) e = -e;
        return Term{f.q_pow(e), x};
    }
    SuperTuple t = x;
    CycNum c = f.one();
    bool raise = g.kind == GenKind::E;
    if (i < m) {
        int a = i - 1, b = i;  // alpha_i, alpha_{i+1}
        if (raise) {
            if (t.alpha[b] == 0) return std::nullopt;
            c = q_int(t.alpha[a] + 1, f);
            t.alpha[a] += 1;
            t.alpha[b] -= 1;
        } else {
            if (t.alpha[a] == 0) return std::nullopt;
            c = q_int(t.alpha[b] + 1, f);
            t.alpha[a] -= 1;
            t.alpha[b] += 1;
        }
    } else if (i == m) {
        if (raise) {
            if (t.mu[0] != 1) return std::nullopt;
            c = q_int(t.alpha[m - 1] + 1, f);
            t.alpha[m - 1] += 1;
            t.mu[0] = 0;
        } else {
            if (t.mu[0] != 0 || t.alpha[m - 1] == 0) return std::nullopt;
            t.alpha[m - 1] -= 1;
            t.mu[0] = 1;
        }
    } else {
        int a = i - m - 1, b = i - m;  // local odd positions of x_i, x_{i+1}
        int from = raise ? b : a, to = raise ? a : b;
        if (t.mu[to] != 0 || t.mu[from] != 1) return std::nullopt;
        t.mu[to] = 1;
        t.mu[from] = 0;
    }
    if (c.is_zero()) return std::nullopt;
    if (truncated && !in_box(sh, t)) return std::nullopt;
    return Term{c, t};
}

OmegaElement act_generator(const Generator& g, const OmegaElement& v, bool truncated) {
    OmegaElement out;
    out.shape = v.shape;
    for (const auto& [t, c] : v.terms)
        if (auto r = act_monomial(v.shape, g, t, truncated)) out.add(r->tuple, c * r->coef);
    return out;
}

GradedPiece GradedPiece::build(const Shape& sh, int s) {
    validate(sh);
    GradedPiece p;
    p.shape = sh;
    p.s = s;
    p.basis = enumerate_graded(sh, s);
    for (size_t k = 0; k < p.basis.size(); ++k) p.index.emplace(p.basis[k], static_cast<int>(k));
    return p;
}

int GradedPiece::find(const SuperTuple& t) const {
    auto it = index.find(t);
    return it == index.end() ? -1 : it->second;
}

SparseVec GradedPiece::vector_of(const OmegaElement& v) const {
    SparseVec out;
    for (const auto& [t, c] : v.terms) {
        int k = find(t);
        if (k < 0) throw std::invalid_argument("element has a term outside the graded piece: " + t.str());
        out.e.emplace_back(k, c);
    }
    std::sort(out.e.begin(), out.e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

OmegaElement GradedPiece::element_of(const SparseVec& v) const {
    OmegaElement out;
    out.shape = shape;
    for (const auto& [k, c] : v.e) out.add(basis[k], c);
    return out;
}

const SparseMatrix& ActionMatrices::get(const Generator& g) const {
    const std::vector<SparseMatrix>* v = nullptr;
    switch (g.kind) {
        case GenKind::E: v = &e; break;
        case GenKind::F: v = &f; break;
        case GenKind::K: v = &K; break;
        case GenKind::Kinv: v = &Kinv; break;
    }
    if (g.index < 1 || g.index > static_cast<int>(v->size()))
        throw std::invalid_argument("generator " + g.str() + " out of range");
    return (*v)[g.index - 1];
}

std::vector<SparseMatrix> ActionMatrices::module_generators() const {
    std::vector<SparseMatrix> out;
    out.insert(out.end(), e.begin(), e.end());
    out.insert(out.end(), f.begin(), f.end());
    out.insert(out.end(), K.begin(), K.end());
    return out;
}

std::vector<Generator> ActionMatrices::labels(const Shape& sh) const {
    std::vector<Generator> out;
    for (int i = 1; i < sh.m + sh.n; ++i) out.push_back({GenKind::E, i});
    for (int i = 1; i < sh.m + sh.n; ++i) out.push_back({GenKind::F, i});
    for (int i = 1; i <= sh.m + sh.n; ++i) out.push_back({GenKind::K, i});
    return out;
}

ActionMatrices action_matrices(const GradedPiece& piece) {
    const Shape& sh = piece.shape;
    int d = piece.dim();
    ActionMatrices am;
    am.dim = d;
    auto build = [&](GenKind kind, int i) {
        SparseMatrix mat(d, d);
        for (int c = 0; c < d; ++c) {
            auto r = act_monomial(sh, Generator{kind, i}, piece.basis[c]);
            if (!r) continue;
            int row = piece.find(r->tuple);
            if (row < 0) throw std::logic_error("generator leaves the graded piece");
            mat.col(c).e.emplace_back(row, r->coef);
        }
        return mat;
    };
    for (int i = 1; i < sh.m + sh.n; ++i) {
        am.e.push_back(build(GenKind::E, i));
        am.f.push_back(build(GenKind::F, i));
    }
    for (int i = 1; i <= sh.m + sh.n; ++i) {
        am.K.push_back(build(GenKind::K, i));
        am.Kinv.push_back(build(GenKind::Kinv, i));
    }
    return am;
}

namespace {

class RelationChecker {
public:
    explicit RelationChecker(RelationsReport& rep) : rep_(rep) {}

    void expect(const std::string& family, const std::string& relation, const SparseMatrix& lhs,
                const SparseMatrix& rhs) {
        RelationFamily& fam = family_(family);
        ++fam.checked;
        if (lhs == rhs) return;
        ++fam.failed;
        SparseMatrix diff = lhs - rhs;
        auto nz = diff.first_nonzero();
        RelationFailure fail;
        fail.relation = relation;
        fail.column = nz ? nz->second : -1;
        fail.detail = nz ? "entry (" + std::to_string(nz->first) + "," + std::to_string(nz->second) +
                               ") of lhs - rhs is " + diff.get(nz->first, nz->second).str()
                         : "dimension mismatch";
        rep_.failures.push_back(fail);
    }

private:
    RelationFamily& family_(const std::string& name) {
        for (auto& f : rep_.families)
            if (f.name == name) return f;
        rep_.families.push_back({name, 0, 0});
        return rep_.families.back();
    }
    RelationsReport& rep_;
};

}  // namespace

RelationsReport relations_check(const ActionMatrices& am, const GradedPiece& piece) {
    const Shape& sh = piece.shape;
    const Field& fld = piece.field();
    const int m = sh.m, N = sh.m + sh.n;
    const int d = am.dim;
    RelationsReport rep;
    RelationChecker chk(rep);
    const SparseMatrix I = SparseMatrix::identity(d, fld);
    const SparseMatrix Z(d, d);
    auto E = [&](int i) -> const SparseMatrix& { return am.e[i - 1]; };
    auto F = [&](int i) -> const SparseMatrix& { return am.f[i - 1]; };
    auto K = [&](int i) -> const SparseMatrix& { return am.K[i - 1]; };
    auto Ki = [&](int i) -> const SparseMatrix& { return am.Kinv[i - 1]; };
    auto qi = [&](int i) { return i <= m ? fld.q() : fld.q_pow(-1); };
    auto delta = [](int a, int b) { return a == b ? 1 : 0; };
    const CycNum two = q_int(2, fld);

    for (int i = 1; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j)
            chk.expect("R1", "K" + std::to_string(i) + "K" + std::to_string(j) + " = K" + std::to_string(j) +
                                 "K" + std::to_string(i),
                       K(i) * K(j), K(j) * K(i));
        chk.expect("R1", "K" + std::to_string(i) + "K" + std::to_string(i) + "^-1 = 1", K(i) * Ki(i), I);
        chk.expect("R1", "K" + std::to_string(i) + "^-1K" + std::to_string(i) + " = 1", Ki(i) * K(i), I);
    }
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j < N; ++j) {
            int ex = delta(i, j) - delta(i, j + 1);
            CycNum c = qi(i).pow(ex);
            std::string tag = "K" + std::to_string(i) + " vs " + std::to_string(j);
            chk.expect("R2", tag + " (e)", K(i) * E(j), (E(j) * K(i)).scaled(c));
            chk.expect("R2", tag + " (f)", K(i) * F(j), (F(j) * K(i)).scaled(c.inverse()));
        }
    for (int i = 1; i < N; ++i)
        for (int j = 1; j < N; ++j) {
            bool odd = i == m && j == m;
            SparseMatrix lhs = odd ? E(i) * F(j) + F(j) * E(i) : E(i) * F(j) - F(j) * E(i);
            SparseMatrix rhs = Z;
            if (i == j) {
                SparseMatrix kk = K(i) * Ki(i + 1);
                SparseMatrix kkinv = Ki(i) * K(i + 1);
                rhs = (kk - kkinv).scaled((qi(i) - qi(i).inverse()).inverse());
            }
            chk.expect("R3", "[e" + std::to_string(i) + ", f" + std::to_string(j) + "}", lhs, rhs);
        }
    for (int i = 1; i < N; ++i)
        for (int j = i + 2; j < N; ++j) {
            chk.expect("R4", "e" + std::to_string(i) + "e" + std::to_string(j), E(i) * E(j), E(j) * E(i));
            chk.expect("R4", "f" + std::to_string(i) + "f" + std::to_string(j), F(i) * F(j), F(j) * F(i));
        }
    for (int i = 1; i < N; ++i) {
        if (i == m) continue;
        for (int j : {i - 1, i + 1}) {
            if (j < 1 || j >= N) continue;
            auto serre = [&](const SparseMatrix& a, const SparseMatrix& b) {
                return a * a * b - (a * b * a).scaled(two) + b * a * a;
            };
            std::string tag = std::to_string(i) + "," + std::to_string(j);
            chk.expect("R5", "serre e" + tag, serre(E(i), E(j)), Z);
            chk.expect("R5", "serre f" + tag, serre(F(i), F(j)), Z);
        }
    }
    if (m < N) {
        chk.expect("R6", "e_m^2 = 0", E(m) * E(m), Z);
        chk.expect("R6", "f_m^2 = 0", F(m) * F(m), Z);
    }
    if (m >= 2 && sh.n >= 2) {
        auto r7 = [&](auto G) {
            const SparseMatrix &a = G(m - 1), &b = G(m), &c = G(m + 1);
            return a * b * c * b + b * a * b * c + c * b * a * b + b * c * b * a - (b * a * c * b).scaled(two);
        };
        chk.expect("R7", "quartic e", r7(E), Z);
        chk.expect("R7", "quartic f", r7(F), Z);
    }
    for (int i = 1; i < N; ++i) {
        if (i == m) continue;
        chk.expect("restricted", "e" + std::to_string(i) + "^ell = 0", power(E(i), sh.ell), Z);
        chk.expect("restricted", "f" + std::to_string(i) + "^ell = 0", power(F(i), sh.ell), Z);
    }
    for (int i = 1; i <= N; ++i) {
        chk.expect("K_order", "K" + std::to_string(i) + "^order = 1", power(K(i), fld.order()), I);
        chk.expect("K_order", "K" + std::to_string(i) + "^(2 order) = 1", power(K(i), 2 * fld.order()), I);
    }
    return rep;
}

DimCheck dim_check(const Shape& sh, int s) {
    return {static_cast<long long>(enumerate_graded(sh, s).size()), dim_formula(sh, s)};
}

}  // namespace qgrass
