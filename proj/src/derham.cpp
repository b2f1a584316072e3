#include "qgrass/derham.hpp"

#include "qgrass/qcomb.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qgrass {

int XiIndex::degree() const {
    int d = 0;
    for (int b : bits) d += b;
    return d;
}

std::vector<int> XiIndex::word() const {
    std::vector<int> w;
    for (size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) w.push_back(static_cast<int>(i) + 1);
    return w;
}

std::string XiIndex::str() const {
    auto w = word();
    if (w.empty()) return "1";
    std::string s;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) s += "^";
        s += "dxi" + std::to_string(w[k]);
    }
    return s;
}

std::optional<XiTerm> wedge(const XiIndex& a, const XiIndex& b, const Field& f) {
    if (a.bits.size() != b.bits.size()) throw std::invalid_argument("wedge: length mismatch");
    XiIndex u{IVec(a.bits.size(), 0)};
    for (size_t i = 0; i < a.bits.size(); ++i) {
        if (a.bits[i] && b.bits[i]) return std::nullopt;
        u.bits[i] = a.bits[i] | b.bits[i];
    }
    long long e = star(a.bits, b.bits);
    CycNum c = f.q_pow(e);
    if (e % 2) c = -c;
    return XiTerm{c, u};
}

bool DFormIndex::operator<(const DFormIndex& o) const {
    int da = degree(), db = o.degree();
    if (da != db) return da < db;
    auto wa = xi.word(), wb = o.xi.word();
    if (wa != wb) return wa < wb;
    return coeff < o.coeff;
}

std::string DFormIndex::str() const { return coeff.str() + "*" + xi.str(); }

std::vector<DTerm> apply_d(const Shape& sh, const DFormIndex& w) {
    const Field& f = shape_field(sh);
    const int m = sh.m, N = sh.m + sh.n;
    std::vector<DTerm> out;
    long long below_x = 0, below_xi = 0;
    for (int j = 0; j < N; ++j) {
        int xj = j < m ? w.coeff.alpha[j] : w.coeff.mu[j - m];
        int xij = w.xi.bits[j];
        if (!xij && xj > 0) {
            DFormIndex t = w;
            if (j < m)
                t.coeff.alpha[j] -= 1;
            else
                t.coeff.mu[j - m] = 0;
            t.xi.bits[j] = 1;
            CycNum c = f.q_pow(below_x + below_xi);
            if (below_xi % 2) c = -c;
            out.push_back({c, std::move(t)});
        }
        below_x += xj;
        below_xi += xij;
    }
    return out;
}

SuperWeight SuperWeight::of(const Shape& sh, const IVec& lambda) {
    if (static_cast<int>(lambda.size()) != sh.m + sh.n) throw std::invalid_argument("super-weight: wrong length");
    SuperWeight w;
    w.lambda = lambda;
    for (int i = 0; i < sh.m; ++i) {
        if (lambda[i] < 0) throw std::invalid_argument("super-weight: negative even coordinate");
        if (lambda[i] == sh.r * sh.ell) ++w.k;
        if (lambda[i] == 0) ++w.h0;
    }
    w.h = w.h0;
    for (int j = 0; j < sh.n; ++j) {
        int b = lambda[sh.m + j];
        if (b != 0 && b != 1) throw std::invalid_argument("super-weight: odd coordinate must be 0 or 1");
        if (b == 0) ++w.h;
        w.nu_size += b;
    }
    return w;
}

bool SuperWeight::is_zero() const {
    for (int v : lambda)
        if (v) return false;
    return true;
}

std::string SuperWeight::str(const Shape& sh) const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < sh.m; ++i) os << (i ? "," : "") << lambda[i];
    os << "|";
    for (int j = 0; j < sh.n; ++j) os << (j ? "," : "") << lambda[sh.m + j];
    os << ")";
    return os.str();
}

SuperWeight super_weight(const Shape& sh, const DFormIndex& w) {
    IVec lam(sh.m + sh.n);
    for (int i = 0; i < sh.m; ++i) lam[i] = w.coeff.alpha[i] + w.xi.bits[i];
    for (int j = 0; j < sh.n; ++j) lam[sh.m + j] = w.coeff.mu[j] ^ w.xi.bits[sh.m + j];
    return SuperWeight::of(sh, lam);
}

namespace {

// Index sets of size s in lexicographic order, as bit vectors.
std::vector<XiIndex> xi_words(int N, int s) {
    std::vector<XiIndex> out;
    if (s < 0 || s > N) return out;
    std::vector<int> idx(s);
    for (int k = 0; k < s; ++k) idx[k] = k;
    while (true) {
        XiIndex x{IVec(N, 0)};
        for (int i : idx) x.bits[i] = 1;
        out.push_back(std::move(x));
        int k = s - 1;
        while (k >= 0 && idx[k] == N - s + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

}  // namespace

std::vector<DFormIndex> enumerate_forms(const Shape& sh, int s) {
    std::vector<DFormIndex> out;
    auto coeffs = enumerate_all(sh);
    std::sort(coeffs.begin(), coeffs.end());
    for (const auto& xi : xi_words(sh.m + sh.n, s))
        for (const auto& c : coeffs) out.push_back({c, xi});
    return out;
}

std::vector<DFormIndex> enumerate_block(const Shape& sh, const SuperWeight& lambda, int s) {
    std::vector<DFormIndex> out;
    for (const auto& xi : xi_words(sh.m + sh.n, s)) {
        DFormIndex w{SuperTuple{IVec(sh.m), IVec(sh.n)}, xi};
        bool ok = true;
        for (int i = 0; i < sh.m && ok; ++i) {
            int a = lambda.lambda[i] - xi.bits[i];
            if (a < 0 || a > sh.box()) ok = false;
            w.coeff.alpha[i] = a;
        }
        if (!ok) continue;
        for (int j = 0; j < sh.n; ++j) w.coeff.mu[j] = lambda.lambda[sh.m + j] ^ xi.bits[sh.m + j];
        out.push_back(std::move(w));
    }
    return out;
}

SparseMatrix d_matrix(const Shape& sh, const std::vector<DFormIndex>& src, const std::vector<DFormIndex>& dst) {
    std::map<DFormIndex, int> pos;
    for (size_t k = 0; k < dst.size(); ++k) pos.emplace(dst[k], static_cast<int>(k));
    SparseMatrix d(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (size_t c = 0; c < src.size(); ++c) {
        SparseVec col;
        for (auto& t : apply_d(sh, src[c])) {
            auto it = pos.find(t.form);
            if (it == pos.end()) throw std::logic_error("d leaves the target basis: " + t.form.str());
            col.e.emplace_back(it->second, t.coef);
        }
        std::sort(col.e.begin(), col.e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        d.set_col(static_cast<int>(c), std::move(col));
    }
    return d;
}

SparseMatrix d_matrix(const Shape& sh, int s) {
    return d_matrix(sh, enumerate_forms(sh, s), enumerate_forms(sh, s + 1));
}

DeRhamBlock build_block(const Shape& sh, const SuperWeight& lambda, int s) {
    DeRhamBlock b;
    b.weight = lambda;
    b.s = s;
    b.basis = enumerate_block(sh, lambda, s);
    b.d_in = d_matrix(sh, enumerate_block(sh, lambda, s - 1), b.basis);
    b.d_out = d_matrix(sh, b.basis, enumerate_block(sh, lambda, s + 1));
    return b;
}

long long block_dim_formula(const Shape& sh, const SuperWeight& lambda, int s) {
    if (s < lambda.k) return 0;
    return binomial(sh.m + sh.n - lambda.k - lambda.h0, s - lambda.k);
}

namespace {

std::vector<SuperWeight> all_weights(const Shape& sh) {
    std::vector<SuperWeight> out;
    IVec cur(sh.m + sh.n, 0);
    int top = sh.r * sh.ell;
    while (true) {
        out.push_back(SuperWeight::of(sh, cur));
        int k = sh.m + sh.n - 1;
        while (k >= 0) {
            int lim = k < sh.m ? top : 1;
            if (cur[k] < lim) {
                ++cur[k];
                break;
            }
            cur[k] = 0;
            --k;
        }
        if (k < 0) break;
    }
    return out;
}

long long pow_ll(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

BlockCheck weight_blocks_check(const Shape& sh) {
    BlockCheck chk;
    const int N = sh.m + sh.n;
    std::vector<long long> totals(N + 1, 0);
    for (const auto& w : all_weights(sh)) {
        ++chk.weights;
        for (int s = 0; s <= N; ++s) {
            long long dim = static_cast<long long>(enumerate_block(sh, w, s).size());
            ++chk.checks;
            totals[s] += dim;
            if (dim != block_dim_formula(sh, w, s)) ++chk.dim_failures;
            bool predicted = w.k <= s && s <= N - w.h0;
            if ((dim > 0) != predicted) ++chk.nonempty_failures;
        }
    }
    for (int s = 0; s <= N; ++s)
        if (totals[s] != pow_ll(sh.r * sh.ell, sh.m) * pow_ll(2, sh.n) * binomial(N, s)) ++chk.total_failures;
    return chk;
}

std::vector<DeRhamBlock> weight_blocks(const Shape& sh, int s) {
    std::map<SuperWeight, int> seen;
    std::vector<DeRhamBlock> out;
    for (const auto& w : enumerate_forms(sh, s)) {
        SuperWeight lam = super_weight(sh, w);
        if (seen.emplace(lam, 0).second) out.push_back(build_block(sh, lam, s));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.weight < b.weight; });
    return out;
}

std::vector<CriticalForm> critical_weights(const Shape& sh, int s) {
    std::vector<CriticalForm> out;
    const int m = sh.m, n = sh.n, top = sh.r * sh.ell;
    for (int k = 0; k <= std::min(m, s); ++k) {
        int t = s - k;
        if (t > n) continue;
        for (const auto& ev : xi_words(m, k))
            for (const auto& tau : xi_words(n, t)) {
                IVec lam(m + n, 0);
                for (int i = 0; i < m; ++i) lam[i] = ev.bits[i] ? top : 0;
                CriticalForm cf;
                cf.weight = SuperWeight::of(sh, lam);
                cf.tau = tau.bits;
                cf.form.coeff = SuperTuple{IVec(m), IVec(n)};
                cf.form.xi.bits.assign(m + n, 0);
                for (int i = 0; i < m; ++i)
                    if (ev.bits[i]) {
                        cf.form.coeff.alpha[i] = top - 1;
                        cf.form.xi.bits[i] = 1;
                    }
                for (int j = 0; j < n; ++j)
                    if (tau.bits[j]) {
                        cf.form.coeff.mu[j] = 1;
                        cf.form.xi.bits[m + j] = 1;
                    }
                out.push_back(std::move(cf));
            }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.form < b.form; });
    return out;
}

namespace {

void complex_check_one(const Shape& sh, ComplexCheck& out) {
    const int N = sh.m + sh.n;
    std::vector<SparseMatrix> d;
    for (int s = 0; s <= N; ++s) d.push_back(d_matrix(sh, s));
    for (int s = 0; s + 1 <= N; ++s) {
        ++out.products;
        SparseMatrix p = d[s + 1] * d[s];
        if (auto nz = p.first_nonzero()) {
            out.ok = false;
            auto src = enumerate_forms(sh, s);
            out.failures.push_back(sh.str() + ": d^" + std::to_string(s + 1) + " d^" + std::to_string(s) +
                                   " nonzero on " + src[nz->second].str());
        }
    }
}

SparseMatrix partial_matrix(const Shape& sh, const GradedPiece& from, const GradedPiece& to, int j) {
    const Field& f = shape_field(sh);
    SparseMatrix p(to.dim(), from.dim());
    for (int c = 0; c < from.dim(); ++c) {
        const SuperTuple& t = from.basis[c];
        IVec x = t.full();
        if (x[j] == 0) continue;
        long long e = 0;
        for (int k = 0; k < j; ++k) e += x[k];
        SuperTuple u = t;
        if (j < sh.m)
            u.alpha[j] -= 1;
        else
            u.mu[j - sh.m] = 0;
        int row = to.find(u);
        if (row < 0) throw std::logic_error("partial operator leaves the graded piece");
        p.col(c).e.emplace_back(row, f.q_pow(e));
    }
    return p;
}

}  // namespace

ComplexCheck complex_check(const Shape& sh) {
    validate(sh);
    ComplexCheck out;
    complex_check_one(sh, out);
    Shape big = sh;
    big.r += 1;
    complex_check_one(big, out);
    return out;
}

ComplexCheck partial_ops_check(const Shape& sh, int s) {
    validate(sh);
    ComplexCheck out;
    if (s < 2) return out;
    const Field& f = shape_field(sh);
    const int N = sh.m + sh.n;
    GradedPiece p0 = GradedPiece::build(sh, s), p1 = GradedPiece::build(sh, s - 1), p2 = GradedPiece::build(sh, s - 2);
    std::vector<SparseMatrix> first, second;
    for (int j = 0; j < N; ++j) {
        first.push_back(partial_matrix(sh, p0, p1, j));
        second.push_back(partial_matrix(sh, p1, p2, j));
    }
    CycNum qinv = f.q_pow(-1);
    for (int i = 0; i < N; ++i) {
        for (int j = i + 1; j < N; ++j) {
            ++out.products;
            if (!(second[j] * first[i] == (second[i] * first[j]).scaled(qinv))) {
                out.ok = false;
                out.failures.push_back("s=" + std::to_string(s) + ": d" + std::to_string(j + 1) + " d" +
                                       std::to_string(i + 1) + " != q^-1 d" + std::to_string(i + 1) + " d" +
                                       std::to_string(j + 1));
            }
        }
        if (i >= sh.m) {
            ++out.products;
            if (!(second[i] * first[i]).is_zero()) {
                out.ok = false;
                out.failures.push_back("s=" + std::to_string(s) + ": odd d" + std::to_string(i + 1) + " squared != 0");
            }
        }
    }
    return out;
}

CohomologyTable cohomology(const Shape& sh) {
    validate(sh);
    const int N = sh.m + sh.n;
    CohomologyTable tab;
    tab.shape = sh;
    tab.rows.resize(N + 1);
    for (int s = 0; s <= N; ++s) {
        tab.rows[s].s = s;
        tab.rows[s].expected = binomial(N, s);
    }
    tab.noncritical_exact = true;
    tab.critical_contribute_one = true;
    tab.rank_bound = true;
    std::map<std::pair<IVec, int>, long long> critical_count;
    for (int s = 0; s <= N; ++s)
        for (const auto& cf : critical_weights(sh, s)) {
            ++critical_count[{cf.weight.lambda, s}];
            ++tab.rows[s].critical;
            tab.critical_forms.push_back("s=" + std::to_string(s) + " " + cf.weight.str(sh) + " " + cf.form.str());
        }
    for (const auto& w : all_weights(sh)) {
        std::vector<std::vector<DFormIndex>> bases(N + 2);
        for (int s = 0; s <= N; ++s) bases[s] = enumerate_block(sh, w, s);
        std::vector<long long> rk(N + 1, 0);
        for (int s = 0; s < N; ++s)
            if (!bases[s].empty() && !bases[s + 1].empty()) rk[s] = rank(d_matrix(sh, bases[s], bases[s + 1]));
        bool crit = w.critical(sh);
        for (int s = 0; s <= N; ++s) {
            long long dim = static_cast<long long>(bases[s].size());
            long long h = dim - rk[s] - (s > 0 ? rk[s - 1] : 0);
            tab.rows[s].dim_D += dim;
            tab.rows[s].rank_d += rk[s];
            tab.rows[s].dim_H += h;
            if (crit) {
                auto it = critical_count.find({w.lambda, s});
                long long expect = it == critical_count.end() ? 0 : it->second;
                if (h != expect) {
                    tab.critical_contribute_one = false;
                    tab.diagnostics.push_back("critical " + w.str(sh) + " s=" + std::to_string(s) + ": H=" +
                                              std::to_string(h) + " expected " + std::to_string(expect));
                }
                if (rk[s] != 0) tab.critical_contribute_one = false;
            } else {
                if (h != 0) {
                    tab.noncritical_exact = false;
                    tab.diagnostics.push_back("non-critical " + w.str(sh) + " s=" + std::to_string(s) +
                                              ": H=" + std::to_string(h) + " dim=" + std::to_string(dim));
                }
                long long bound = s >= w.k ? binomial(N - w.k - w.h0 - 1, s - w.k) : 0;
                if (dim > 0 && rk[s] < bound) {
                    tab.rank_bound = false;
                    tab.diagnostics.push_back("rank bound " + w.str(sh) + " s=" + std::to_string(s));
                }
            }
        }
    }
    tab.betti_match = true;
    tab.double_count = true;
    long long chi_D = 0, chi_H = 0;
    for (const auto& row : tab.rows) {
        if (row.dim_H != row.expected) tab.betti_match = false;
        long long total = pow_ll(sh.r * sh.ell, sh.m) * pow_ll(2, sh.n) * binomial(N, row.s);
        if (row.dim_D != total) tab.double_count = false;
        chi_D += (row.s % 2 ? -1 : 1) * row.dim_D;
        chi_H += (row.s % 2 ? -1 : 1) * row.dim_H;
    }
    tab.euler = chi_D == chi_H;
    return tab;
}

PoincareReport poincare_check(int m, int n, int ell, const IVec& lambda) {
    if (static_cast<int>(lambda.size()) != m + n) throw std::invalid_argument("poincare_check: wrong weight length");
    long long amass = 0;
    bool zero = true;
    for (int i = 0; i < m + n; ++i) {
        if (i < m) amass += lambda[i];
        if (lambda[i]) zero = false;
    }
    if (zero) throw std::invalid_argument("poincare_check: the weight must be nonzero");
    Shape sh{m, n, ell, 1};
    while (static_cast<long long>(sh.r) * ell <= amass + m + n) ++sh.r;
    validate(sh);
    PoincareReport rep;
    rep.shape = sh;
    rep.weight = SuperWeight::of(sh, lambda);
    const int N = m + n;
    std::vector<std::vector<DFormIndex>> bases(N + 2);
    for (int s = 0; s <= N; ++s) bases[s] = enumerate_block(sh, rep.weight, s);
    rep.ranks.assign(N + 1, 0);
    for (int s = 0; s < N; ++s)
        if (!bases[s].empty() && !bases[s + 1].empty()) rep.ranks[s] = rank(d_matrix(sh, bases[s], bases[s + 1]));
    rep.exact = true;
    for (int s = 0; s <= N; ++s) {
        long long dim = static_cast<long long>(bases[s].size());
        rep.dims.push_back(dim);
        if (dim - rep.ranks[s] - (s > 0 ? rep.ranks[s - 1] : 0) != 0) rep.exact = false;
    }
    return rep;
}

}  // namespace qgrass
