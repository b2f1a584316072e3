#include "qgrass/superindex.hpp"

#include "qgrass/qcomb.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qgrass {

std::string Shape::str() const {
    std::ostringstream os;
    os << "(" << m << "," << n << "," << ell << "," << r << ")";
    return os.str();
}

void validate(const Shape& sh, bool need_m2) {
    if (sh.m < 1) throw std::invalid_argument("m must be >= 1");
    if (need_m2 && sh.m < 2) throw std::invalid_argument("structure analysis needs m >= 2");
    if (sh.n < 0) throw std::invalid_argument("n must be >= 0");
    if (sh.ell < 3) throw std::invalid_argument("ell must be >= 3");
    if (sh.r < 1) throw std::invalid_argument("r must be >= 1");
}

int SuperTuple::degree() const {
    return std::accumulate(alpha.begin(), alpha.end(), 0) + std::accumulate(mu.begin(), mu.end(), 0);
}

IVec SuperTuple::full() const {
    IVec v = alpha;
    v.insert(v.end(), mu.begin(), mu.end());
    return v;
}

std::string SuperTuple::str() const {
    std::ostringstream os;
    os << "<(";
    for (size_t i = 0; i < alpha.size(); ++i) os << (i ? "," : "") << alpha[i];
    os << ");(";
    for (size_t i = 0; i < mu.size(); ++i) os << (i ? "," : "") << mu[i];
    os << ")>";
    return os.str();
}

long long star(const IVec& beta, const IVec& gamma) {
    if (beta.size() != gamma.size()) throw std::invalid_argument("star: length mismatch");
    long long acc = 0, prefix = 0;
    // sum_{j<i} beta_i gamma_j
    for (size_t i = 0; i < beta.size(); ++i) {
        acc += static_cast<long long>(beta[i]) * prefix;
        prefix += gamma[i];
    }
    return acc;
}

long long super_star(const SuperTuple& a, const SuperTuple& b) {
    if (a.alpha.size() != b.alpha.size() || a.mu.size() != b.mu.size())
        throw std::invalid_argument("super_star: shape mismatch");
    long long mu_size = std::accumulate(a.mu.begin(), a.mu.end(), 0LL);
    long long beta_size = std::accumulate(b.alpha.begin(), b.alpha.end(), 0LL);
    return star(a.alpha, b.alpha) + star(a.mu, b.mu) + mu_size * beta_size;
}

namespace {

void fill_alpha(const Shape& sh, int pos, int remaining, IVec& cur, std::vector<IVec>& out) {
    if (pos == sh.m) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    int cap = std::min(remaining, sh.box());
    // the rest must absorb what is left
    int rest_cap = (sh.m - pos - 1) * sh.box();
    for (int a = std::max(0, remaining - rest_cap); a <= cap; ++a) {
        cur[pos] = a;
        fill_alpha(sh, pos + 1, remaining - a, cur, out);
    }
}

std::vector<IVec> alphas_of_degree(const Shape& sh, int d) {
    std::vector<IVec> out;
    if (d < 0 || d > sh.m * sh.box()) return out;
    IVec cur(sh.m, 0);
    fill_alpha(sh, 0, d, cur, out);
    return out;
}

std::vector<IVec> bits_of_weight(int n, int w) {
    std::vector<IVec> out;
    if (w < 0 || w > n) return out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != w) continue;
        IVec b(n);
        for (int i = 0; i < n; ++i) b[i] = (mask >> (n - 1 - i)) & 1u;
        out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<SuperTuple> enumerate_graded(const Shape& sh, int s) {
    std::vector<SuperTuple> out;
    if (s < 0 || s > sh.top_degree()) return out;
    for (int w = 0; w <= std::min(sh.n, s); ++w) {
        auto as = alphas_of_degree(sh, s - w);
        auto bs = bits_of_weight(sh.n, w);
        for (const auto& a : as)
            for (const auto& b : bs) out.push_back(SuperTuple{a, b});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SuperTuple> enumerate_all(const Shape& sh) {
    std::vector<SuperTuple> out;
    for (int s = 0; s <= sh.top_degree(); ++s) {
        auto piece = enumerate_graded(sh, s);
        out.insert(out.end(), piece.begin(), piece.end());
    }
    return out;
}

bool in_box(const Shape& sh, const SuperTuple& t) {
    if (static_cast<int>(t.alpha.size()) != sh.m || static_cast<int>(t.mu.size()) != sh.n) return false;
    for (int a : t.alpha)
        if (a < 0 || a > sh.box()) return false;
    for (int b : t.mu)
        if (b != 0 && b != 1) return false;
    return true;
}

int edeg(const SuperTuple& t, int ell) {
    int e = 0;
    for (int a : t.alpha) e += a / ell;
    return e;
}

EnergyVector edeg_vector(const SuperTuple& t, int ell) {
    EnergyVector e(t.alpha.size());
    for (size_t i = 0; i < t.alpha.size(); ++i) e[i] = t.alpha[i] / ell;
    return e;
}

namespace {
void check_same(const SuperTuple& a, const SuperTuple& b) {
    if (a.alpha.size() != b.alpha.size() || a.mu.size() != b.mu.size())
        throw std::invalid_argument("tuple shape mismatch");
    if (a.degree() != b.degree()) throw std::invalid_argument("tuple degree mismatch");
}
}  // namespace

bool equiv(const SuperTuple& a, const SuperTuple& b, int ell) {
    check_same(a, b);
    return edeg_vector(a, ell) == edeg_vector(b, ell);
}

bool geq_partial(const EnergyVector& a, const EnergyVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("energy vector length mismatch");
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

bool geq_partial(const SuperTuple& a, const SuperTuple& b, int ell) {
    check_same(a, b);
    return geq_partial(edeg_vector(a, ell), edeg_vector(b, ell));
}

bool succ_lex(const EnergyVector& a, const EnergyVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("energy vector length mismatch");
    return a > b;
}

bool succcurlyeq_weight(const EnergyVector& k1, const EnergyVector& k2) {
    if (k1.size() != k2.size()) throw std::invalid_argument("energy vector length mismatch");
    long long partial = 0;
    for (size_t i = 0; i < k1.size(); ++i) {
        partial += k1[i] - k2[i];
        if (partial < 0) return false;
    }
    return partial == 0;
}

EnergyRange e0_e(const Shape& sh, int s) {
    if (s < 0 || s > sh.top_degree()) throw std::out_of_range("e0_e: degree out of range");
    EnergyRange out{1 << 30, -1};
    // odd part only shifts the even degree, energy depends on alpha alone
    for (int w = 0; w <= std::min(sh.n, s); ++w) {
        for (const auto& a : alphas_of_degree(sh, s - w)) {
            int e = 0;
            for (int x : a) e += x / sh.ell;
            out.E0 = std::min(out.E0, e);
            out.E = std::max(out.E, e);
        }
    }
    return out;
}

ClosedFormEnergy e0_e_closed(const Shape& sh, int s) {
    const int m = sh.m, n = sh.n, l = sh.ell, r = sh.r;
    const int N = sh.top_degree();
    const int cap = m * (r - 1);
    if (s < 0 || s > N) throw std::out_of_range("e0_e_closed: degree out of range");
    ClosedFormEnergy c;
    auto clamp = [&](ClosedFormEnergy v) {
        v.E_lo = std::min(v.E_lo, cap);
        v.E_hi = std::min(v.E_hi, cap);
        v.E0 = std::min(v.E0, cap);
        return v;
    };
    if (s <= l - 1) {
        c = {0, 0, 0, 1};
        return c;
    }
    if (s >= N - l + 1) {
        c = {cap, cap, cap, 4};
        return c;
    }
    if (s <= m * (l - 1) + n) {
        int lo = 1 << 30, hi = -1;
        for (int j = 1; j <= m - 1; ++j) {
            for (int h = 1; h <= l - 1; ++h) {
                int np = s - j * (l - 1) - h;
                if (np < 0 || np > n) continue;
                int j1 = j / l, j2 = j % l, n1 = np / l, n2 = np % l;
                int d = n2 + h - j2;
                int e = j - j1 + n1;
                if (d >= -(l - 1) && d <= -1) e -= 1;
                if (d >= l && d <= 2 * l - 2) e += 1;
                lo = std::min(lo, e);
                hi = std::max(hi, e);
            }
        }
        if (hi < 0) {
            // s = m(l-1)+n' with no (i)-decomposition: fall back to the (2) envelope
            int m1 = m / l, m2 = m % l, n1 = n / l, n2 = n % l;
            int top = n1 + m - m1 - ((n2 - m2) < 0 ? 1 : 0);
            lo = 1;
            hi = top;
        }
        return clamp({0, lo, hi, 2});
    }
    int smn = (m - 1) * (l - 1) + n;
    int k = (s - smn) / l;
    int m1 = m / l, m2 = m % l, n1 = n / l, n2 = n % l;
    int d = n2 - m2;
    int neg = (d >= -(l - 1) && d <= -1) ? 1 : 0;
    int e_smn = m + n1 - m1 - 1 + (d == l - 1 ? 1 : 0) - neg;
    int e_sm1n = m + n1 - m1 - neg;
    if (k <= cap - e_sm1n) return clamp({k, k + e_smn, k + e_sm1n, 3});
    return clamp({k, cap, cap, 3});
}

bool e0_e_consistent(const Shape& sh, int s) {
    EnergyRange b = e0_e(sh, s);
    ClosedFormEnergy c = e0_e_closed(sh, s);
    return b.E0 == c.E0 && c.E_lo <= b.E && b.E <= c.E_hi;
}

std::vector<EnergyVector> k_set(const Shape& sh, int kappa) {
    std::vector<EnergyVector> out;
    if (kappa < 0) return out;
    EnergyVector cur(sh.m, 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == sh.m) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        for (int k = std::min(rem, sh.r - 1); k >= 0; --k) {
            cur[pos] = k;
            self(self, pos + 1, rem - k);
        }
    };
    rec(rec, 0, kappa);
    std::sort(out.begin(), out.end());
    return out;
}

long long k_count(const Shape& sh, int kappa) {
    if (kappa < 0) return 0;
    std::vector<long long> poly{1};
    for (int i = 0; i < sh.m; ++i) {
        std::vector<long long> next(poly.size() + sh.r - 1, 0);
        for (size_t a = 0; a < poly.size(); ++a)
            for (int b = 0; b < sh.r; ++b) next[a + b] += poly[a];
        poly = next;
    }
    return kappa < static_cast<int>(poly.size()) ? poly[kappa] : 0;
}

bool eta_realizable(const Shape& sh, const EnergyVector& kappa, int s) {
    if (static_cast<int>(kappa.size()) != sh.m) return false;
    int total = 0;
    for (int k : kappa) {
        if (k < 0 || k > sh.r - 1) return false;
        total += k;
    }
    int sp = s - sh.ell * total;
    return sp >= 0 && sp <= sh.m * (sh.ell - 1) + sh.n;
}

SuperTuple eta_repr(const Shape& sh, const EnergyVector& kappa, int s) {
    if (!eta_realizable(sh, kappa, s)) throw std::invalid_argument("eta_repr: unrealizable (s, kappa)");
    int total = std::accumulate(kappa.begin(), kappa.end(), 0);
    int sp = s - sh.ell * total;
    SuperTuple t{IVec(sh.m, 0), IVec(sh.n, 0)};
    for (int i = 0; i < sh.m; ++i) {
        int g = std::min(sp, sh.ell - 1);
        t.alpha[i] = sh.ell * kappa[i] + g;
        sp -= g;
    }
    for (int j = 0; j < sp; ++j) t.mu[j] = 1;
    return t;
}

long long dim_formula(const Shape& sh, int s) {
    if (s < 0 || s > sh.top_degree()) return 0;
    long long total = 0;
    const int rl = sh.r * sh.ell;
    for (int i = 0; i <= s; ++i) {
        long long ci = binomial(sh.n, i);
        if (ci == 0) continue;
        for (int j = 0; j <= (s - i) / rl; ++j) {
            long long term = ci * binomial(sh.m, j) * binomial(sh.m + s - i - j * rl - 1, sh.m - 1);
            total += (j % 2 ? -term : term);
        }
    }
    return total;
}

long long dim_restricted(int m, int n, int ell, int s) {
    return dim_formula(Shape{m, n, ell, 1}, s);
}

bool dominating_witness_check(const Shape& sh, int kappa) {
    auto ks = k_set(sh, kappa);
    for (const auto& a : ks) {
        for (const auto& b : ks) {
            if (!succ_lex(a, b)) continue;
            if (succcurlyeq_weight(a, b)) continue;
            if (succcurlyeq_weight(b, a)) return false;
            bool found = false;
            for (const auto& c : ks)
                if (succcurlyeq_weight(c, a) && succcurlyeq_weight(c, b)) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
    }
    return true;
}

}  // namespace qgrass
