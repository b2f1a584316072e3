#include "qgrass/qcomb.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace qgrass {

LaurentPoly LaurentPoly::monomial(long long exp, long long coef) {
    LaurentPoly p;
    p.lo = exp;
    p.c = {mpz_class(static_cast<long>(coef))};
    return p;
}

bool LaurentPoly::is_zero() const {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out;
    out.lo = lo + o.lo;
    if (c.empty() || o.c.empty()) return out;
    out.c.assign(c.size() + o.c.size() - 1, mpz_class(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) out.c[i + j] += c[i] * o.c[j];
    return out;
}

LaurentPoly LaurentPoly::div_antisym(long long a) const {
    // P = Q * v^-a * (v^2a - 1), so Q' = Q*v^-a solves P = Q'*v^2a - Q'
    if (a <= 0) throw std::invalid_argument("div_antisym: a must be positive");
    size_t w = static_cast<size_t>(2 * a);
    LaurentPoly out;
    if (c.size() <= w) {
        if (!is_zero()) throw std::logic_error("div_antisym: not exact");
        return out;
    }
    std::vector<mpz_class> qc(c.size() - w, mpz_class(0));
    // p_j = q_{j-w} - q_j, ascending
    for (size_t j = 0; j < c.size(); ++j) {
        mpz_class prev = j >= w ? qc[j - w] : mpz_class(0);
        mpz_class val = prev - c[j];
        if (j < qc.size()) {
            qc[j] = val;
        } else if (val != 0) {
            throw std::logic_error("div_antisym: not exact");
        }
    }
    out.c = std::move(qc);
    out.lo = lo + a;
    return out;
}

CycNum LaurentPoly::specialize(const Field& f) const {
    CycNum out = f.zero();
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        out += f.q_pow(lo + static_cast<long long>(k)) * Rational(c[k]);
    }
    return out;
}

LaurentPoly q_binom_laurent(long long m, long long r) {
    if (r < 0) return {};
    if (m < 0) {
        LaurentPoly p = q_binom_laurent(-m + r - 1, r);
        if (r % 2) for (auto& x : p.c) x = -x;
        return p;
    }
    if (m < r) return {};
    LaurentPoly p = LaurentPoly::monomial(0);
    for (long long i = 1; i <= r; ++i) {
        long long a = m - i + 1;
        LaurentPoly num;
        num.lo = -a;
        num.c.assign(2 * a + 1, mpz_class(0));
        num.c.front() = -1;
        num.c.back() = 1;
        p = (p * num).div_antisym(i);
    }
    return p;
}

CycNum q_int(long long n, const Field& f) {
    if (n < 0) return -q_int(-n, f);
    CycNum out = f.zero();
    for (long long k = 0; k < n; ++k) out += f.q_pow(n - 1 - 2 * k);
    return out;
}

CycNum q_factorial(long long n, const Field& f) {
    if (n < 0) throw std::invalid_argument("q_factorial: n must be >= 0");
    CycNum out = f.one();
    for (long long k = 1; k <= n; ++k) out *= q_int(k, f);
    return out;
}

CycNum q_binom(long long m, long long r, const Field& f) {
    static std::mutex mu;
    static std::map<std::tuple<int, long long, long long>, CycNum> cache;
    auto key = std::make_tuple(f.order(), m, r);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    CycNum v = q_binom_laurent(m, r).specialize(f);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, v);
    return v;
}

int char_q(const Field& f) {
    for (int n = 1; n <= 4 * f.order() + 4; ++n)
        if (q_int(n, f).is_zero()) return n;
    return 0;
}

long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

CycNum lucas_rhs(long long s, long long r, const RootSpec& spec) {
    const Field& f = Field::get(spec);
    long long l = spec.ell;
    long long s0 = s % l, s1 = s / l, r0 = r % l, r1 = r / l;
    CycNum v = q_binom(s0, r0, f) * Rational(static_cast<long>(binomial(s1, r1)));
    if (spec.order == 2 * spec.ell) {
        long long e = (s1 + 1) * r1 * l + s0 * r1 - r0 * s1;
        if (((e % 2) + 2) % 2) v = -v;
    }
    return v;
}

bool lucas_factorization_check(long long s, long long r, const RootSpec& spec) {
    if (s < r || r < 0) throw std::invalid_argument("lucas_factorization_check: need 0 <= r <= s");
    return q_binom(s, r, spec) == lucas_rhs(s, r, spec);
}

bool lucas_ell_check(long long s, const RootSpec& spec) {
    long long l = spec.ell;
    long long s0 = ((s % l) + l) % l, s1 = (s - s0) / l;
    long long expect = s1;
    if (spec.order == 2 * spec.ell) {
        long long e = (s1 + 1) * l + s0;
        if (((e % 2) + 2) % 2) expect = -expect;
    }
    const Field& f = Field::get(spec);
    return q_binom(s, l, f) == f.from_int(expect);
}

bool pascal_check(long long m, long long r, const RootSpec& spec) {
    const Field& f = Field::get(spec);
    CycNum rhs = f.q_pow(r - m) * q_binom(m - 1, r - 1, f) + f.q_pow(r) * q_binom(m - 1, r, f);
    return q_binom(m, r, f) == rhs;
}

std::vector<IdentityFamily> identity_suite(const RootSpec& spec, int smax) {
    validate(spec);
    IdentityFamily pascal{"pascal"}, lucas{"lucas_factorization"}, lucas_e{"lucas_ell"},
        chr{"char_q"};
    auto tally = [](IdentityFamily& fam, bool ok) { ok ? ++fam.passed : ++fam.failed; };
    for (int s = 0; s <= smax; ++s) {
        for (int r = 0; r <= s; ++r) {
            if (r >= 1) tally(pascal, pascal_check(s, r, spec));
            tally(lucas, lucas_factorization_check(s, r, spec));
        }
        if (s >= spec.ell) tally(lucas_e, lucas_ell_check(s, spec));
    }
    tally(chr, char_q(spec) == spec.ell);
    return {pascal, lucas, lucas_e, chr};
}

}  // namespace qgrass
