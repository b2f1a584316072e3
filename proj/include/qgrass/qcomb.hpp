#pragma once

#include "qgrass/cycnum.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qgrass {

// Laurent polynomial in v with integer coefficients: sum c[k] v^(lo+k).
struct LaurentPoly {
    long long lo = 0;
    std::vector<mpz_class> c;

    static LaurentPoly monomial(long long exp, long long coef = 1);
    bool is_zero() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    // exact division by (v^a - v^-a), a > 0; throws if not exact
    LaurentPoly div_antisym(long long a) const;
    CycNum specialize(const Field& f) const;
};

// Gaussian binomial in Z[v, v^-1] by the product formula, for all integers m, r.
LaurentPoly q_binom_laurent(long long m, long long r);

CycNum q_int(long long n, const Field& f);
CycNum q_factorial(long long n, const Field& f);
CycNum q_binom(long long m, long long r, const Field& f);
int char_q(const Field& f);

inline CycNum q_int(long long n, const RootSpec& s) { return q_int(n, Field::get(s)); }
inline CycNum q_factorial(long long n, const RootSpec& s) { return q_factorial(n, Field::get(s)); }
inline CycNum q_binom(long long m, long long r, const RootSpec& s) { return q_binom(m, r, Field::get(s)); }
inline int char_q(const RootSpec& s) { return char_q(Field::get(s)); }

long long binomial(long long n, long long k);

// Product side of the mod-ell factorization of [s r], sign included for order 2*ell.
CycNum lucas_rhs(long long s, long long r, const RootSpec& spec);
bool lucas_factorization_check(long long s, long long r, const RootSpec& spec);
// [s ell] against s1 (with the sign for order 2*ell)
bool lucas_ell_check(long long s, const RootSpec& spec);
bool pascal_check(long long m, long long r, const RootSpec& spec);

struct IdentityFamily {
    std::string name;
    long long passed = 0;
    long long failed = 0;
};

// Runs Pascal, both Lucas-type factorizations and char(q) over 0 <= r <= s <= smax.
std::vector<IdentityFamily> identity_suite(const RootSpec& spec, int smax);

}  // namespace qgrass
