#pragma once

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

namespace qgrass {

using Rational = mpq_class;

// Integer polynomial, coefficients from degree 0 upward.
using IntPoly = std::vector<long long>;

IntPoly cyclotomic_polynomial(int d);

struct RootSpec {
    int ell = 3;
    int order = 3;
    bool operator==(const RootSpec&) const = default;
};

// Throws std::invalid_argument on an unsupported spec.
void validate(const RootSpec& spec);

class CycNum;

// Q[x]/(Phi_d). Instances are interned per order and never destroyed.
class Field {
public:
    static const Field& get(int order);
    static const Field& get(const RootSpec& spec) { return get(spec.order); }

    int order() const { return order_; }
    int degree() const { return deg_; }
    const IntPoly& modulus() const { return phi_; }

    CycNum zero() const;
    CycNum one() const;
    CycNum from_int(long long v) const;
    CycNum from_rational(const Rational& v) const;
    CycNum q() const;
    // q^k for any integer k
    const CycNum& q_pow(long long k) const;

private:
    explicit Field(int order);
    friend class CycNum;
    friend CycNum operator*(const CycNum& a, const CycNum& b);

    int order_;
    int deg_;
    IntPoly phi_;
    // reduce_[k] = x^(deg+k) mod Phi_d, for 0 <= k <= deg-2
    std::vector<std::vector<long long>> reduce_;
    std::vector<CycNum> powers_;
};

class CycNum {
public:
    using Coeffs = boost::container::small_vector<Rational, 4>;

    CycNum() = default;
    CycNum(const Field& f) : f_(&f) {}

    const Field* field() const { return f_; }
    // Trimmed coefficient list; empty means zero.
    const Coeffs& coeffs() const { return c_; }
    Rational coeff(int k) const;

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    // True when the element is a rational constant; writes it to out.
    bool is_rational(Rational* out = nullptr) const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    CycNum& operator*=(const Rational& r);
    CycNum& operator/=(const CycNum& o) { return *this *= o.inverse(); }

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator*(CycNum a, const Rational& r) { return a *= r; }
    friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

    // Throws std::domain_error on zero.
    CycNum inverse() const;
    CycNum pow(long long k) const;

    // this += a*b without temporaries on the hot path
    void add_mul(const CycNum& a, const CycNum& b);

    bool operator==(const CycNum& o) const;
    // Arbitrary but deterministic total order, used for grouping.
    std::strong_ordering operator<=>(const CycNum& o) const;

    // Polynomial form in q, highest power first, e.g. "-q - 1", "2*q^3 - 1/2".
    std::string str() const;
    static CycNum parse(const std::string& s, const Field& f);

private:
    friend class Field;
    void trim();
    const Field* f_ = nullptr;
    Coeffs c_;
};

std::ostream& operator<<(std::ostream& os, const CycNum& x);

}  // namespace qgrass
