#include "qgrass/cycnum.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qgrass {

namespace {

// exact division of integer polynomials, b monic
IntPoly poly_div_exact(IntPoly a, const IntPoly& b) {
    int db = static_cast<int>(b.size()) - 1;
    int da = static_cast<int>(a.size()) - 1;
    if (da < db) return {0};
    IntPoly quot(da - db + 1, 0);
    for (int i = da; i >= db; --i) {
        long long c = a[i];
        quot[i - db] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    for (int i = 0; i < db; ++i)
        if (a[i] != 0) throw std::logic_error("cyclotomic division not exact");
    return quot;
}

using RPoly = std::vector<Rational>;

void rtrim(RPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// remainder and quotient of a by b over Q
void rdivmod(const RPoly& a, const RPoly& b, RPoly& quot, RPoly& rem) {
    rem = a;
    rtrim(rem);
    int db = static_cast<int>(b.size()) - 1;
    quot.assign(rem.size() > b.size() - 1 ? rem.size() - db : 1, Rational(0));
    while (!rem.empty() && static_cast<int>(rem.size()) - 1 >= db) {
        int k = static_cast<int>(rem.size()) - 1 - db;
        Rational c = rem.back() / b.back();
        quot[k] = c;
        for (int j = 0; j <= db; ++j) rem[k + j] -= c * b[j];
        rtrim(rem);
    }
    rtrim(quot);
}

RPoly rmul(const RPoly& a, const RPoly& b) {
    if (a.empty() || b.empty()) return {};
    RPoly out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    rtrim(out);
    return out;
}

RPoly rsub(const RPoly& a, const RPoly& b) {
    RPoly out(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    rtrim(out);
    return out;
}

}  // namespace

IntPoly cyclotomic_polynomial(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic_polynomial: d must be >= 1");
    IntPoly p(d + 1, 0);
    p[0] = -1;
    p[d] = 1;
    for (int e = 1; e < d; ++e)
        if (d % e == 0) p = poly_div_exact(p, cyclotomic_polynomial(e));
    return p;
}

void validate(const RootSpec& spec) {
    if (spec.ell < 3) throw std::invalid_argument("ell must be >= 3");
    if (spec.order == spec.ell) {
        if (spec.ell % 2 == 0) throw std::invalid_argument("order = ell requires ell odd");
    } else if (spec.order != 2 * spec.ell) {
        throw std::invalid_argument("order must be ell or 2*ell");
    }
}

Field::Field(int order) : order_(order), phi_(cyclotomic_polynomial(order)) {
    deg_ = static_cast<int>(phi_.size()) - 1;
    // x^deg = -sum_{j<deg} phi_j x^j
    std::vector<long long> cur(deg_);
    for (int j = 0; j < deg_; ++j) cur[j] = -phi_[j];
    for (int k = 0; k + 1 < deg_; ++k) {
        reduce_.push_back(cur);
        std::vector<long long> next(deg_, 0);
        long long top = cur[deg_ - 1];
        for (int j = deg_ - 1; j > 0; --j) next[j] = cur[j - 1];
        for (int j = 0; j < deg_; ++j) next[j] -= top * phi_[j];
        cur = next;
    }
}

const Field& Field::get(int order) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Field>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(order);
    if (it != registry.end()) return *it->second;
    if (order < 1) throw std::invalid_argument("field order must be >= 1");
    auto f = std::unique_ptr<Field>(new Field(order));
    Field& ref = *f;
    registry.emplace(order, std::move(f));
    CycNum x = ref.from_int(0);
    if (ref.deg_ == 1) {
        x = ref.from_int(-ref.phi_[0]);
    } else {
        x.c_ = {Rational(0), Rational(1)};
    }
    CycNum cur = ref.one();
    for (int k = 0; k < order; ++k) {
        ref.powers_.push_back(cur);
        cur *= x;
    }
    return ref;
}

CycNum Field::zero() const { return CycNum(*this); }

CycNum Field::one() const { return from_int(1); }

CycNum Field::from_int(long long v) const { return from_rational(Rational(static_cast<long>(v))); }

CycNum Field::from_rational(const Rational& v) const {
    CycNum x(*this);
    Rational k = v;
    k.canonicalize();
    if (k != 0) x.c_.push_back(std::move(k));
    return x;
}

CycNum Field::q() const { return q_pow(1); }

const CycNum& Field::q_pow(long long k) const {
    long long r = k % order_;
    if (r < 0) r += order_;
    return powers_[r];
}

Rational CycNum::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[k];
}

bool CycNum::is_one() const { return c_.size() == 1 && c_[0] == 1; }

bool CycNum::is_rational(Rational* out) const {
    if (c_.size() > 1) return false;
    if (out) *out = c_.empty() ? Rational(0) : c_[0];
    return true;
}

void CycNum::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    if (o.c_.empty()) {
        if (!f_) f_ = o.f_;
        return *this;
    }
    if (!f_) f_ = o.f_;
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    if (o.c_.empty()) {
        if (!f_) f_ = o.f_;
        return *this;
    }
    if (!f_) f_ = o.f_;
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

CycNum& CycNum::operator*=(const Rational& r) {
    Rational k = r;
    k.canonicalize();
    if (k == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= k;
    return *this;
}

void CycNum::add_mul(const CycNum& a, const CycNum& b) {
    if (a.c_.empty() || b.c_.empty()) {
        if (!f_) f_ = a.f_ ? a.f_ : b.f_;
        return;
    }
    if (!f_) f_ = a.f_;
    if (a.c_.size() == 1 && b.c_.size() == 1) {
        if (c_.empty()) c_.push_back(Rational(0));
        c_[0] += a.c_[0] * b.c_[0];
        trim();
        return;
    }
    *this += a * b;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    const Field* f = a.f_ ? a.f_ : b.f_;
    CycNum out;
    out.f_ = f;
    if (a.c_.empty() || b.c_.empty()) return out;
    if (a.c_.size() == 1) {
        out.c_ = b.c_;
        for (auto& c : out.c_) c *= a.c_[0];
        return out;
    }
    if (b.c_.size() == 1) {
        out.c_ = a.c_;
        for (auto& c : out.c_) c *= b.c_[0];
        return out;
    }
    size_t n = a.c_.size() + b.c_.size() - 1;
    CycNum::Coeffs prod(n, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
    }
    int deg = f->deg_;
    for (int k = static_cast<int>(n) - 1; k >= deg; --k) {
        if (prod[k] == 0) continue;
        const auto& red = f->reduce_[k - deg];
        for (int j = 0; j < deg; ++j)
            if (red[j] != 0) prod[j] += prod[k] * static_cast<long>(red[j]);
        prod[k] = 0;
    }
    if (static_cast<int>(prod.size()) > deg) prod.resize(deg);
    out.c_ = std::move(prod);
    out.trim();
    return out;
}

CycNum& CycNum::operator*=(const CycNum& o) {
    *this = *this * o;
    return *this;
}

CycNum CycNum::inverse() const {
    if (c_.empty()) throw std::domain_error("CycNum: inverse of zero");
    if (c_.size() == 1) {
        CycNum r = *this;
        r.c_[0] = 1 / c_[0];
        return r;
    }
    // extended Euclid: find u with u*a = 1 mod phi
    RPoly a(c_.begin(), c_.end());
    RPoly m;
    for (long long v : f_->phi_) m.push_back(Rational(static_cast<long>(v)));
    RPoly r0 = m, r1 = a, s0 = {}, s1 = {Rational(1)};
    while (!r1.empty()) {
        RPoly quot, rem;
        rdivmod(r0, r1, quot, rem);
        RPoly s2 = rsub(s0, rmul(quot, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant since phi is irreducible
    if (r0.size() != 1) throw std::logic_error("CycNum: modulus not irreducible");
    Rational inv = 1 / r0[0];
    RPoly quot, rem;
    rdivmod(s0, m, quot, rem);
    CycNum out(*f_);
    for (auto& c : rem) out.c_.push_back(c * inv);
    out.trim();
    return out;
}

CycNum CycNum::pow(long long k) const {
    if (k < 0) return inverse().pow(-k);
    CycNum base = *this;
    CycNum acc = f_ ? f_->one() : CycNum();
    if (!f_) return k == 0 ? acc : CycNum();
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

bool CycNum::operator==(const CycNum& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::strong_ordering CycNum::operator<=>(const CycNum& o) const {
    if (c_.size() != o.c_.size()) return c_.size() <=> o.c_.size();
    for (size_t i = c_.size(); i-- > 0;) {
        int c = cmp(c_[i], o.c_[i]);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string CycNum::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = c_.size(); k-- > 0;) {
        Rational c = c_[k];
        if (c == 0) continue;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << "q";
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

CycNum CycNum::parse(const std::string& text, const Field& f) {
    CycNum out(f);
    std::string s;
    for (char ch : text)
        if (ch != ' ') s += ch;
    if (s.empty()) throw std::invalid_argument("CycNum::parse: empty string");
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string term = s.substr(i, j - i);
        if (term.empty()) throw std::invalid_argument("CycNum::parse: malformed '" + text + "'");
        Rational coef(1);
        long long power = 0;
        auto qpos = term.find('q');
        if (qpos == std::string::npos) {
            coef = Rational(term);
        } else {
            std::string cpart = term.substr(0, qpos);
            if (!cpart.empty()) {
                if (cpart.back() != '*') throw std::invalid_argument("CycNum::parse: malformed '" + text + "'");
                cpart.pop_back();
                coef = Rational(cpart);
            }
            std::string ppart = term.substr(qpos + 1);
            power = 1;
            if (!ppart.empty()) {
                if (ppart[0] != '^') throw std::invalid_argument("CycNum::parse: malformed '" + text + "'");
                power = std::stoll(ppart.substr(1));
            }
        }
        coef.canonicalize();
        out += f.q_pow(power) * (sign < 0 ? Rational(-coef) : coef);
        i = j;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.str(); }

}  // namespace qgrass
