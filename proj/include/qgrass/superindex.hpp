#pragma once

#include <compare>
#include <string>
#include <vector>

namespace qgrass {

struct Shape {
    int m = 2;
    int n = 1;
    int ell = 3;
    int r = 1;

    int box() const { return r * ell - 1; }  // max even exponent
    int top_degree() const { return m * box() + n; }
    bool operator==(const Shape&) const = default;
    std::string str() const;
};

// Throws std::invalid_argument; structure consumers pass need_m2 = true.
void validate(const Shape& sh, bool need_m2 = false);

using IVec = std::vector<int>;

struct SuperTuple {
    IVec alpha;
    IVec mu;  // bits

    int degree() const;
    // alpha followed by mu
    IVec full() const;
    auto operator<=>(const SuperTuple&) const = default;
    std::string str() const;
};

using EnergyVector = IVec;

long long star(const IVec& beta, const IVec& gamma);
long long super_star(const SuperTuple& a, const SuperTuple& b);

std::vector<SuperTuple> enumerate_graded(const Shape& sh, int s);
std::vector<SuperTuple> enumerate_all(const Shape& sh);
bool in_box(const Shape& sh, const SuperTuple& t);

int edeg(const SuperTuple& t, int ell);
EnergyVector edeg_vector(const SuperTuple& t, int ell);

bool equiv(const SuperTuple& a, const SuperTuple& b, int ell);
bool geq_partial(const SuperTuple& a, const SuperTuple& b, int ell);
bool geq_partial(const EnergyVector& a, const EnergyVector& b);
bool succ_lex(const EnergyVector& a, const EnergyVector& b);
bool succcurlyeq_weight(const EnergyVector& k1, const EnergyVector& k2);

struct EnergyRange {
    int E0 = 0;
    int E = 0;
};

struct ClosedFormEnergy {
    int E0 = 0;
    int E_lo = 0;  // the closed form is an interval in the middle range
    int E_hi = 0;
    int case_id = 0;
};

EnergyRange e0_e(const Shape& sh, int s);
ClosedFormEnergy e0_e_closed(const Shape& sh, int s);
bool e0_e_consistent(const Shape& sh, int s);

std::vector<EnergyVector> k_set(const Shape& sh, int kappa);
// coefficient of t^kappa in (1 + ... + t^(r-1))^m
long long k_count(const Shape& sh, int kappa);

// Throws std::invalid_argument when (s, kappa) is not realizable.
SuperTuple eta_repr(const Shape& sh, const EnergyVector& kappa, int s);
bool eta_realizable(const Shape& sh, const EnergyVector& kappa, int s);

long long dim_formula(const Shape& sh, int s);
long long dim_restricted(int m, int n, int ell, int s);

// Exhaustive search for the dominating element in each incomparable pair of K(kappa).
bool dominating_witness_check(const Shape& sh, int kappa);

}  // namespace qgrass
