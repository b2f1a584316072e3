#pragma once

#include "qgrass/cycnum.hpp"
#include "qgrass/linalg.hpp"
#include "qgrass/omega.hpp"
#include "qgrass/superindex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qgrass {

// Multi-index of a product of the dxi_i, i = 1..m+n.
struct XiIndex {
    IVec bits;

    int degree() const;
    // indices in increasing order, 1-based
    std::vector<int> word() const;
    auto operator<=>(const XiIndex&) const = default;
    std::string str() const;
};

struct XiTerm {
    CycNum coef;
    XiIndex xi;
};

// dxi^a ^ dxi^b = (-q)^{a*b} dxi^{a+b}, zero on overlap; * is taken over the full m+n tuple.
std::optional<XiTerm> wedge(const XiIndex& a, const XiIndex& b, const Field& f);

// (x^(alpha) (x) x^nu) (x) dxi^xi
struct DFormIndex {
    SuperTuple coeff;
    XiIndex xi;

    int degree() const { return xi.degree(); }
    // lexicographic on the xi-word first, then on the coefficient tuple
    bool operator<(const DFormIndex& o) const;
    bool operator==(const DFormIndex& o) const = default;
    std::string str() const;
};

struct DTerm {
    CycNum coef;
    DFormIndex form;
};

// d applied to one basis form; terms leaving the box never arise since d lowers exponents.
std::vector<DTerm> apply_d(const Shape& sh, const DFormIndex& w);

struct SuperWeight {
    IVec lambda;  // m even coordinates then n bits
    int k = 0;    // even coordinates equal to r*ell
    int h0 = 0;   // even coordinates equal to 0
    int h = 0;    // all coordinates equal to 0
    int nu_size = 0;

    static SuperWeight of(const Shape& sh, const IVec& lambda);
    bool critical(const Shape& sh) const { return k + h == sh.m + sh.n; }
    bool is_zero() const;
    auto operator<=>(const SuperWeight& o) const { return lambda <=> o.lambda; }
    bool operator==(const SuperWeight& o) const { return lambda == o.lambda; }
    std::string str(const Shape& sh) const;
};

SuperWeight super_weight(const Shape& sh, const DFormIndex& w);

// All degree-s forms of the truncated complex, in block order.
std::vector<DFormIndex> enumerate_forms(const Shape& sh, int s);
// Forms of super-weight lambda in degree s.
std::vector<DFormIndex> enumerate_block(const Shape& sh, const SuperWeight& lambda, int s);

// Matrix of d^s between the given ordered bases.
SparseMatrix d_matrix(const Shape& sh, const std::vector<DFormIndex>& src, const std::vector<DFormIndex>& dst);
// Whole truncated complex.
SparseMatrix d_matrix(const Shape& sh, int s);

struct DeRhamBlock {
    SuperWeight weight;
    int s = 0;
    std::vector<DFormIndex> basis;
    SparseMatrix d_in;   // from degree s-1
    SparseMatrix d_out;  // to degree s+1
};

DeRhamBlock build_block(const Shape& sh, const SuperWeight& lambda, int s);

// Block dimension predicted from the weight alone.
long long block_dim_formula(const Shape& sh, const SuperWeight& lambda, int s);

struct BlockCheck {
    long long weights = 0;
    long long checks = 0;
    long long dim_failures = 0;
    long long nonempty_failures = 0;
    long long total_failures = 0;  // sum over weights against the whole degree
    bool ok() const { return dim_failures == 0 && nonempty_failures == 0 && total_failures == 0; }
};

// Every weight with even coordinates in [0, r*ell] and every degree.
BlockCheck weight_blocks_check(const Shape& sh);
std::vector<DeRhamBlock> weight_blocks(const Shape& sh, int s);

struct CriticalForm {
    SuperWeight weight;
    IVec tau;  // odd bits
    DFormIndex form;
};

std::vector<CriticalForm> critical_weights(const Shape& sh, int s);

struct ComplexCheck {
    bool ok = true;
    std::vector<std::string> failures;
    long long products = 0;
};

// d^{s+1} d^s = 0 on the truncated complex of sh and on the enlarged box r+1.
ComplexCheck complex_check(const Shape& sh);
ComplexCheck partial_ops_check(const Shape& sh, int s);

struct CohomologyRow {
    int s = 0;
    long long dim_D = 0;
    long long rank_d = 0;
    long long dim_H = 0;
    long long expected = 0;
    long long critical = 0;
};

struct CohomologyTable {
    Shape shape;
    std::vector<CohomologyRow> rows;
    std::vector<std::string> critical_forms;
    bool betti_match = false;
    bool noncritical_exact = false;
    bool critical_contribute_one = false;
    bool rank_bound = false;
    bool euler = false;
    bool double_count = false;
    std::vector<std::string> diagnostics;
    bool ok() const {
        return betti_match && noncritical_exact && critical_contribute_one && rank_bound && euler && double_count;
    }
};

CohomologyTable cohomology(const Shape& sh);

struct PoincareReport {
    Shape shape;  // r chosen by the enlargement rule
    SuperWeight weight;
    std::vector<long long> dims;
    std::vector<long long> ranks;
    bool exact = false;
};

// lambda given as m even coordinates then n bits, lambda != 0.
PoincareReport poincare_check(int m, int n, int ell, const IVec& lambda);

}  // namespace qgrass
