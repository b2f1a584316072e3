#pragma once

#include "qgrass/cycnum.hpp"
#include "qgrass/linalg.hpp"
#include "qgrass/superindex.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qgrass {

// The coefficient field of a shape: q a primitive ell-th root of unity.
const Field& shape_field(const Shape& sh);

enum class GenKind { E, F, K, Kinv };

struct Generator {
    GenKind kind = GenKind::E;
    int index = 1;  // 1-based, e/f in 1..m+n-1, K in 1..m+n

    std::string str() const;
    bool operator==(const Generator&) const = default;
};

// Throws std::invalid_argument on an index out of range.
void validate(const Generator& g, const Shape& sh);

struct OmegaElement {
    Shape shape;
    std::map<SuperTuple, CycNum> terms;

    static OmegaElement monomial(const Shape& sh, const SuperTuple& t, const CycNum& c);
    bool is_zero() const { return terms.empty(); }
    void add(const SuperTuple& t, const CycNum& c);
    bool operator==(const OmegaElement& o) const;
    std::string str() const;
};

struct Term {
    CycNum coef;
    SuperTuple tuple;
};

// Product of two basis monomials; nullopt when it vanishes.
// With truncated = true, targets outside the box are dropped.
std::optional<Term> monomial_product(const Shape& sh, const SuperTuple& a, const SuperTuple& b,
                                     bool truncated);
OmegaElement multiply(const OmegaElement& a, const OmegaElement& b, bool truncated = true);

std::optional<Term> act_monomial(const Shape& sh, const Generator& g, const SuperTuple& x,
                                 bool truncated = true);
OmegaElement act_generator(const Generator& g, const OmegaElement& v, bool truncated = true);

struct GradedPiece {
    Shape shape;
    int s = 0;
    std::vector<SuperTuple> basis;
    std::map<SuperTuple, int> index;

    static GradedPiece build(const Shape& sh, int s);
    int dim() const { return static_cast<int>(basis.size()); }
    // -1 when absent
    int find(const SuperTuple& t) const;
    const Field& field() const { return shape_field(shape); }

    SparseVec vector_of(const OmegaElement& v) const;
    OmegaElement element_of(const SparseVec& v) const;
};

struct ActionMatrices {
    int dim = 0;
    std::vector<SparseMatrix> e, f, K, Kinv;  // e[i-1] is e_i

    const SparseMatrix& get(const Generator& g) const;
    // e, f and K matrices; K^-1 adds nothing for invariance questions
    std::vector<SparseMatrix> module_generators() const;
    std::vector<Generator> labels(const Shape& sh) const;
};

ActionMatrices action_matrices(const GradedPiece& piece);

struct RelationFailure {
    std::string relation;
    std::string detail;
    int column = -1;  // first basis vector where the identity fails
};

struct RelationFamily {
    std::string name;
    long long checked = 0;
    long long failed = 0;
};

struct RelationsReport {
    std::vector<RelationFamily> families;
    std::vector<RelationFailure> failures;
    bool ok() const { return failures.empty(); }
};

// (R1)-(R7) of the defining relations, restrictedness e_i^ell = f_i^ell = 0 (i != m),
// and K_i^order = K_i^(2*order) = 1 as diagnostics, all as exact matrix identities.
RelationsReport relations_check(const ActionMatrices& am, const GradedPiece& piece);

struct DimCheck {
    long long enumerated = 0;
    long long formula = 0;
    bool ok() const { return enumerated == formula; }
};

DimCheck dim_check(const Shape& sh, int s);

}  // namespace qgrass
