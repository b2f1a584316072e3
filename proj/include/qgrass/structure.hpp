#pragma once

#include "qgrass/linalg.hpp"
#include "qgrass/omega.hpp"
#include "qgrass/superindex.hpp"

#include <string>
#include <vector>

namespace qgrass {

// A finite-dimensional module given by matrices on a fixed basis.
// raising holds the e_i; all holds every generator used for invariance.
struct ModuleAction {
    int dim = 0;
    const Field* field = nullptr;
    std::vector<SparseMatrix> raising;
    std::vector<SparseMatrix> all;
    // True when every generator maps basis vectors to multiples of basis vectors
    // and distinct weights are separated by a torus grading (monomial modules).
    bool monomial = false;
};

ModuleAction module_of(const GradedPiece& piece, const ActionMatrices& am);
// Action on N in the coordinates of N.basis(); N must be invariant.
ModuleAction restrict_to(const ModuleAction& mod, const Subspace& n);

struct QuotientModule {
    ModuleAction action;
    std::vector<int> columns;  // ambient basis index of each quotient basis vector
};
// Representatives are the non-pivot columns of V.
QuotientModule quotient(const ModuleAction& mod, const Subspace& v);
// Block-diagonal sum, used as a decomposable control.
ModuleAction direct_sum(const ModuleAction& a, const ModuleAction& b);

bool is_invariant(const ModuleAction& mod, const Subspace& v);

struct CyclicModule {
    SparseVec generator;
    Subspace space;
};

// Throws std::invalid_argument on v = 0.
CyclicModule cyclic_closure(const SparseVec& v, const ModuleAction& mod);
CyclicModule cyclic_closure(const SparseVec& v, const GradedPiece& piece, const ActionMatrices& am);

// Joint kernel of the raising operators.
Subspace maximal_vectors(const ModuleAction& mod);

struct SimplicityReport {
    bool simple = false;
    bool highest_weight_test = false;  // one-dimensional maximal space generating everything
    bool commutant_local = false;      // End is local with residue dimension 1
    bool single_vector_test = false;   // every basis vector of a weight basis generates the module
    bool consistent = true;
    int dim = 0;
    int maximal_dim = 0;
};

SimplicityReport simplicity_report(const ModuleAction& mod);
bool simplicity_certify(const CyclicModule& cm, const ModuleAction& mod);

struct FiltrationReport {
    Shape shape;
    int s = 0;
    int E0 = 0;
    int E = 0;
    std::vector<Subspace> chain;
    std::vector<int> layer_dims;
    std::vector<long long> layer_multiplicities;  // #K_i^(s) by enumeration
    std::vector<long long> multiplicity_formula;  // polynomial coefficient
    std::vector<long long> expected_layer_dims;   // multiplicity * restricted dimension
    int loewy_length = 0;
    bool strictly_increasing = false;
    bool invariant = false;
    bool layers_match = false;
    bool primitive_vectors = false;  // e_j x^eta(kappa) lies in the previous term
    bool ok() const { return strictly_increasing && invariant && layers_match && primitive_vectors; }
};

FiltrationReport edeg_filtration(const GradedPiece& piece, const ActionMatrices& am);

struct SocleCertificate {
    Subspace socle;
    std::vector<std::string> log;
    int summands = 0;
    std::vector<int> summand_dims;
    bool invariant = false;
    bool summands_simple = false;
    bool direct_sum_equal = false;
    bool exclusion = false;
    bool probabilistic = false;
    bool ok() const { return invariant && summands_simple && direct_sum_equal && exclusion; }
};

// Certifies that s_cand is the socle of mod, given generators of its simple summands.
SocleCertificate certify_socle(const ModuleAction& mod, const Subspace& s_cand,
                               const std::vector<SparseVec>& summand_generators);
// Candidate: span of monomials of lowest energy grade, summands generated by x^eta(kappa).
SocleCertificate socle_certify(const GradedPiece& piece, const ActionMatrices& am);

bool indecomposable(const ModuleAction& mod, LocalAlgebraReport* rep = nullptr);
bool indecomposability_certify(const GradedPiece& piece, const ActionMatrices& am,
                               LocalAlgebraReport* rep = nullptr);

struct SocleFiltrationReport {
    std::vector<SocleCertificate> levels;
    bool ok() const;
};

// Soc(piece / V_{i-1}) = V_i / V_{i-1} at every level.
SocleFiltrationReport socle_filtration_check(const GradedPiece& piece, const ActionMatrices& am);

struct NetVertex {
    EnergyVector kappa;
    SuperTuple eta;
    int dim = 0;
};

struct NetEdge {
    int from = 0;  // smaller module
    int to = 0;
    bool componentwise = false;  // kappa(to) >= kappa(from) in every coordinate
};

struct OrderCheck {
    long long equiv_pairs = 0, equiv_failures = 0;
    long long partial_pairs = 0, partial_failures = 0;
    long long incomparable_pairs = 0, incomparable_failures = 0;
    bool ok() const { return equiv_failures == 0 && partial_failures == 0 && incomparable_failures == 0; }
};

struct InclusionNet {
    Shape shape;
    int s = 0;
    std::vector<NetVertex> vertices;
    std::vector<NetEdge> edges;
    // adjacent-grade pairs with kappa' >= kappa componentwise that failed strict inclusion
    std::vector<std::pair<int, int>> missing;
    OrderCheck orders;
    bool ok() const { return missing.empty() && orders.ok(); }
    std::string dot() const;
};

InclusionNet inclusion_net(const GradedPiece& piece, const ActionMatrices& am);

// Stratification checks on monomial pairs of one degree: equivalent tuples generate the same
// module; componentwise-larger energy gives strictly larger modules; non-equivalent tuples of
// equal total energy generate mutually non-included modules. max_pairs = 0 means exhaustive,
// otherwise pairs are sampled with the given seed.
OrderCheck energy_order_check(const GradedPiece& piece, const ActionMatrices& am, long long max_pairs = 0,
                              unsigned seed = 1);

}  // namespace qgrass
