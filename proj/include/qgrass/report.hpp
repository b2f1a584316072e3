#pragma once

#include "qgrass/cycnum.hpp"
#include "qgrass/derham.hpp"
#include "qgrass/linalg.hpp"
#include "qgrass/omega.hpp"
#include "qgrass/structure.hpp"
#include "qgrass/superindex.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace qgrass {

using Json = nlohmann::ordered_json;

Json to_json(const CycNum& x);
Json to_json(const SparseMatrix& a);
Json to_json(const RootSpec& s);
Json to_json(const Shape& sh);
Json to_json(const SuperTuple& t);
Json to_json(const Subspace& v);

// Result of one command: the JSON body, optional text artifact, and the conjunction of its assertions.
struct Report {
    Json body;
    std::string csv;
    std::string dot;
    bool ok = true;
};

Report report_identities(const RootSpec& spec, int smax);
Report report_dims(const Shape& sh, const std::vector<int>& degrees);
Report report_relations(const Shape& sh, const std::vector<int>& degrees);
Report report_socle(const Shape& sh, const std::vector<int>& degrees);
Report report_loewy(const Shape& sh, const std::vector<int>& degrees);
Report report_net(const Shape& sh, const std::vector<int>& degrees);
Report report_derham(const Shape& sh);
Report report_poincare(int m, int n, int ell, const IVec& lambda);

// Componentwise energy never increases along a nonzero generator action.
struct MonotonicityCheck {
    long long pairs = 0;
    long long failures = 0;
    bool ok() const { return failures == 0; }
};
MonotonicityCheck edeg_monotonicity(const Shape& sh);

std::string cohomology_csv(const CohomologyTable& tab);
Json cohomology_json(const CohomologyTable& tab);
Json filtration_json(const FiltrationReport& rep);
Json certificate_json(const SocleCertificate& cert);

}  // namespace qgrass
