#include "qgrass/report.hpp"

#include "qgrass/qcomb.hpp"

#include <sstream>

namespace qgrass {

Json to_json(const CycNum& x) { return x.str(); }

Json to_json(const SparseMatrix& a) {
    Json entries = Json::array();
    for (int j = 0; j < a.cols(); ++j)
        for (const auto& [i, v] : a.col(j).e) entries.push_back(Json::array({i, j, v.str()}));
    return Json{{"rows", a.rows()}, {"cols", a.cols()}, {"entries", entries}};
}

Json to_json(const RootSpec& s) { return Json{{"ell", s.ell}, {"order", s.order}}; }

Json to_json(const Shape& sh) { return Json{{"m", sh.m}, {"n", sh.n}, {"ell", sh.ell}, {"r", sh.r}}; }

Json to_json(const SuperTuple& t) { return Json{{"alpha", t.alpha}, {"mu", t.mu}}; }

Json to_json(const Subspace& v) {
    Json rows = Json::array();
    for (const auto& b : v.basis()) {
        Json row = Json::array();
        for (const auto& [i, c] : b.e) row.push_back(Json::array({i, c.str()}));
        rows.push_back(row);
    }
    return Json{{"ambient", v.ambient_dim()}, {"dim", v.dim()}, {"basis", rows}};
}

Report report_identities(const RootSpec& spec, int smax) {
    validate(spec);
    Report rep;
    rep.body["command"] = "identities";
    rep.body["spec"] = to_json(spec);
    rep.body["smax"] = smax;
    Json fams = Json::array();
    for (const auto& f : identity_suite(spec, smax)) {
        fams.push_back({{"name", f.name}, {"passed", f.passed}, {"failed", f.failed}});
        if (f.failed) rep.ok = false;
    }
    rep.body["families"] = fams;
    rep.body["ok"] = rep.ok;
    std::ostringstream csv;
    csv << "name,passed,failed\n";
    for (const auto& f : fams) csv << f["name"].get<std::string>() << "," << f["passed"] << "," << f["failed"] << "\n";
    rep.csv = csv.str();
    return rep;
}

Report report_dims(const Shape& sh, const std::vector<int>& degrees) {
    validate(sh);
    Report rep;
    rep.body["command"] = "dims";
    rep.body["shape"] = to_json(sh);
    Json rows = Json::array();
    std::ostringstream csv;
    csv << "s,enumerated,formula,E0,E\n";
    for (int s : degrees) {
        DimCheck d = dim_check(sh, s);
        EnergyRange er = d.enumerated ? e0_e(sh, s) : EnergyRange{};
        rows.push_back({{"s", s}, {"enumerated", d.enumerated}, {"formula", d.formula}, {"ok", d.ok()},
                        {"E0", er.E0}, {"E", er.E}});
        csv << s << "," << d.enumerated << "," << d.formula << "," << er.E0 << "," << er.E << "\n";
        if (!d.ok()) rep.ok = false;
    }
    long long total = static_cast<long long>(enumerate_all(sh).size());
    long long expect = 1;
    for (int i = 0; i < sh.m; ++i) expect *= sh.r * sh.ell;
    expect <<= sh.n;
    if (total != expect) rep.ok = false;
    rep.body["rows"] = rows;
    rep.body["total"] = {{"enumerated", total}, {"expected", expect}};
    MonotonicityCheck mono = edeg_monotonicity(sh);
    rep.body["edeg_monotone"] = {{"pairs", mono.pairs}, {"failures", mono.failures}};
    if (!mono.ok()) rep.ok = false;
    rep.body["ok"] = rep.ok;
    rep.csv = csv.str();
    return rep;
}

Report report_relations(const Shape& sh, const std::vector<int>& degrees) {
    validate(sh);
    Report rep;
    rep.body["command"] = "relations";
    rep.body["shape"] = to_json(sh);
    Json rows = Json::array();
    std::ostringstream csv;
    csv << "s,family,checked,failed\n";
    for (int s : degrees) {
        GradedPiece piece = GradedPiece::build(sh, s);
        RelationsReport rr = relations_check(action_matrices(piece), piece);
        Json fams = Json::array();
        for (const auto& f : rr.families) {
            fams.push_back({{"name", f.name}, {"checked", f.checked}, {"failed", f.failed}});
            csv << s << "," << f.name << "," << f.checked << "," << f.failed << "\n";
        }
        Json fails = Json::array();
        for (const auto& f : rr.failures)
            fails.push_back({{"relation", f.relation}, {"detail", f.detail}, {"column", f.column}});
        rows.push_back({{"s", s}, {"dim", piece.dim()}, {"families", fams}, {"failures", fails}, {"ok", rr.ok()}});
        if (!rr.ok()) rep.ok = false;
    }
    rep.body["rows"] = rows;
    rep.body["ok"] = rep.ok;
    rep.csv = csv.str();
    return rep;
}

Json certificate_json(const SocleCertificate& cert) {
    return Json{{"socle_dim", cert.socle.dim()},
                {"summands", cert.summands},
                {"summand_dims", cert.summand_dims},
                {"invariant", cert.invariant},
                {"summands_simple", cert.summands_simple},
                {"direct_sum_equal", cert.direct_sum_equal},
                {"exclusion", cert.exclusion},
                {"probabilistic", cert.probabilistic},
                {"ok", cert.ok()},
                {"log", cert.log}};
}

Report report_socle(const Shape& sh, const std::vector<int>& degrees) {
    validate(sh, true);
    Report rep;
    rep.body["command"] = "socle";
    rep.body["shape"] = to_json(sh);
    Json rows = Json::array();
    std::ostringstream csv;
    csv << "s,dim,simple,socle_dim,summands,indecomposable,certified\n";
    for (int s : degrees) {
        GradedPiece piece = GradedPiece::build(sh, s);
        if (piece.dim() == 0) continue;
        ActionMatrices am = action_matrices(piece);
        SocleCertificate cert = socle_certify(piece, am);
        SimplicityReport sr = simplicity_report(module_of(piece, am));
        LocalAlgebraReport lr;
        bool indec = indecomposability_certify(piece, am, &lr);
        Json row{{"s", s},
                 {"dim", piece.dim()},
                 {"simple", sr.simple},
                 {"maximal_dim", sr.maximal_dim},
                 {"indecomposable", indec},
                 {"endomorphism_dim", lr.dim},
                 {"certificate", certificate_json(cert)}};
        rows.push_back(row);
        csv << s << "," << piece.dim() << "," << sr.simple << "," << cert.socle.dim() << "," << cert.summands << ","
            << indec << "," << cert.ok() << "\n";
        if (!cert.ok() || !sr.consistent) rep.ok = false;
    }
    rep.body["rows"] = rows;
    rep.body["ok"] = rep.ok;
    rep.csv = csv.str();
    return rep;
}

Json filtration_json(const FiltrationReport& rep) {
    Json chain = Json::array();
    for (const auto& v : rep.chain) chain.push_back(v.dim());
    return Json{{"shape", to_json(rep.shape)},
                {"s", rep.s},
                {"E0", rep.E0},
                {"E", rep.E},
                {"loewy_length", rep.loewy_length},
                {"chain_dims", chain},
                {"layer_dims", rep.layer_dims},
                {"layer_multiplicities", rep.layer_multiplicities},
                {"multiplicity_formula", rep.multiplicity_formula},
                {"expected_layer_dims", rep.expected_layer_dims},
                {"strictly_increasing", rep.strictly_increasing},
                {"invariant", rep.invariant},
                {"layers_match", rep.layers_match},
                {"primitive_vectors", rep.primitive_vectors},
                {"ok", rep.ok()}};
}

Report report_loewy(const Shape& sh, const std::vector<int>& degrees) {
    validate(sh, true);
    Report rep;
    rep.body["command"] = "loewy";
    rep.body["shape"] = to_json(sh);
    Json rows = Json::array();
    std::ostringstream csv;
    csv << "s,dim,E0,E,loewy_length,layer_dims,ok\n";
    for (int s : degrees) {
        GradedPiece piece = GradedPiece::build(sh, s);
        if (piece.dim() == 0) continue;
        FiltrationReport fr = edeg_filtration(piece, action_matrices(piece));
        rows.push_back(filtration_json(fr));
        std::string layers;
        for (size_t i = 0; i < fr.layer_dims.size(); ++i) layers += (i ? " " : "") + std::to_string(fr.layer_dims[i]);
        csv << s << "," << piece.dim() << "," << fr.E0 << "," << fr.E << "," << fr.loewy_length << "," << layers
            << "," << fr.ok() << "\n";
        if (!fr.ok()) rep.ok = false;
    }
    rep.body["rows"] = rows;
    rep.body["ok"] = rep.ok;
    rep.csv = csv.str();
    return rep;
}

Report report_net(const Shape& sh, const std::vector<int>& degrees) {
    validate(sh, true);
    Report rep;
    rep.body["command"] = "net";
    rep.body["shape"] = to_json(sh);
    Json rows = Json::array();
    std::ostringstream csv;
    csv << "s,from,to,componentwise\n";
    for (int s : degrees) {
        GradedPiece piece = GradedPiece::build(sh, s);
        if (piece.dim() == 0) continue;
        InclusionNet net = inclusion_net(piece, action_matrices(piece));
        Json verts = Json::array();
        for (const auto& v : net.vertices) verts.push_back({{"kappa", v.kappa}, {"eta", to_json(v.eta)}, {"dim", v.dim}});
        Json edges = Json::array();
        for (const auto& e : net.edges) {
            edges.push_back({{"from", e.from}, {"to", e.to}, {"componentwise", e.componentwise}});
            csv << s << "," << e.from << "," << e.to << "," << e.componentwise << "\n";
        }
        Json missing = Json::array();
        for (const auto& [a, b] : net.missing) missing.push_back(Json::array({a, b}));
        const OrderCheck& o = net.orders;
        rows.push_back({{"s", s},
                        {"vertices", verts},
                        {"edges", edges},
                        {"missing", missing},
                        {"orders",
                         {{"equiv_pairs", o.equiv_pairs},
                          {"equiv_failures", o.equiv_failures},
                          {"partial_pairs", o.partial_pairs},
                          {"partial_failures", o.partial_failures},
                          {"incomparable_pairs", o.incomparable_pairs},
                          {"incomparable_failures", o.incomparable_failures}}},
                        {"ok", net.ok()}});
        rep.dot += net.dot();
        if (!net.ok()) rep.ok = false;
    }
    rep.body["rows"] = rows;
    rep.body["ok"] = rep.ok;
    rep.csv = csv.str();
    return rep;
}

std::string cohomology_csv(const CohomologyTable& tab) {
    std::ostringstream os;
    os << "s,dim_D,rank_d,dim_H,expected,critical\n";
    for (const auto& r : tab.rows)
        os << r.s << "," << r.dim_D << "," << r.rank_d << "," << r.dim_H << "," << r.expected << "," << r.critical
           << "\n";
    return os.str();
}

Json cohomology_json(const CohomologyTable& tab) {
    Json rows = Json::array();
    for (const auto& r : tab.rows)
        rows.push_back({{"s", r.s},
                        {"dim_D", r.dim_D},
                        {"rank_d", r.rank_d},
                        {"dim_H", r.dim_H},
                        {"expected", r.expected},
                        {"critical", r.critical}});
    return Json{{"shape", to_json(tab.shape)},
                {"rows", rows},
                {"critical_forms", tab.critical_forms},
                {"betti_match", tab.betti_match},
                {"noncritical_exact", tab.noncritical_exact},
                {"critical_contribute_one", tab.critical_contribute_one},
                {"rank_bound", tab.rank_bound},
                {"euler", tab.euler},
                {"double_count", tab.double_count},
                {"diagnostics", tab.diagnostics},
                {"ok", tab.ok()}};
}

Report report_derham(const Shape& sh) {
    validate(sh);
    Report rep;
    CohomologyTable tab = cohomology(sh);
    ComplexCheck cc = complex_check(sh);
    BlockCheck bc = weight_blocks_check(sh);
    rep.body["command"] = "derham";
    rep.body["cohomology"] = cohomology_json(tab);
    rep.body["complex"] = {{"ok", cc.ok}, {"products", cc.products}, {"failures", cc.failures}};
    rep.body["blocks"] = {{"weights", bc.weights},
                          {"checks", bc.checks},
                          {"dim_failures", bc.dim_failures},
                          {"nonempty_failures", bc.nonempty_failures},
                          {"total_failures", bc.total_failures}};
    rep.ok = tab.ok() && cc.ok && bc.ok();
    rep.body["ok"] = rep.ok;
    rep.csv = cohomology_csv(tab);
    return rep;
}

Report report_poincare(int m, int n, int ell, const IVec& lambda) {
    Report rep;
    PoincareReport pr = poincare_check(m, n, ell, lambda);
    rep.body = {{"command", "poincare"},
                {"shape", to_json(pr.shape)},
                {"weight", pr.weight.str(pr.shape)},
                {"dims", pr.dims},
                {"ranks", pr.ranks},
                {"exact", pr.exact}};
    rep.ok = pr.exact;
    rep.body["ok"] = rep.ok;
    std::ostringstream csv;
    csv << "s,dim,rank\n";
    for (size_t s = 0; s < pr.dims.size(); ++s) csv << s << "," << pr.dims[s] << "," << pr.ranks[s] << "\n";
    rep.csv = csv.str();
    return rep;
}

MonotonicityCheck edeg_monotonicity(const Shape& sh) {
    validate(sh);
    MonotonicityCheck chk;
    std::vector<Generator> gens;
    for (int i = 1; i < sh.m + sh.n; ++i) {
        gens.push_back({GenKind::E, i});
        gens.push_back({GenKind::F, i});
    }
    for (int i = 1; i <= sh.m + sh.n; ++i) gens.push_back({GenKind::K, i});
    for (const auto& x : enumerate_all(sh)) {
        EnergyVector before = edeg_vector(x, sh.ell);
        for (const auto& g : gens) {
            ++chk.pairs;
            auto t = act_monomial(sh, g, x, true);
            if (!t || t->coef.is_zero()) continue;
            if (!geq_partial(before, edeg_vector(t->tuple, sh.ell))) ++chk.failures;
        }
    }
    return chk;
}

}  // namespace qgrass
