#include "rigidity/payload.hpp"

#include <map>
#include <set>
#include <string>

#include "rigidity/errors.hpp"

namespace rigidity {

namespace {

Json rational_json(const Rational& q) { return q.str(); }

Json int_vector(const std::vector<int>& v) {
    Json a = Json::array();
    for (int x : v) a.push_back(x);
    return a;
}

Json rational_vector(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rational_json(x));
    return a;
}

Json graded_dims(const std::map<std::int64_t, std::int64_t>& m) {
    Json a = Json::array();
    for (auto [d, n] : m) a.push_back({{"degree", d}, {"dim", n}});
    return a;
}

Json decomposition_json(const ModuleDecomposition& m, const RootSystemData& rs) {
    // Highest weights descending, so the top constituent comes first.
    Json a = Json::array();
    for (auto it = m.entries().rbegin(); it != m.entries().rend(); ++it) {
        a.push_back({{"highest_weight", weight_json(it->first)},
                     {"multiplicity", it->second},
                     {"dimension", weyl_dim(it->first, rs)}});
    }
    return a;
}

Json component_json(const H1Component& c) {
    return {{"source_weight", weight_json(c.source_weight)},
            {"source_multiplicity", c.source_multiplicity},
            {"node", c.node + 1},
            {"reflected_weight", weight_json(c.reflected_weight)},
            {"degree", rational_json(c.degree)},
            {"g0_dimension", c.g0_dimension},
            {"total_dimension", c.total_dimension()}};
}

Json components_json(const std::vector<H1Component>& comps) {
    Json a = Json::array();
    for (const auto& c : comps) a.push_back(component_json(c));
    return a;
}

Json dims_by_degree_json(const std::vector<H1Component>& comps) {
    Json a = Json::array();
    const auto dims = h1_dims_by_degree(comps);
    for (auto it = dims.rbegin(); it != dims.rend(); ++it)
        a.push_back({{"degree", rational_json(it->first)}, {"dim", it->second}});
    return a;
}

}  // namespace

Json weight_json(const Weight& w) {
    Json a = Json::array();
    for (const auto& x : w.coords()) {
        if (!x.is_integer()) throw InternalError("non-integral weight in output: " + w.str());
        a.push_back(x.num());
    }
    return a;
}

Json marking_json(const ParabolicMarking& m) {
    Json a = Json::array();
    for (auto i : m.nodes()) a.push_back(i + 1);
    return a;
}

Json root_system_payload(const RootSystemData& rs) {
    const auto& dg = rs.diagram();
    const std::size_t n = rs.rank();
    Json comps = Json::array();
    for (std::size_t c = 0; c < dg.num_components(); ++c) {
        const auto& sc = dg.components()[c];
        const auto& theta = rs.highest_root(c);
        comps.push_back({{"type", sc.literal()},
                         {"first_node", dg.offset(c) + 1},
                         {"rank", sc.rank},
                         {"num_positive_roots", expected_positive_root_count(sc)},
                         {"highest_root", int_vector(theta.coeffs)},
                         {"highest_root_weight", weight_json(rs.adjoint_weight(c))}});
    }
    Json cartan = Json::array(), inverse = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
        Json row = Json::array(), irow = Json::array();
        for (std::size_t j = 0; j < n; ++j) {
            row.push_back(rs.cartan(i, j));
            irow.push_back(rational_json(rs.inverse_cartan(i, j)));
        }
        cartan.push_back(row);
        inverse.push_back(irow);
    }
    Json roots = Json::array();
    for (const auto& r : rs.positive_roots()) {
        roots.push_back({{"coeffs", int_vector(r.coeffs)},
                         {"coroot", int_vector(r.coroot)},
                         {"component", r.component + 1},
                         {"height", r.height}});
    }
    return {{"diagram", dg.literal()},
            {"rank", n},
            {"dimension", rs.dimension()},
            {"components", comps},
            {"cartan_matrix", cartan},
            {"inverse_cartan", inverse},
            {"inverse_cartan_diagonal", rational_vector(rs.inverse_cartan_diagonal())},
            {"rho", weight_json(rs.rho())},
            {"num_positive_roots", rs.positive_roots().size()},
            {"positive_roots", roots}};
}

Json grading_payload(const RootSystemData& rs, const ParabolicMarking& marking, const std::optional<Weight>& lambda,
                     const std::optional<GradingReport>& report) {
    Json z = Json::array();
    for (std::size_t i = 0; i < rs.rank(); ++i)
        z.push_back({{"node", i + 1}, {"z", rational_json(z_value(rs.fundamental(i), marking, rs))}});
    Json out = {{"marking", marking_json(marking)},
                {"lambda", lambda ? weight_json(*lambda) : Json(nullptr)},
                {"z_values", z},
                {"k", depth_k(marking, rs)},
                {"g_dims", graded_dims(lie_algebra_grading(marking, rs))}};
    if (report) {
        out["module_dimension"] = weyl_dim(*lambda, rs);
        out["z_lambda"] = rational_json(z_value(*lambda, marking, rs));
        out["f"] = report->f;
        out["osculating_length"] = report->osculating_length;
        out["u_dims"] = graded_dims(report->u_dims);
    } else {
        out["module_dimension"] = nullptr;
        out["z_lambda"] = nullptr;
        out["f"] = nullptr;
        out["osculating_length"] = nullptr;
        out["u_dims"] = nullptr;
    }
    return out;
}

Json decompose_payload(const RootSystemData& rs, const Weight& lambda, const ModuleDecomposition& tensor,
                       const ModuleDecomposition& gamma) {
    const std::int64_t dim_u = weyl_dim(lambda, rs);
    const std::int64_t expected = dim_u * dim_u - 1 - static_cast<std::int64_t>(rs.dimension());
    return {{"lambda", weight_json(lambda)},
            {"dual", weight_json(dual(lambda, rs))},
            {"module_dimension", dim_u},
            {"tensor", decomposition_json(tensor, rs)},
            {"tensor_dimension", tensor.total_dimension(rs)},
            {"gperp", decomposition_json(gamma, rs)},
            {"gperp_dimension", gamma.total_dimension(rs)},
            {"expected_gperp_dimension", expected}};
}

Json h1_payload(const RootSystemData&, const Weight& lambda, const ParabolicMarking& marking,
                const std::vector<H1Component>& comps) {
    std::int64_t total = 0;
    for (const auto& c : comps) total += c.total_dimension();
    return {{"lambda", weight_json(lambda)},
            {"marking", marking_json(marking)},
            {"components", components_json(comps)},
            {"dims_by_degree", dims_by_degree_json(comps)},
            {"total_dimension", total}};
}

Json certify_payload(const RootSystemData&, const Weight& lambda, const RigidityVerdict& v, QuickVanishing quick) {
    return {{"lambda", weight_json(lambda)},
            {"p", v.p},
            {"system_name", v.system_name},
            {"rigid", v.rigid},
            {"threshold_degree", v.p + 2},
            {"obstructions", components_json(v.obstructions)},
            {"informational", components_json(v.informational)},
            {"total_obstruction_dimension", v.total_obstruction_dimension},
            {"quick_vanishing_test", to_string(quick)},
            {"note", v.note ? Json(*v.note) : Json(nullptr)}};
}

Json oracle_payload(const MatrixRep& rep, const GradedComplexDims& dims, const std::vector<H1Component>& predicted) {
    const auto& rs = rep.algebra().roots();
    std::map<Rational, std::int64_t> oracle, kostant;
    for (const auto& d : dims.degrees)
        if (d.h1 != 0) oracle[d.degree] = d.h1;
    for (const auto& [deg, n] : h1_dims_by_degree(predicted))
        if (deg <= Rational(dims.d_max) && n != 0) kostant[deg] = n;

    Json degrees = Json::array();
    for (const auto& d : dims.degrees) {
        degrees.push_back({{"degree", rational_json(d.degree)},
                           {"c0", d.c0},
                           {"c1", d.c1},
                           {"c2", d.c2},
                           {"rank0", d.rank0},
                           {"rank1", d.rank1},
                           {"h1", d.h1}});
    }
    std::set<Rational> all;
    for (const auto& [d, _] : oracle) all.insert(d);
    for (const auto& [d, _] : kostant) all.insert(d);
    Json cmp = Json::array();
    bool agrees = true;
    for (auto it = all.rbegin(); it != all.rend(); ++it) {
        const std::int64_t a = oracle.count(*it) ? oracle[*it] : 0;
        const std::int64_t b = kostant.count(*it) ? kostant[*it] : 0;
        agrees = agrees && a == b;
        cmp.push_back({{"degree", rational_json(*it)}, {"oracle", a}, {"kostant", b}});
    }
    return {{"diagram", rs.diagram().literal()},
            {"rep", rep.spec().str()},
            {"highest_weight", weight_json(rep.highest_weight())},
            {"module_dimension", rep.dim()},
            {"algebra_dimension", rep.algebra().dim()},
            {"marking", marking_json(dims.marking)},
            {"d_max", dims.d_max},
            {"gperp_dimension", dims.gamma_dim},
            {"blocks_checked", dims.blocks_checked},
            {"degrees", degrees},
            {"comparison", cmp},
            {"agrees", agrees}};
}

Json paper_tables_payload(const PaperTablesReport& r) {
    Json tables = Json::array();
    for (const auto& t : r.tables) {
        Json entries = Json::array();
        for (const auto& e : t.entries) {
            entries.push_back(
                {{"label", e.label}, {"computed", e.computed}, {"published", e.published}, {"match", e.match}});
        }
        tables.push_back({{"name", t.name}, {"description", t.description}, {"entries", entries}});
    }
    return {{"tables", tables}, {"mismatches", r.mismatches()}, {"all_match", r.all_match()}};
}

}  // namespace rigidity
