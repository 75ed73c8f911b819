#include "trgeo/json_io.hpp"

#include <string>

namespace trgeo {

using nlohmann::json;

namespace {

const json& require_field(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw ConfigError(std::string(what) + ": missing field '" + key + "'");
    return j.at(key);
}

int require_int(const json& j, const char* key, const char* what) {
    const json& f = require_field(j, key, what);
    if (!f.is_number_integer())
        throw ConfigError(std::string(what) + ": field '" + key + "' must be an integer");
    return f.get<int>();
}

} // namespace

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ConfigError(std::string(what) + ": complex scalars are [re, im] pairs");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

json plane_to_json(const RealSubspace& L) {
    json basis = json::array();
    for (Eigen::Index k = 0; k < L.basis.cols(); ++k) {
        json column = json::array();
        for (Eigen::Index i = 0; i < L.basis.rows(); ++i)
            column.push_back(complex_to_json(L.basis(i, k)));
        basis.push_back(std::move(column));
    }
    return json{{"m", L.basis.cols()}, {"basis", std::move(basis)}, {"oriented", L.oriented}};
}

RealSubspace plane_from_json(const json& j) {
    const int m = require_int(j, "m", "plane");
    if (m < 1) throw ConfigError("plane: m must be at least 1");
    const json& basis = require_field(j, "basis", "plane");
    if (!basis.is_array() || static_cast<int>(basis.size()) != m)
        throw ConfigError("plane: basis must list m vectors");
    RealSubspace L;
    L.basis.resize(m, m);
    for (int k = 0; k < m; ++k) {
        const json& column = basis[k];
        if (!column.is_array() || static_cast<int>(column.size()) != m)
            throw ConfigError("plane: basis vector " + std::to_string(k) +
                              " must have m entries");
        for (int i = 0; i < m; ++i)
            L.basis(i, k) = complex_from_json(column[i], "plane basis entry");
    }
    const json& oriented = require_field(j, "oriented", "plane");
    if (!oriented.is_boolean()) throw ConfigError("plane: 'oriented' must be a boolean");
    L.oriented = oriented.get<bool>();
    return L;
}

json tolerances_to_json(const ToleranceConfig& tol) {
    return json{{"coefficient_tol", tol.coefficient_tol},
                {"lagrangian_tol", tol.lagrangian_tol},
                {"unitary_tol", tol.unitary_tol},
                {"rank_tol", tol.rank_tol},
                {"phase_tol", tol.phase_tol}};
}

json classification_to_json(const ClassificationReport& rep) {
    json out{{"coefficient", rep.coefficient},
             {"totally_real", rep.totally_real},
             {"lagrangian", rep.lagrangian},
             {"special_lagrangian", rep.special_lagrangian},
             {"tolerances", tolerances_to_json(rep.tolerances)}};
    out["phase"] = rep.phase ? json(*rep.phase) : json(nullptr);
    return out;
}

json curve_to_json(const ClosedCurve& curve) {
    json nodes = json::array(), derivatives = json::array();
    for (int k = 0; k < curve.size(); ++k) {
        nodes.push_back(complex_to_json(curve.nodes[k]));
        derivatives.push_back(complex_to_json(curve.derivatives[k]));
    }
    return json{{"N", curve.size()},
                {"nodes", std::move(nodes)},
                {"derivatives", std::move(derivatives)},
                {"orientation", curve.orientation}};
}

ClosedCurve curve_from_json(const json& j) {
    const int n = require_int(j, "N", "curve");
    const json& nodes = require_field(j, "nodes", "curve");
    if (!nodes.is_array() || static_cast<int>(nodes.size()) != n)
        throw ConfigError("curve: 'nodes' must list N points");
    Eigen::VectorXcd zeta(n);
    for (int k = 0; k < n; ++k) zeta[k] = complex_from_json(nodes[k], "curve node");

    std::optional<Eigen::VectorXcd> derivatives;
    if (j.contains("derivatives") && !j.at("derivatives").is_null()) {
        const json& der = j.at("derivatives");
        if (!der.is_array() || static_cast<int>(der.size()) != n)
            throw ConfigError("curve: 'derivatives' must list N samples");
        Eigen::VectorXcd dz(n);
        for (int k = 0; k < n; ++k) dz[k] = complex_from_json(der[k], "curve derivative");
        derivatives = std::move(dz);
    }
    const int orientation = require_int(j, "orientation", "curve");
    return curve_from_nodes(std::move(zeta), std::move(derivatives), orientation);
}

Potential potential_from_json(const json& j, const Box& domain) {
    const int m = require_int(j, "m", "potential");
    const json& terms = require_field(j, "terms", "potential");
    if (!terms.is_array()) throw ConfigError("potential: 'terms' must be an array");
    std::vector<PolynomialTerm> parsed;
    parsed.reserve(terms.size());
    for (const json& t : terms) {
        PolynomialTerm term;
        const json& powers = require_field(t, "powers", "potential term");
        if (!powers.is_array() || static_cast<int>(powers.size()) != m)
            throw ConfigError("potential term: 'powers' must list m exponents");
        for (const json& p : powers) {
            if (!p.is_number_integer())
                throw ConfigError("potential term: exponents must be integers");
            term.powers.push_back(p.get<int>());
        }
        const json& coeff = require_field(t, "coeff", "potential term");
        if (!coeff.is_number()) throw ConfigError("potential term: 'coeff' must be a number");
        term.coeff = coeff.get<double>();
        parsed.push_back(std::move(term));
    }
    return polynomial_potential(m, std::move(parsed), domain);
}

namespace {

json optional_to_json(const std::optional<double>& v) {
    return v ? json(*v) : json(nullptr);
}

json sample_spec_to_json(const SampleSpec& s) {
    return json{{"count", s.count}, {"seed", s.seed}};
}

json radius_spec_to_json(const RadiusSpec& r) {
    return json{{"r0", r.r0}, {"factor", r.factor}, {"count", r.count}};
}

} // namespace

json ahlfors_to_json(const AhlforsReport& rep, const SampleSpec& centers,
                     const RadiusSpec& radii) {
    return json{{"c_lower", optional_to_json(rep.c_lower)},
                {"c_upper", optional_to_json(rep.c_upper)},
                {"boundary_c_lower", optional_to_json(rep.boundary_c_lower)},
                {"boundary_c_upper", optional_to_json(rep.boundary_c_upper)},
                {"interior_count", rep.interior_count},
                {"boundary_count", rep.boundary_count},
                {"centers", sample_spec_to_json(centers)},
                {"radii", radius_spec_to_json(radii)}};
}

json doubling_to_json(const DoublingReport& rep, const SampleSpec& centers,
                      const RadiusSpec& radii) {
    return json{{"max_ratio", optional_to_json(rep.max_ratio)},
                {"samples_used", rep.samples_used},
                {"samples_excluded", rep.samples_excluded},
                {"centers", sample_spec_to_json(centers)},
                {"radii", radius_spec_to_json(radii)}};
}

json accretivity_to_json(const AccretivityReport& rep) {
    json levels = json::array();
    for (const LevelSummary& lvl : rep.levels) {
        json cells = json::array();
        for (const CellStats& cs : lvl.cells)
            cells.push_back(json{{"cell_id", cs.cell_id},
                                 {"count", cs.count},
                                 {"numerator", complex_to_json(cs.numerator)},
                                 {"denominator", cs.denominator},
                                 {"ratio", cs.ratio}});
        levels.push_back(json{{"level", lvl.level},
                              {"cells", std::move(cells)},
                              {"min_ratio", lvl.min_ratio},
                              {"argmin_cell", lvl.argmin_cell},
                              {"below_delta_fraction", lvl.below_delta_fraction}});
    }
    return json{{"delta", rep.delta}, {"pass", rep.pass}, {"levels", std::move(levels)}};
}

json surface_check_to_json(const SurfaceCheck& check) {
    return json{{"degenerate_simplices", check.degenerate_simplices},
                {"inconsistent_facets", check.inconsistent_facets},
                {"nonmanifold_facets", check.nonmanifold_facets},
                {"boundary_facets", check.boundary_facets},
                {"orientation_consistent", check.orientation_consistent()}};
}

} // namespace trgeo
