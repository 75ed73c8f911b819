#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "schema_check.hpp"
#include "trgeo/json_io.hpp"

#include <fstream>

using namespace trgeo;
using nlohmann::json;

namespace {

json load_schema(const std::string& name) {
    std::ifstream in(std::string(TRGEO_SCHEMA_DIR) + "/" + name);
    REQUIRE(in.good());
    json j;
    in >> j;
    return j;
}

void expect_valid(const json& doc, const std::string& schema_name) {
    const std::string err = schema_check::validate(doc, load_schema(schema_name));
    INFO(schema_name, ": ", err);
    CHECK(err.empty());
}

} // namespace

TEST_CASE("plane json round trip and schema") {
    const RealSubspace L = random_subspace(3, 99);
    const json doc = plane_to_json(L);
    expect_valid(doc, "plane.schema.json");
    const RealSubspace back = plane_from_json(doc);
    CHECK(back.oriented == L.oriented);
    CHECK((back.basis - L.basis).cwiseAbs().maxCoeff() == 0.0);

    // Malformed documents.
    CHECK_THROWS_AS((void)plane_from_json(json{{"m", 2}}), ConfigError);
    json wrong = doc;
    wrong["basis"][0] = json::array({1.0});
    CHECK_THROWS_AS((void)plane_from_json(wrong), ConfigError);
    json badm = doc;
    badm["m"] = 0;
    CHECK_THROWS_AS((void)plane_from_json(badm), ConfigError);
}

TEST_CASE("classification report json carries every field") {
    const ClassificationReport rep = classify(random_lagrangian(2, 5, true));
    const json doc = classification_to_json(rep);
    expect_valid(doc, "classification_report.schema.json");
    CHECK(doc.at("special_lagrangian").get<bool>());
    CHECK(doc.at("phase").is_number());

    ClassificationReport unphased = classify(RealSubspace{ComplexMatrix::Identity(2, 2), false});
    const json doc2 = classification_to_json(unphased);
    expect_valid(doc2, "classification_report.schema.json");
    CHECK(doc2.at("phase").is_null());
}

TEST_CASE("curve json round trip, optional derivatives") {
    const ClosedCurve c = make_ellipse(2.0, 1.0, 64);
    const json doc = curve_to_json(c);
    expect_valid(doc, "curve.schema.json");
    const ClosedCurve back = curve_from_json(doc);
    CHECK((back.nodes - c.nodes).cwiseAbs().maxCoeff() == 0.0);
    CHECK((back.derivatives - c.derivatives).cwiseAbs().maxCoeff() == 0.0);
    CHECK(back.orientation == 1);

    json without = doc;
    without.erase("derivatives");
    const ClosedCurve filled = curve_from_json(without);
    CHECK((filled.derivatives - c.derivatives).cwiseAbs().maxCoeff() < 1e-2);

    json bad = doc;
    bad["orientation"] = 3;
    CHECK_THROWS_AS((void)curve_from_json(bad), ConfigError);
    json short_nodes = doc;
    short_nodes["N"] = 63;
    CHECK_THROWS_AS((void)curve_from_json(short_nodes), ConfigError);
}

TEST_CASE("potential json") {
    const json doc = {{"m", 2},
                      {"terms", json::array({{{"powers", {2, 0}}, {"coeff", 0.5}},
                                             {{"powers", {0, 2}}, {"coeff", 0.5}}})}};
    expect_valid(doc, "potential.schema.json");
    Box b;
    b.lo = RealVector::Constant(2, 0.0);
    b.hi = RealVector::Constant(2, 1.0);
    const Potential phi = potential_from_json(doc, b);
    RealVector x(2);
    x << 0.3, -0.4;
    CHECK(phi.value(x) == doctest::Approx(0.5 * (0.09 + 0.16)).epsilon(1e-15));

    json bad = doc;
    bad["terms"][0]["powers"] = {2};
    CHECK_THROWS_AS((void)potential_from_json(bad, b), ConfigError);
    json badc = doc;
    badc["terms"][0].erase("coeff");
    CHECK_THROWS_AS((void)potential_from_json(badc, b), ConfigError);
}

TEST_CASE("report serializers match their schemas") {
    Box b;
    b.lo = RealVector::Constant(2, 0.0);
    b.hi = RealVector::Constant(2, 1.0);
    const TriangulatedSurface M =
        gradient_graph(polynomial_potential(2, {{{2, 0}, 0.5}}, b), {4, 4});

    const AccretivityReport acc = pseudo_accretivity_report(M, build_dyadic_cells(M, 2), 0.5);
    expect_valid(accretivity_to_json(acc), "accretivity_report.schema.json");

    // The ahlfors/doubling blocks are embedded in the surface report;
    // check them against that schema's subschemas via a minimal wrapper.
    const SampleSpec centers{6, 3};
    const RadiusSpec radii{0.1, 2.0, 2};
    const json surface_schema = load_schema("surface_report.schema.json");
    const json ahl = ahlfors_to_json(ahlfors_report(M, centers, radii), centers, radii);
    CHECK(schema_check::validate(ahl, surface_schema.at("properties").at("ahlfors")).empty());
    const json dbl = doubling_to_json(doubling_report(M, centers, radii), centers, radii);
    CHECK(schema_check::validate(dbl, surface_schema.at("properties").at("doubling")).empty());

    const json chk = surface_check_to_json(check_surface(M));
    CHECK(schema_check::validate(chk, surface_schema.at("properties").at("check")).empty());
}
