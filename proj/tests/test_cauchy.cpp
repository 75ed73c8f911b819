#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "trgeo/cauchy.hpp"
#include "trgeo/surface.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace trgeo;
using std::numbers::pi;

namespace {

Eigen::VectorXcd ones_data(const ClosedCurve& c) { return Eigen::VectorXcd::Ones(c.size()); }

Eigen::VectorXcd squared_data(const ClosedCurve& c) {
    Eigen::VectorXcd f(c.size());
    for (int k = 0; k < c.size(); ++k) f[k] = c.nodes[k] * c.nodes[k];
    return f;
}

} // namespace

TEST_CASE("cauchy_transform reproduces the Cauchy formula on the circle") {
    const ClosedCurve circle = make_circle(256);
    const Eigen::VectorXcd one = ones_data(circle);

    CHECK(std::abs(cauchy_transform(circle, one, Complex(0.0, 0.0)) - 1.0) < 1e-12);
    CHECK(std::abs(cauchy_transform(circle, one, Complex(3.0, 0.0))) < 1e-12);

    // f = zeta^2 at z = 0.5: the polynomial oracle gives 0.25 inside.
    const Complex expect =
        oracles::cauchy_of_polynomial({0.0, 0.0, 1.0}, Complex(0.5, 0.0), 1);
    CHECK(expect == Complex(0.25, 0.0));
    CHECK(std::abs(cauchy_transform(circle, squared_data(circle), Complex(0.5, 0.0)) -
                   expect) < 1e-9);

    // Exterior: holomorphic integrand, zero transform.
    CHECK(std::abs(cauchy_transform(circle, squared_data(circle), Complex(2.5, 1.0))) <
          1e-12);
}

TEST_CASE("exclusion radius rejects near-curve evaluation") {
    const ClosedCurve circle = make_circle(256);
    const double excl = exclusion_radius(circle);
    CHECK(excl == doctest::Approx(4.0 * 2.0 * pi / 256).epsilon(1e-12));
    CHECK_THROWS_AS((void)cauchy_transform(circle, ones_data(circle),
                                           Complex(1.0 - excl / 2.0, 0.0)),
                    TooCloseToCurveError);
}

TEST_CASE("winding_indicator counts and flags under-resolution") {
    const ClosedCurve circle = make_circle(64);
    CHECK(winding_indicator(circle, Complex(0.0, 0.0)) == 1);
    CHECK(winding_indicator(circle, Complex(2.0, 0.0)) == 0);

    ClosedCurve reversed = circle;
    reversed.orientation = -1;
    CHECK(winding_indicator(reversed, Complex(0.0, 0.0)) == -1);

    // Coarse curve close to the evaluation point: integer residual blows up.
    const ClosedCurve coarse = make_circle(8);
    const double rim = 1.0 - 1.05 * exclusion_radius(coarse);
    if (rim > 0.0)
        CHECK_THROWS_AS((void)winding_indicator(coarse, Complex(rim, 0.0)),
                        NonIntegerResidualError);
}

TEST_CASE("transform is linear in the boundary data and odd in orientation") {
    const ClosedCurve circle = make_circle(128);
    std::mt19937_64 eng(4);
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::VectorXcd f(circle.size()), h(circle.size());
    for (int k = 0; k < circle.size(); ++k) {
        f[k] = Complex(g(eng), g(eng));
        h[k] = Complex(g(eng), g(eng));
    }
    const Complex a(0.7, -0.3), b(-1.1, 0.2);
    const Complex z(0.2, 0.1);
    const Complex lhs = cauchy_transform(circle, a * f + b * h, z);
    const Complex rhs = a * cauchy_transform(circle, f, z) + b * cauchy_transform(circle, h, z);
    CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(rhs)));

    ClosedCurve reversed = circle;
    reversed.orientation = -1;
    CHECK(std::abs(cauchy_transform(reversed, f, z) + cauchy_transform(circle, f, z)) <
          1e-15 * (1.0 + std::abs(lhs)));
}

TEST_CASE("geometric convergence on analytic data") {
    // Aliasing error for f = zeta^2 is ~ z^(N+2); doubling N squares it,
    // up to rounding headroom. z = 0.8 keeps the point clear of the
    // exclusion radius at N = 128 while the error stays measurable.
    const Complex z(0.8, 0.0);
    auto err = [&](int n) {
        const ClosedCurve c = make_circle(n);
        return std::abs(cauchy_transform(c, squared_data(c), z) - Complex(0.64, 0.0));
    };
    const double e128 = err(128), e256 = err(256);
    CHECK(e128 > 1e-16); // genuinely measured, not rounding floor
    CHECK(e128 < 1e-11);
    CHECK(e256 < e128);
    CHECK(e256 <= e128 * e128 + 1e-14);
}

TEST_CASE("plemelj_jump recovers the boundary density") {
    const ClosedCurve circle = make_circle(256);
    const std::vector<double> offsets{0.4, 0.3, 0.2, 0.12};

    for (int node : {0, 31, 100, 255})
        CHECK(std::abs(plemelj_jump(circle, ones_data(circle), node, offsets) - 1.0) < 1e-6);

    // f = zeta^2 at the node zeta = 1: interior limit 1, exterior 0.
    CHECK(std::abs(plemelj_jump(circle, squared_data(circle), 0, offsets) - 1.0) < 1e-4);

    // Orientation reversal keeps the recovered density (the normal flips
    // together with the interior/exterior roles).
    ClosedCurve reversed = circle;
    reversed.orientation = -1;
    CHECK(std::abs(plemelj_jump(reversed, ones_data(reversed), 5, offsets) - 1.0) < 1e-6);

    // Ellipse via the winding oracle: jump of f = 1 is 1.
    const ClosedCurve ellipse = make_ellipse(2.0, 1.0, 512);
    CHECK(std::abs(plemelj_jump(ellipse, ones_data(ellipse), 17, offsets) - 1.0) < 1e-4);
}

TEST_CASE("plemelj_jump validates its inputs") {
    const ClosedCurve circle = make_circle(64);
    const Eigen::VectorXcd one = ones_data(circle);
    CHECK_THROWS_AS((void)plemelj_jump(circle, one, -1, std::vector<double>{0.3}), ConfigError);
    CHECK_THROWS_AS((void)plemelj_jump(circle, one, 0, std::vector<double>{}), ConfigError);
    CHECK_THROWS_AS((void)plemelj_jump(circle, one, 0, std::vector<double>{0.2, 0.3}),
                    ConfigError);
    // Smallest offset violating the exclusion radius at this resolution.
    CHECK_THROWS_AS((void)plemelj_jump(circle, one, 0, std::vector<double>{0.4, 0.01}),
                    TooCloseToCurveError);
}

TEST_CASE("holomorphy_check: Morera residuals vanish off the curve") {
    const ClosedCurve circle = make_circle(256);
    const Eigen::VectorXcd f = squared_data(circle);
    const std::vector<Complex> probes{Complex(0.3, 0.0), Complex(-0.2, 0.35),
                                      Complex(5.0, 0.0), Complex(0.0, -2.0)};
    CHECK(holomorphy_check(circle, f, probes, 0.1) < 1e-9);

    // Entire-function boundary data behaves the same way.
    Eigen::VectorXcd expf(circle.size());
    for (int k = 0; k < circle.size(); ++k) expf[k] = std::exp(circle.nodes[k]);
    CHECK(holomorphy_check(circle, expf, probes, 0.1) < 1e-9);

    // A loop that straddles the curve is rejected.
    const std::vector<Complex> bad{Complex(0.95, 0.0)};
    CHECK_THROWS_AS((void)holomorphy_check(circle, f, bad, 0.3), LoopCrossesCurveError);
}

TEST_CASE("derivative fallback: spectral-grade finite differences") {
    const ClosedCurve exact = make_circle(64);
    ClosedCurve approx = curve_from_nodes(exact.nodes, std::nullopt, 1);
    CHECK((approx.derivatives - exact.derivatives).cwiseAbs().maxCoeff() < 1e-5);
    CHECK(std::abs(cauchy_transform(approx, ones_data(approx), Complex(0.0, 0.0)) - 1.0) <
          1e-4);
}

TEST_CASE("curve validation") {
    Eigen::VectorXcd nodes = make_circle(16).nodes;
    nodes[3] = nodes[7];
    CHECK_THROWS_AS((void)curve_from_nodes(nodes, std::nullopt, 1), ConfigError);
    CHECK_THROWS_AS((void)make_circle(4), ConfigError);
    ClosedCurve c = make_circle(16);
    c.orientation = 2;
    CHECK_THROWS_AS(validate_curve(c), ConfigError);
}

TEST_CASE("consistency with the surface model: closed polygon integrates dz to zero") {
    const ClosedCurve circle = make_circle(256);
    TriangulatedSurface poly;
    poly.ambient_m = 1;
    for (int k = 0; k < circle.size(); ++k) {
        ComplexVector v(1);
        v << circle.nodes[k];
        poly.vertices.push_back(v);
    }
    for (int k = 0; k < circle.size(); ++k)
        poly.simplices.push_back({{k, (k + 1) % circle.size()}, 1, 1.0});
    const Complex total = integrate_restricted_form(
        poly, [](const ComplexVector&) { return Complex(1.0, 0.0); });
    CHECK(std::abs(total) < 1e-12);
}
