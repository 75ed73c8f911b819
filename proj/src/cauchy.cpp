#include "trgeo/cauchy.hpp"

#include "trgeo/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace trgeo {

namespace {

using std::numbers::pi;

void check_boundary_values(const ClosedCurve& curve, const Eigen::VectorXcd& f) {
    if (f.size() != curve.nodes.size())
        throw DimensionError("boundary data size does not match the node count");
    if (!f.allFinite()) throw EvaluationError("boundary data contains non-finite samples");
}

double min_node_distance(const ClosedCurve& curve, Complex z) {
    double d = std::numeric_limits<double>::max();
    for (int k = 0; k < curve.size(); ++k)
        d = std::min(d, std::abs(curve.nodes[k] - z));
    return d;
}

// Neville polynomial extrapolation of (x_i, y_i) to x = 0.
Complex extrapolate_to_zero(std::span<const double> xs, std::vector<Complex> ys) {
    const int n = static_cast<int>(xs.size());
    for (int level = 1; level < n; ++level)
        for (int i = 0; i < n - level; ++i)
            ys[i] = (xs[i + level] * ys[i] - xs[i] * ys[i + 1]) / (xs[i + level] - xs[i]);
    return ys[0];
}

} // namespace

ClosedCurve make_circle(int n, double radius) {
    if (radius <= 0.0) throw ConfigError("circle radius must be positive");
    ClosedCurve c;
    c.nodes.resize(n);
    c.derivatives.resize(n);
    for (int k = 0; k < n; ++k) {
        const double t = 2.0 * pi * k / n;
        c.nodes[k] = std::polar(radius, t);
        c.derivatives[k] = Complex(0.0, 1.0) * c.nodes[k];
    }
    c.orientation = 1;
    validate_curve(c);
    return c;
}

ClosedCurve make_ellipse(double a, double b, int n) {
    if (a <= 0.0 || b <= 0.0) throw ConfigError("ellipse semi-axes must be positive");
    ClosedCurve c;
    c.nodes.resize(n);
    c.derivatives.resize(n);
    for (int k = 0; k < n; ++k) {
        const double t = 2.0 * pi * k / n;
        c.nodes[k] = Complex(a * std::cos(t), b * std::sin(t));
        c.derivatives[k] = Complex(-a * std::sin(t), b * std::cos(t));
    }
    c.orientation = 1;
    validate_curve(c);
    return c;
}

ClosedCurve curve_from_nodes(Eigen::VectorXcd nodes,
                             std::optional<Eigen::VectorXcd> derivatives, int orientation) {
    ClosedCurve c;
    c.nodes = std::move(nodes);
    c.orientation = orientation;
    if (derivatives) {
        c.derivatives = std::move(*derivatives);
    } else {
        // Fourth-order periodic central differences in the parameter.
        const int n = c.size();
        if (n < 8) throw ConfigError("closed curve needs at least 8 nodes");
        const double dt = 2.0 * pi / n;
        c.derivatives.resize(n);
        for (int k = 0; k < n; ++k) {
            const Complex p1 = c.nodes[(k + 1) % n], m1 = c.nodes[(k + n - 1) % n];
            const Complex p2 = c.nodes[(k + 2) % n], m2 = c.nodes[(k + n - 2) % n];
            c.derivatives[k] = (8.0 * (p1 - m1) - (p2 - m2)) / (12.0 * dt);
        }
    }
    validate_curve(c);
    return c;
}

void validate_curve(const ClosedCurve& curve) {
    const int n = curve.size();
    if (n < 8) throw ConfigError("closed curve needs at least 8 nodes");
    if (curve.derivatives.size() != n)
        throw ConfigError("derivative sample count does not match the node count");
    if (curve.orientation != 1 && curve.orientation != -1)
        throw ConfigError("curve orientation must be +1 or -1");
    if (!curve.nodes.allFinite() || !curve.derivatives.allFinite())
        throw ConfigError("curve samples contain non-finite values");
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (curve.nodes[a] == curve.nodes[b])
                throw ConfigError("curve nodes " + std::to_string(a) + " and " +
                                  std::to_string(b) + " coincide");
}

double exclusion_radius(const ClosedCurve& curve) {
    return 4.0 * (2.0 * pi / curve.size()) * curve.derivatives.cwiseAbs().maxCoeff();
}

Complex cauchy_transform(const ClosedCurve& curve, const Eigen::VectorXcd& boundary_values,
                         Complex z) {
    check_boundary_values(curve, boundary_values);
    const double excl = exclusion_radius(curve);
    if (min_node_distance(curve, z) <= excl)
        throw TooCloseToCurveError("evaluation point within the exclusion radius " +
                                   std::to_string(excl) + "; use plemelj_jump for traces");
    const int n = curve.size();
    Complex acc{0.0, 0.0};
    for (int k = 0; k < n; ++k)
        acc += boundary_values[k] * curve.derivatives[k] / (curve.nodes[k] - z);
    return double(curve.orientation) * acc / (Complex(0.0, 1.0) * double(n));
}

std::vector<Complex> cauchy_transform_many(const ClosedCurve& curve,
                                           const Eigen::VectorXcd& boundary_values,
                                           std::span<const Complex> points) {
    check_boundary_values(curve, boundary_values);
    std::vector<Complex> out(points.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(points.size()); ++i) {
        try {
            out[i] = cauchy_transform(curve, boundary_values, points[i]);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

int winding_indicator(const ClosedCurve& curve, Complex z) {
    const Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(curve.size());
    const Complex w = cauchy_transform(curve, ones, z);
    const double nearest = std::round(w.real());
    const double residual = std::abs(w - Complex(nearest, 0.0));
    if (residual >= 0.1)
        throw NonIntegerResidualError("winding residual " + std::to_string(residual) +
                                      "; curve is under-resolved at this point");
    return static_cast<int>(nearest);
}

Complex plemelj_jump(const ClosedCurve& curve, const Eigen::VectorXcd& boundary_values,
                     int node, std::span<const double> offsets) {
    check_boundary_values(curve, boundary_values);
    if (node < 0 || node >= curve.size())
        throw ConfigError("node index out of range");
    if (offsets.empty()) throw ConfigError("need at least one offset");
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        if (!(offsets[i] > 0.0)) throw ConfigError("offsets must be positive");
        if (i > 0 && offsets[i] >= offsets[i - 1])
            throw ConfigError("offsets must decrease");
    }

    const Complex zeta = curve.nodes[node];
    const Complex tangent = curve.derivatives[node];
    if (std::abs(tangent) == 0.0)
        throw EvaluationError("zero tangent at node " + std::to_string(node));
    const Complex normal =
        Complex(0.0, -1.0) * double(curve.orientation) * tangent / std::abs(tangent);

    std::vector<Complex> jumps;
    jumps.reserve(offsets.size());
    for (double eps : offsets) {
        const Complex inner = cauchy_transform(curve, boundary_values, zeta - eps * normal);
        const Complex outer = cauchy_transform(curve, boundary_values, zeta + eps * normal);
        jumps.push_back(inner - outer);
    }
    return extrapolate_to_zero(offsets, std::move(jumps));
}

double holomorphy_check(const ClosedCurve& curve, const Eigen::VectorXcd& boundary_values,
                        std::span<const Complex> probes, double loop_radius,
                        int loop_points) {
    check_boundary_values(curve, boundary_values);
    if (probes.empty()) throw ConfigError("need at least one probe point");
    if (!(loop_radius > 0.0)) throw ConfigError("loop radius must be positive");
    if (loop_points < 8) throw ConfigError("need at least 8 loop points");

    const double excl = exclusion_radius(curve);
    double worst = 0.0;
    for (const Complex& probe : probes) {
        std::vector<Complex> ring(loop_points);
        for (int j = 0; j < loop_points; ++j)
            ring[j] = probe + std::polar(loop_radius, 2.0 * pi * j / loop_points);
        for (const Complex& q : ring)
            if (min_node_distance(curve, q) <= excl)
                throw LoopCrossesCurveError("loop around probe passes within the "
                                            "exclusion radius of the curve");
        int winding = 0;
        for (int j = 0; j < loop_points; ++j) {
            const int w = winding_indicator(curve, ring[j]);
            if (j == 0)
                winding = w;
            else if (w != winding)
                throw LoopCrossesCurveError("loop around probe straddles the curve");
        }

        const std::vector<Complex> values = cauchy_transform_many(curve, boundary_values, ring);
        std::vector<Complex> terms(loop_points);
        for (int j = 0; j < loop_points; ++j) {
            const Complex dz =
                Complex(0.0, 1.0) * std::polar(loop_radius, 2.0 * pi * j / loop_points);
            terms[j] = values[j] * dz;
        }
        const Complex residual =
            pairwise_sum(std::span<const Complex>(terms)) * (2.0 * pi / loop_points);
        worst = std::max(worst, std::abs(residual));
    }
    return worst;
}

namespace serial {

std::vector<Complex> cauchy_transform_many(const ClosedCurve& curve,
                                           const Eigen::VectorXcd& boundary_values,
                                           std::span<const Complex> points) {
    std::vector<Complex> out;
    out.reserve(points.size());
    for (const Complex& z : points)
        out.push_back(cauchy_transform(curve, boundary_values, z));
    return out;
}

} // namespace serial

} // namespace trgeo
