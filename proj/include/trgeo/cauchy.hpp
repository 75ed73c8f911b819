#ifndef TRGEO_CAUCHY_HPP
#define TRGEO_CAUCHY_HPP

#include "trgeo/errors.hpp"
#include "trgeo/types.hpp"

#include <optional>
#include <span>
#include <vector>

namespace trgeo {

// Closed curve in C sampled at the uniform parameter grid t_k = 2 pi k/N.
// `orientation` flips the traversal without reordering the samples.
struct ClosedCurve {
    Eigen::VectorXcd nodes;
    Eigen::VectorXcd derivatives; // zeta'(t_k)
    int orientation = 1;

    int size() const { return static_cast<int>(nodes.size()); }
};

ClosedCurve make_circle(int n, double radius = 1.0);
ClosedCurve make_ellipse(double a, double b, int n);

// Builds a curve from samples; missing derivatives are filled with
// fourth-order periodic central differences.
ClosedCurve curve_from_nodes(Eigen::VectorXcd nodes,
                             std::optional<Eigen::VectorXcd> derivatives, int orientation);

void validate_curve(const ClosedCurve& curve);

// Quadrature safety margin: 4 grid spacings scaled by max |zeta'|.
// Closer evaluation points are rejected (use plemelj_jump instead).
double exclusion_radius(const ClosedCurve& curve);

/* Periodic-trapezoid Cauchy transform

     (1 / 2 pi i) * (2 pi / N) * sum_k f_k zeta'_k / (zeta_k - z),

   orientation-signed. Spectrally accurate for analytic curves and data
   at points respecting the exclusion radius. */
Complex cauchy_transform(const ClosedCurve& curve, const Eigen::VectorXcd& boundary_values,
                         Complex z);

// Transform at many points (OpenMP over points).
std::vector<Complex> cauchy_transform_many(const ClosedCurve& curve,
                                           const Eigen::VectorXcd& boundary_values,
                                           std::span<const Complex> points);

// Nearest integer to Re of the transform of f = 1; the residual must stay
// below 0.1 or the curve is considered under-resolved.
int winding_indicator(const ClosedCurve& curve, Complex z);

/* Two-sided boundary limit difference at node k, Richardson-extrapolated
   over the given decreasing offsets along the outward normal
   (-i * orientation * unit tangent). Recovers the boundary density for
   smooth data. */
Complex plemelj_jump(const ClosedCurve& curve, const Eigen::VectorXcd& boundary_values,
                     int node, std::span<const double> offsets);

/* Morera residuals: the loop integral of the transform over small circles
   around each probe, all of which must stay off the curve and on one
   side. Returns the max modulus over probes. */
double holomorphy_check(const ClosedCurve& curve, const Eigen::VectorXcd& boundary_values,
                        std::span<const Complex> probes, double loop_radius,
                        int loop_points = 64);

namespace serial {
std::vector<Complex> cauchy_transform_many(const ClosedCurve& curve,
                                           const Eigen::VectorXcd& boundary_values,
                                           std::span<const Complex> points);
} // namespace serial

} // namespace trgeo

#endif
