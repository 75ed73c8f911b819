#ifndef TRGEO_GRADIENT_GRAPH_HPP
#define TRGEO_GRADIENT_GRAPH_HPP

#include "trgeo/subspace.hpp"
#include "trgeo/surface.hpp"
#include "trgeo/types.hpp"

#include <functional>
#include <span>
#include <vector>

namespace trgeo {

struct Box {
    RealVector lo, hi;
};

// Scalar potential on a box in R^m. Missing gradient/Hessian evaluators
// fall back to second-order central differences with step fd_step.
struct Potential {
    int m = 0;
    std::function<double(const RealVector&)> value;
    std::function<RealVector(const RealVector&)> gradient; // optional
    std::function<RealMatrix(const RealVector&)> hessian;  // optional
    Box domain;
    double fd_step = 1e-5;
};

struct PolynomialTerm {
    std::vector<int> powers;
    double coeff = 0.0;
};

// Potential with analytic gradient and Hessian for a polynomial given as
// a coefficient list.
Potential polynomial_potential(int m, std::vector<PolynomialTerm> terms, Box domain);

RealVector eval_gradient(const Potential& phi, const RealVector& x);
RealMatrix eval_hessian(const Potential& phi, const RealVector& x);

// max |H_jk - H_kj| over the given sample points.
double hessian_symmetry_defect(const Potential& phi, std::span<const RealVector> points);

/* The surface {x + i grad(phi)(x)} over the domain box, sampled on a
   tensor grid with `resolution[j]` cells along axis j and each cell Kuhn-
   triangulated into m! simplices. Orientation is induced from R^m and the
   density is 1. */
TriangulatedSurface gradient_graph(const Potential& phi, const std::vector<int>& resolution);

// Tangent plane of the graph at x: columns of I + i H(x), oriented by
// coordinate order. Lagrangian whenever H(x) is symmetric.
RealSubspace exact_tangent(const Potential& phi, const RealVector& x);

} // namespace trgeo

#endif
