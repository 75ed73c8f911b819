#ifndef TRGEO_SURFACE_HPP
#define TRGEO_SURFACE_HPP

#include "trgeo/errors.hpp"
#include "trgeo/subspace.hpp"
#include "trgeo/types.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace trgeo {

// Oriented m-simplex inside a mesh: m+1 vertex indices, an orientation
// sign, and the density weight multiplying m-dimensional volume.
struct Simplex {
    std::vector<int> vertices;
    int sign = 1;
    double density = 1.0;
};

// Discretized oriented m-surface M in C^m carrying the measure
// mu = density * m-volume.
struct TriangulatedSurface {
    int ambient_m = 0;
    std::vector<ComplexVector> vertices;
    std::vector<Simplex> simplices;
};

struct BallQuery {
    ComplexVector center;
    double radius = 0.0;
};

// Structural findings. Inconsistent orientation and non-manifold gluing
// are reported, not repaired; integrals still use the stored signs.
struct SurfaceCheck {
    std::vector<int> degenerate_simplices;
    int inconsistent_facets = 0;
    int nonmanifold_facets = 0;
    int boundary_facets = 0;
    bool orientation_consistent() const {
        return inconsistent_facets == 0 && degenerate_simplices.empty();
    }
};

struct SampleSpec {
    int count = 0;
    std::uint64_t seed = 0;
};

// Radii r0 * factor^k for k = 0 .. count-1.
struct RadiusSpec {
    double r0 = 0.0;
    double factor = 2.0;
    int count = 0;

    std::vector<double> radii() const;
};

struct AhlforsReport {
    std::optional<double> c_lower, c_upper;                   // interior samples
    std::optional<double> boundary_c_lower, boundary_c_upper; // flagged samples
    int interior_count = 0;
    int boundary_count = 0;
};

struct DoublingReport {
    std::optional<double> max_ratio;
    int samples_used = 0;
    int samples_excluded = 0; // centers whose small ball carries no mass
};

// Throws ConfigError on malformed structure (bad indices, negative
// density, non-finite coordinates, wrong simplex arity).
void validate_structure(const TriangulatedSurface& M);

// Mesh diagnostics: degenerate simplices and facet orientation checks.
SurfaceCheck check_surface(const TriangulatedSurface& M,
                           double rank_tol = ToleranceConfig{}.rank_tol);

ComplexMatrix edge_matrix(const TriangulatedSurface& M, int simplex_id);
ComplexVector simplex_centroid(const TriangulatedSurface& M, int simplex_id);

// m-dimensional volume of the simplex (no density weight).
double simplex_volume(const TriangulatedSurface& M, int simplex_id);

// sign * det(edge matrix) / m!; the simplex's contribution to the
// integral of the restricted complex volume form against f = 1.
Complex restricted_form_term(const TriangulatedSurface& M, int simplex_id);

// Plane spanned by the edge vectors, oriented by the simplex sign.
RealSubspace tangent_plane(const TriangulatedSurface& M, int simplex_id,
                           double rank_tol = ToleranceConfig{}.rank_tol);

// Per-simplex totally-real coefficient (OpenMP over simplices). The
// minimum entry is the surface's quantitative totally-real lower bound.
std::vector<double> coefficient_field(const TriangulatedSurface& M,
                                      double rank_tol = ToleranceConfig{}.rank_tol);

// Max over simplices of the orthonormalized tangent's Lagrangian defect
// max |Im <b_j, b_k>|. Used by the gradient-graph convergence checks.
double max_lagrangian_defect(const TriangulatedSurface& M,
                             double rank_tol = ToleranceConfig{}.rank_tol);

using SurfaceFunction = std::function<Complex(const ComplexVector&)>;

// Centroid-rule integral of f against the restriction of the complex
// volume form: sum of f(centroid) * sign * det(edges)/m!. Exact for
// affine f on affine simplices. Deterministic pairwise reduction.
Complex integrate_restricted_form(const TriangulatedSurface& M, const SurfaceFunction& f);

// mu(B(center, radius)) with simplex/ball overlap estimated by a fixed
// order-4 barycentric lattice per simplex (deterministic placement).
double measure_ball(const TriangulatedSurface& M, const BallQuery& q);

AhlforsReport ahlfors_report(const TriangulatedSurface& M, const SampleSpec& centers,
                             const RadiusSpec& radii);

DoublingReport doubling_report(const TriangulatedSurface& M, const SampleSpec& centers,
                               const RadiusSpec& radii);

// Uniform 1 -> 2^m red refinement (Freudenthal self-similarity). Children
// keep the parent's density; orientation signs follow the parent.
TriangulatedSurface red_refine(const TriangulatedSurface& M);

// Bounding-box diagonal: upper bound proxy for diam(M).
double diameter_proxy(const TriangulatedSurface& M);

// Text format: `trmesh m n_vertices n_simplices` header, vertex lines of
// 2m floats (re/im interleaved), simplex lines of m+1 indices, a sign and
// a density. Reading validates; writing emits the canonical form.
TriangulatedSurface read_trmesh(std::istream& in);
TriangulatedSurface read_trmesh_file(const std::string& path);
void write_trmesh(std::ostream& out, const TriangulatedSurface& M);

namespace serial {
// Reference implementations kept for testing the parallel kernels.
std::vector<double> coefficient_field(const TriangulatedSurface& M,
                                      double rank_tol = ToleranceConfig{}.rank_tol);
Complex integrate_restricted_form(const TriangulatedSurface& M, const SurfaceFunction& f);
double measure_ball(const TriangulatedSurface& M, const BallQuery& q);
} // namespace serial

} // namespace trgeo

#endif
