#ifndef TRGEO_SUBSPACE_HPP
#define TRGEO_SUBSPACE_HPP

#include "trgeo/errors.hpp"
#include "trgeo/types.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace trgeo {

// A real m-dimensional subspace L of C^m, spanned by the columns of
// `basis` over R. The listed column order carries the orientation when
// `oriented` is set; unoriented planes are accepted everywhere except the
// determinant-phase queries.
struct RealSubspace {
    ComplexMatrix basis;
    bool oriented = true;

    int dimension() const { return static_cast<int>(basis.cols()); }
};

struct ClassificationReport {
    double coefficient = 0.0;
    std::optional<double> phase; // radians in (-pi, pi], absent when undefined
    bool totally_real = false;
    bool lagrangian = false;
    bool special_lagrangian = false;
    ToleranceConfig tolerances;
};

// The 2m x m matrix of the basis over R (real parts stacked on imaginary
// parts). Rank decisions are made on this matrix.
RealMatrix realified(const ComplexMatrix& basis);

// Throws DimensionError for non-square input, DegenerateSubspaceError when
// the realified basis is numerically rank deficient.
void validate(const RealSubspace& L, double rank_tol = ToleranceConfig{}.rank_tol);

// Modified Gram-Schmidt with one re-orthogonalization pass against the
// real inner product. Spans the same subspace and preserves orientation
// (the change of basis is triangular with positive diagonal).
RealSubspace orthonormalize(const RealSubspace& L, double rank_tol = ToleranceConfig{}.rank_tol);

// Column-assembly of the basis vectors; the matrix whose complex
// determinant realizes the restriction of dz_1 ^ ... ^ dz_m to L.
ComplexMatrix complex_matrix(const RealSubspace& L);

/* |det Z| for a real-orthonormal basis matrix Z of L. This is the factor
   relating |dz_1 ^ ... ^ dz_m restricted to L| to the Euclidean volume
   element of L:

     0            exactly when L meets iL nontrivially,
     1            exactly when L is Lagrangian (Hadamard equality),
     in between   otherwise.

   Independent of the spanning basis and of orientation. */
double totally_real_coefficient(const RealSubspace& L,
                                double rank_tol = ToleranceConfig{}.rank_tol);

bool is_totally_real(const RealSubspace& L, double tol,
                     double rank_tol = ToleranceConfig{}.rank_tol);

// max |Im <b_j, b_k>| <= tol over an orthonormalized basis.
bool is_lagrangian(const RealSubspace& L, double tol,
                   double rank_tol = ToleranceConfig{}.rank_tol);

// Lagrangian with oriented orthonormal determinant within tol of 1.
// Throws UnorientedError when the orientation flag is absent.
bool is_special_lagrangian(const RealSubspace& L, double tol,
                           double rank_tol = ToleranceConfig{}.rank_tol);

// arg det of the oriented orthonormal basis matrix, in (-pi, pi].
// Invariant under oriented re-basing; 0 on special Lagrangian planes.
double lagrangian_phase(const RealSubspace& L,
                        double phase_tol = ToleranceConfig{}.phase_tol,
                        double rank_tol = ToleranceConfig{}.rank_tol);

// The plane spanned by the columns of U (images of the standard real
// basis), oriented by column order. Throws NotUnitaryError when
// max |U^H U - I| exceeds unitary_tol.
RealSubspace lagrangian_from_unitary(const ComplexMatrix& U,
                                     double unitary_tol = ToleranceConfig{}.unitary_tol);

// Seeded generators. Reproducible per (m, seed); both retry a bounded
// number of times on (measure zero) degenerate draws.
RealSubspace random_subspace(int m, std::uint64_t seed);
RealSubspace random_lagrangian(int m, std::uint64_t seed, bool special);

// Haar-distributed unitary: QR of a complex Gaussian matrix with the
// phases of the R diagonal folded into Q.
ComplexMatrix random_unitary(int m, std::uint64_t seed);

ClassificationReport classify(const RealSubspace& L, const ToleranceConfig& tol = {});

// Data-parallel classification of many planes (OpenMP).
std::vector<ClassificationReport> classify_batch(std::span<const RealSubspace> planes,
                                                 const ToleranceConfig& tol = {});

namespace serial {
// Reference loop kept for testing and benchmarking the parallel kernel.
std::vector<ClassificationReport> classify_batch(std::span<const RealSubspace> planes,
                                                 const ToleranceConfig& tol = {});
} // namespace serial

} // namespace trgeo

#endif
