#ifndef TRGEO_PAIRINGS_HPP
#define TRGEO_PAIRINGS_HPP

#include "trgeo/errors.hpp"
#include "trgeo/types.hpp"

namespace trgeo {

/* The three pairings on C^m:

     <v, w> = sum_j v_j conj(w_j)      (Hermitian, complex-linear in v)
     (v, w) = Re <v, w>                (the real inner product on R^{2m})
     [v, w] = Im <v, w>                (antisymmetric, nondegenerate)

   Sign convention: <v, iv> = -i |v|^2, so [v, iv] = -|v|^2. The
   nondegeneracy witness is the negative of the squared length; only its
   nonvanishing matters downstream.
*/

inline void check_same_dimension(const ComplexVector& v, const ComplexVector& w) {
    if (v.size() != w.size())
        throw DimensionError("pairing of vectors with dimensions " +
                             std::to_string(v.size()) + " and " + std::to_string(w.size()));
    if (v.size() < 1) throw DimensionError("pairing of empty vectors");
}

inline Complex hermitian_inner(const ComplexVector& v, const ComplexVector& w) {
    check_same_dimension(v, w);
    Complex acc{0.0, 0.0};
    for (Eigen::Index j = 0; j < v.size(); ++j) acc += v[j] * std::conj(w[j]);
    return acc;
}

inline double real_inner(const ComplexVector& v, const ComplexVector& w) {
    return hermitian_inner(v, w).real();
}

inline double symplectic_form(const ComplexVector& v, const ComplexVector& w) {
    return hermitian_inner(v, w).imag();
}

} // namespace trgeo

#endif
