#ifndef TRGEO_TYPES_HPP
#define TRGEO_TYPES_HPP

#include <Eigen/Dense>
#include <complex>

namespace trgeo {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

// Classification thresholds shared across the library. Defaults are one
// order above accumulated rounding for ambient dimensions up to 64.
struct ToleranceConfig {
    double coefficient_tol = 1e-9; // totally-real cutoff on |det Z|
    double lagrangian_tol = 1e-7;  // max |Im <b_j, b_k>| over an orthonormal basis
    double unitary_tol = 1e-9;     // max |U^H U - I| accepted as unitary
    double rank_tol = 1e-10;       // sigma_min < rank_tol * sigma_max is degenerate
    double phase_tol = 1e-9;       // coefficient below which the phase is undefined
};

} // namespace trgeo

#endif
