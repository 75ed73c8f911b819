#include "trgeo/subspace.hpp"

#include "trgeo/pairings.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <cmath>
#include <numbers>
#include <random>

namespace trgeo {

namespace {

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 of (seed, stream) so that distinct (m, seed) pairs get
    // unrelated engine states.
    std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    auto mix = [&x]() {
        x += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    };
    std::seed_seq seq{mix(), mix(), mix(), mix()};
    return std::mt19937_64(seq);
}

ComplexMatrix gaussian_matrix(int m, std::mt19937_64& eng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix a(m, m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) a(i, j) = Complex(gauss(eng), gauss(eng));
    return a;
}

double smallest_singular_ratio(const RealMatrix& a) {
    Eigen::JacobiSVD<RealMatrix> svd(a);
    const auto& s = svd.singularValues();
    if (s(0) == 0.0) return 0.0;
    return s(s.size() - 1) / s(0);
}

double max_abs_imag_gram(const ComplexMatrix& z) {
    const ComplexMatrix s = z.adjoint() * z;
    return s.imag().cwiseAbs().maxCoeff();
}

} // namespace

RealMatrix realified(const ComplexMatrix& basis) {
    RealMatrix r(2 * basis.rows(), basis.cols());
    r.topRows(basis.rows()) = basis.real();
    r.bottomRows(basis.rows()) = basis.imag();
    return r;
}

void validate(const RealSubspace& L, double rank_tol) {
    if (L.basis.cols() < 1)
        throw DimensionError("subspace needs at least one basis vector");
    if (L.basis.rows() != L.basis.cols())
        throw DimensionError("expected m basis vectors in C^m, got " +
                             std::to_string(L.basis.cols()) + " vectors in C^" +
                             std::to_string(L.basis.rows()));
    if (!L.basis.allFinite())
        throw DimensionError("basis contains non-finite entries");
    if (smallest_singular_ratio(realified(L.basis)) < rank_tol)
        throw DegenerateSubspaceError("basis is numerically rank deficient over R");
}

RealSubspace orthonormalize(const RealSubspace& L, double rank_tol) {
    validate(L, rank_tol);
    const int m = L.dimension();
    ComplexMatrix q = L.basis;
    for (int k = 0; k < m; ++k) {
        for (int pass = 0; pass < 2; ++pass) {
            for (int j = 0; j < k; ++j) {
                const double proj = real_inner(q.col(k), q.col(j));
                q.col(k) -= proj * q.col(j);
            }
        }
        const double nrm = std::sqrt(real_inner(q.col(k), q.col(k)));
        if (!(nrm > 0.0))
            throw DegenerateSubspaceError("zero column after Gram-Schmidt at index " +
                                          std::to_string(k));
        q.col(k) /= nrm;
    }
    return RealSubspace{std::move(q), L.oriented};
}

ComplexMatrix complex_matrix(const RealSubspace& L) { return L.basis; }

double totally_real_coefficient(const RealSubspace& L, double rank_tol) {
    const RealSubspace on = orthonormalize(L, rank_tol);
    const double c = std::abs(on.basis.determinant());
    return std::min(c, 1.0); // Hadamard bound; rounding may overshoot by ulps
}

bool is_totally_real(const RealSubspace& L, double tol, double rank_tol) {
    if (!(tol > 0.0)) throw ConfigError("tolerance must be positive");
    return totally_real_coefficient(L, rank_tol) > tol;
}

bool is_lagrangian(const RealSubspace& L, double tol, double rank_tol) {
    if (!(tol > 0.0)) throw ConfigError("tolerance must be positive");
    const RealSubspace on = orthonormalize(L, rank_tol);
    return max_abs_imag_gram(on.basis) <= tol;
}

bool is_special_lagrangian(const RealSubspace& L, double tol, double rank_tol) {
    if (!L.oriented)
        throw UnorientedError("special Lagrangian test needs an oriented plane");
    if (!is_lagrangian(L, tol, rank_tol)) return false;
    const RealSubspace on = orthonormalize(L, rank_tol);
    return std::abs(on.basis.determinant() - Complex(1.0, 0.0)) <= tol;
}

double lagrangian_phase(const RealSubspace& L, double phase_tol, double rank_tol) {
    if (!L.oriented)
        throw UnorientedError("determinant phase needs an oriented plane");
    const RealSubspace on = orthonormalize(L, rank_tol);
    const Complex det = on.basis.determinant();
    if (std::abs(det) <= phase_tol)
        throw PhaseUndefinedError("phase undefined: totally-real coefficient " +
                                  std::to_string(std::abs(det)) + " below tolerance");
    double phase = std::arg(det);
    if (phase <= -std::numbers::pi) phase += 2.0 * std::numbers::pi;
    return phase;
}

RealSubspace lagrangian_from_unitary(const ComplexMatrix& U, double unitary_tol) {
    if (U.rows() != U.cols() || U.cols() < 1)
        throw DimensionError("unitary matrix must be square and nonempty");
    const int m = static_cast<int>(U.cols());
    const ComplexMatrix defect = U.adjoint() * U - ComplexMatrix::Identity(m, m);
    const double err = defect.cwiseAbs().maxCoeff();
    if (err > unitary_tol)
        throw NotUnitaryError("max |U^H U - I| = " + std::to_string(err) +
                              " exceeds tolerance");
    return RealSubspace{U, true};
}

RealSubspace random_subspace(int m, std::uint64_t seed) {
    if (m < 1) throw DimensionError("dimension must be at least 1");
    std::mt19937_64 eng = seeded_engine(seed, static_cast<std::uint64_t>(m));
    const ToleranceConfig tol;
    for (int attempt = 0; attempt < 16; ++attempt) {
        RealSubspace L{gaussian_matrix(m, eng), true};
        if (smallest_singular_ratio(realified(L.basis)) >= tol.rank_tol) return L;
    }
    throw DegenerateSubspaceError("16 consecutive degenerate Gaussian draws");
}

ComplexMatrix random_unitary(int m, std::uint64_t seed) {
    if (m < 1) throw DimensionError("dimension must be at least 1");
    std::mt19937_64 eng = seeded_engine(seed, 0x753ad9a1u + static_cast<std::uint64_t>(m));
    for (int attempt = 0; attempt < 16; ++attempt) {
        const ComplexMatrix a = gaussian_matrix(m, eng);
        Eigen::HouseholderQR<ComplexMatrix> qr(a);
        ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(m, m);
        const ComplexMatrix r = qr.matrixQR().template triangularView<Eigen::Upper>();
        bool ok = true;
        for (int j = 0; j < m; ++j) {
            const double rd = std::abs(r(j, j));
            if (rd == 0.0) {
                ok = false;
                break;
            }
            q.col(j) *= r(j, j) / rd; // fold R's phase back in: Haar-correct Q
        }
        if (ok) return q;
    }
    throw DegenerateSubspaceError("QR of Gaussian matrix kept producing zero pivots");
}

RealSubspace random_lagrangian(int m, std::uint64_t seed, bool special) {
    ComplexMatrix u = random_unitary(m, seed);
    if (special) {
        const Complex det = u.determinant(); // |det| = 1 up to rounding
        u.col(0) *= std::conj(det);
    }
    return RealSubspace{std::move(u), true};
}

ClassificationReport classify(const RealSubspace& L, const ToleranceConfig& tol) {
    ClassificationReport rep;
    rep.tolerances = tol;
    const RealSubspace on = orthonormalize(L, tol.rank_tol);
    const Complex det = on.basis.determinant();
    rep.coefficient = std::min(std::abs(det), 1.0);
    rep.totally_real = rep.coefficient > tol.coefficient_tol;
    rep.lagrangian = rep.totally_real && max_abs_imag_gram(on.basis) <= tol.lagrangian_tol;
    if (L.oriented) {
        rep.special_lagrangian =
            rep.lagrangian && std::abs(det - Complex(1.0, 0.0)) <= tol.lagrangian_tol;
        if (rep.coefficient > tol.phase_tol) {
            double phase = std::arg(det);
            if (phase <= -std::numbers::pi) phase += 2.0 * std::numbers::pi;
            rep.phase = phase;
        }
    }
    return rep;
}

std::vector<ClassificationReport> classify_batch(std::span<const RealSubspace> planes,
                                                 const ToleranceConfig& tol) {
    std::vector<ClassificationReport> out(planes.size());
    std::exception_ptr failure; // exceptions must not unwind out of the omp region
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(planes.size()); ++i) {
        try {
            out[i] = classify(planes[i], tol);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

namespace serial {

std::vector<ClassificationReport> classify_batch(std::span<const RealSubspace> planes,
                                                 const ToleranceConfig& tol) {
    std::vector<ClassificationReport> out;
    out.reserve(planes.size());
    for (const RealSubspace& L : planes) out.push_back(classify(L, tol));
    return out;
}

} // namespace serial

} // namespace trgeo
