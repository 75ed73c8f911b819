#include "trgeo/gradient_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace trgeo {

namespace {

double pow_int(double x, int p) {
    double r = 1.0;
    for (int i = 0; i < p; ++i) r *= x;
    return r;
}

int permutation_parity(const std::vector<int>& perm) {
    int swaps = 0;
    std::vector<int> v = perm;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        for (std::size_t j = 0; j + 1 < v.size() - i; ++j)
            if (v[j] > v[j + 1]) {
                std::swap(v[j], v[j + 1]);
                ++swaps;
            }
    return (swaps % 2 == 0) ? 1 : -1;
}

void check_in_domain(const Potential& phi, const RealVector& x) {
    if (x.size() != phi.m) throw DimensionError("point dimension does not match potential");
    for (int j = 0; j < phi.m; ++j) {
        const double pad = 1e-12 * (1.0 + std::abs(phi.domain.hi[j] - phi.domain.lo[j]));
        if (x[j] < phi.domain.lo[j] - pad || x[j] > phi.domain.hi[j] + pad)
            throw ConfigError("point outside the potential's domain box");
    }
}

std::string grid_index_string(const std::vector<int>& idx) {
    std::ostringstream os;
    for (std::size_t j = 0; j < idx.size(); ++j) os << (j ? "," : "") << idx[j];
    return os.str();
}

} // namespace

Potential polynomial_potential(int m, std::vector<PolynomialTerm> terms, Box domain) {
    if (m < 1) throw DimensionError("potential dimension must be at least 1");
    if (domain.lo.size() != m || domain.hi.size() != m)
        throw DimensionError("domain box dimension does not match m");
    for (const PolynomialTerm& t : terms) {
        if (static_cast<int>(t.powers.size()) != m)
            throw ConfigError("polynomial term needs one exponent per axis");
        for (int p : t.powers)
            if (p < 0) throw ConfigError("polynomial exponents must be nonnegative");
    }

    Potential phi;
    phi.m = m;
    phi.domain = std::move(domain);
    phi.value = [m, terms](const RealVector& x) {
        double acc = 0.0;
        for (const PolynomialTerm& t : terms) {
            double mono = t.coeff;
            for (int j = 0; j < m; ++j) mono *= pow_int(x[j], t.powers[j]);
            acc += mono;
        }
        return acc;
    };
    phi.gradient = [m, terms](const RealVector& x) {
        RealVector g = RealVector::Zero(m);
        for (const PolynomialTerm& t : terms) {
            for (int j = 0; j < m; ++j) {
                if (t.powers[j] == 0) continue;
                double mono = t.coeff * t.powers[j] * pow_int(x[j], t.powers[j] - 1);
                for (int k = 0; k < m; ++k)
                    if (k != j) mono *= pow_int(x[k], t.powers[k]);
                g[j] += mono;
            }
        }
        return g;
    };
    phi.hessian = [m, terms](const RealVector& x) {
        RealMatrix h = RealMatrix::Zero(m, m);
        for (const PolynomialTerm& t : terms) {
            for (int j = 0; j < m; ++j) {
                if (t.powers[j] == 0) continue;
                for (int k = 0; k < m; ++k) {
                    const int pj = t.powers[j], pk = t.powers[k];
                    double mono;
                    if (j == k) {
                        if (pj < 2) continue;
                        mono = t.coeff * pj * (pj - 1) * pow_int(x[j], pj - 2);
                    } else {
                        if (pk == 0) continue;
                        mono = t.coeff * pj * pk * pow_int(x[j], pj - 1) *
                               pow_int(x[k], pk - 1);
                    }
                    for (int l = 0; l < m; ++l)
                        if (l != j && l != k) mono *= pow_int(x[l], t.powers[l]);
                    h(j, k) += mono;
                }
            }
        }
        return h;
    };
    return phi;
}

RealVector eval_gradient(const Potential& phi, const RealVector& x) {
    if (phi.gradient) return phi.gradient(x);
    if (!phi.value) throw ConfigError("potential has neither gradient nor value evaluator");
    const double h = phi.fd_step;
    RealVector g(phi.m);
    RealVector xp = x, xm = x;
    for (int j = 0; j < phi.m; ++j) {
        xp[j] = x[j] + h;
        xm[j] = x[j] - h;
        g[j] = (phi.value(xp) - phi.value(xm)) / (2.0 * h);
        xp[j] = x[j];
        xm[j] = x[j];
    }
    return g;
}

RealMatrix eval_hessian(const Potential& phi, const RealVector& x) {
    if (phi.hessian) return phi.hessian(x);
    const double h = phi.fd_step;
    RealMatrix out(phi.m, phi.m);
    if (phi.gradient) {
        // Central differences of the analytic gradient, symmetrized the
        // same way the mixed second differences below are.
        RealVector xp = x, xm = x;
        RealMatrix cols(phi.m, phi.m);
        for (int j = 0; j < phi.m; ++j) {
            xp[j] = x[j] + h;
            xm[j] = x[j] - h;
            cols.col(j) = (phi.gradient(xp) - phi.gradient(xm)) / (2.0 * h);
            xp[j] = x[j];
            xm[j] = x[j];
        }
        out = 0.5 * (cols + cols.transpose());
        return out;
    }
    if (!phi.value) throw ConfigError("potential has neither Hessian nor value evaluator");
    RealVector xx = x;
    for (int j = 0; j < phi.m; ++j) {
        xx[j] = x[j] + h;
        const double fp = phi.value(xx);
        xx[j] = x[j] - h;
        const double fm = phi.value(xx);
        xx[j] = x[j];
        out(j, j) = (fp - 2.0 * phi.value(x) + fm) / (h * h);
        for (int k = j + 1; k < phi.m; ++k) {
            double quad[4];
            const double sj[4] = {h, h, -h, -h};
            const double sk[4] = {h, -h, h, -h};
            for (int q = 0; q < 4; ++q) {
                xx[j] = x[j] + sj[q];
                xx[k] = x[k] + sk[q];
                quad[q] = phi.value(xx);
                xx[j] = x[j];
                xx[k] = x[k];
            }
            out(j, k) = out(k, j) = (quad[0] - quad[1] - quad[2] + quad[3]) / (4.0 * h * h);
        }
    }
    return out;
}

double hessian_symmetry_defect(const Potential& phi, std::span<const RealVector> points) {
    double worst = 0.0;
    for (const RealVector& x : points) {
        const RealMatrix h = eval_hessian(phi, x);
        worst = std::max(worst, (h - h.transpose()).cwiseAbs().maxCoeff());
    }
    return worst;
}

TriangulatedSurface gradient_graph(const Potential& phi, const std::vector<int>& resolution) {
    const int m = phi.m;
    if (static_cast<int>(resolution.size()) != m)
        throw ConfigError("need one resolution per axis");
    for (int r : resolution)
        if (r < 1) throw ConfigError("grid resolutions must be at least 1");

    // Vertex grid: res[j] + 1 points per axis, lexicographic layout with
    // axis 0 fastest.
    std::vector<int> npts(m), stride(m);
    long total = 1;
    for (int j = 0; j < m; ++j) {
        npts[j] = resolution[j] + 1;
        stride[j] = static_cast<int>(total);
        total *= npts[j];
    }

    TriangulatedSurface M;
    M.ambient_m = m;
    M.vertices.resize(total);

    std::vector<int> bad_index;
    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (long v = 0; v < total; ++v) {
        try {
            std::vector<int> idx(m);
            long rem = v;
            for (int j = 0; j < m; ++j) {
                idx[j] = rem % npts[j];
                rem /= npts[j];
            }
            RealVector x(m);
            for (int j = 0; j < m; ++j) {
                const double t = double(idx[j]) / resolution[j];
                x[j] = phi.domain.lo[j] + t * (phi.domain.hi[j] - phi.domain.lo[j]);
            }
            const RealVector g = eval_gradient(phi, x);
            if (!g.allFinite()) {
#pragma omp critical
                if (bad_index.empty()) bad_index = idx;
            } else {
                ComplexVector p(m);
                for (int j = 0; j < m; ++j) p[j] = Complex(x[j], g[j]);
                M.vertices[v] = std::move(p);
            }
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    if (!bad_index.empty())
        throw EvaluationError("gradient non-finite at grid index (" +
                              grid_index_string(bad_index) + ")");

    // Kuhn triangulation: per cell, one simplex per axis permutation,
    // walking one grid step along each permuted axis in turn.
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        do
            perms.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::vector<int> cell(m, 0);
    bool done = false;
    while (!done) {
        long corner = 0;
        for (int j = 0; j < m; ++j) corner += long(cell[j]) * stride[j];
        for (const auto& perm : perms) {
            Simplex sx;
            sx.sign = permutation_parity(perm);
            sx.density = 1.0;
            sx.vertices.reserve(m + 1);
            long v = corner;
            sx.vertices.push_back(static_cast<int>(v));
            for (int k = 0; k < m; ++k) {
                v += stride[perm[k]];
                sx.vertices.push_back(static_cast<int>(v));
            }
            M.simplices.push_back(std::move(sx));
        }
        done = true;
        for (int j = 0; j < m; ++j) {
            if (++cell[j] < resolution[j]) {
                done = false;
                break;
            }
            cell[j] = 0;
        }
    }
    return M;
}

RealSubspace exact_tangent(const Potential& phi, const RealVector& x) {
    check_in_domain(phi, x);
    const RealMatrix h = eval_hessian(phi, x);
    if (!h.allFinite()) throw EvaluationError("Hessian non-finite at tangent point");
    ComplexMatrix basis(phi.m, phi.m);
    basis.real() = RealMatrix::Identity(phi.m, phi.m);
    basis.imag() = h;
    return RealSubspace{std::move(basis), true};
}

} // namespace trgeo
