#include "trgeo/surface.hpp"

#include "trgeo/pairings.hpp"
#include "trgeo/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace trgeo {

namespace {

double factorial(int m) {
    double f = 1.0;
    for (int k = 2; k <= m; ++k) f *= k;
    return f;
}

int sort_parity(std::vector<int> v) {
    int swaps = 0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        for (std::size_t j = 0; j + 1 < v.size() - i; ++j)
            if (v[j] > v[j + 1]) {
                std::swap(v[j], v[j + 1]);
                ++swaps;
            }
    return (swaps % 2 == 0) ? 1 : -1;
}

// Barycentric lattice of order 4 on the m-simplex: all integer
// compositions (i_0,..,i_m) of 4, as weight vectors i/4. Cached per m.
const std::vector<std::vector<double>>& barycentric_lattice(int m) {
    static std::map<int, std::vector<std::vector<double>>> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    constexpr int order = 4;
    std::vector<std::vector<double>> pts;
    std::vector<int> idx(m + 1, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == m) {
            idx[pos] = left;
            std::vector<double> w(m + 1);
            for (int j = 0; j <= m; ++j) w[j] = idx[j] / double(order);
            pts.push_back(std::move(w));
            return;
        }
        for (int take = 0; take <= left; ++take) {
            idx[pos] = take;
            rec(pos + 1, left - take);
        }
    };
    rec(0, order);
    return cache.emplace(m, std::move(pts)).first->second;
}

const Simplex& checked_simplex(const TriangulatedSurface& M, int simplex_id) {
    if (simplex_id < 0 || simplex_id >= static_cast<int>(M.simplices.size()))
        throw ConfigError("simplex id " + std::to_string(simplex_id) + " out of range");
    return M.simplices[simplex_id];
}

struct RefChild;
const std::vector<RefChild>& reference_children(int m);

/* Volume of simplex-ball overlap. Cells far from the ball boundary are
   resolved exactly (a simplex with all vertices inside the ball lies
   inside it); straddling cells are bisected deterministically until their
   diameter drops below a quarter of the radius, then sampled on the
   order-4 barycentric lattice. */
double overlap_recurse(const std::vector<ComplexVector>& verts, double vol,
                       const ComplexVector& center, double radius, int depth);

double contribution_in_ball(const TriangulatedSurface& M, int s, const BallQuery& q) {
    const Simplex& sx = M.simplices[s];
    const double vol = simplex_volume(M, s);
    if (vol == 0.0 || sx.density == 0.0) return 0.0;
    std::vector<ComplexVector> verts;
    verts.reserve(sx.vertices.size());
    for (int v : sx.vertices) verts.push_back(M.vertices[v]);
    return sx.density * overlap_recurse(verts, vol, q.center, q.radius, 0);
}

void validate_ball(const TriangulatedSurface& M, const BallQuery& q) {
    if (!(q.radius > 0.0)) throw ConfigError("ball radius must be positive");
    if (q.center.size() != M.ambient_m)
        throw DimensionError("ball center dimension does not match the surface");
}

struct CenterSample {
    int simplex = 0;
    ComplexVector point;
    bool boundary_adjacent = false;
};

// Lattice samples spread over every boundary facet (facets incident to a
// single simplex). Distance to this point set approximates distance to
// the mesh boundary to within a fraction of the facet diameter.
std::vector<ComplexVector> boundary_probe_points(const TriangulatedSurface& M) {
    std::map<std::vector<int>, int> facet_count;
    for (const Simplex& sx : M.simplices) {
        const int n = static_cast<int>(sx.vertices.size());
        for (int omit = 0; omit < n; ++omit) {
            std::vector<int> facet;
            facet.reserve(n - 1);
            for (int j = 0; j < n; ++j)
                if (j != omit) facet.push_back(sx.vertices[j]);
            std::sort(facet.begin(), facet.end());
            ++facet_count[facet];
        }
    }
    std::vector<ComplexVector> points;
    const int facet_dim = M.ambient_m - 1;
    for (const auto& [facet, count] : facet_count) {
        if (count != 1) continue;
        if (facet_dim == 0) {
            points.push_back(M.vertices[facet[0]]);
            continue;
        }
        for (const auto& w : barycentric_lattice(facet_dim)) {
            ComplexVector p = ComplexVector::Zero(M.ambient_m);
            for (int j = 0; j <= facet_dim; ++j)
                if (w[j] != 0.0) p += w[j] * M.vertices[facet[j]];
            points.push_back(std::move(p));
        }
    }
    return points;
}

std::vector<CenterSample> sample_centers(const TriangulatedSurface& M,
                                         const SampleSpec& centers, double flag_radius) {
    if (centers.count < 1) throw ConfigError("empty sample spec");
    std::mt19937_64 eng(centers.seed);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(M.simplices.size()) - 1);

    const std::vector<ComplexVector> probes = boundary_probe_points(M);
    std::vector<CenterSample> out;
    out.reserve(centers.count);
    for (int i = 0; i < centers.count; ++i) {
        CenterSample cs;
        cs.simplex = pick(eng);
        cs.point = simplex_centroid(M, cs.simplex);
        for (const ComplexVector& p : probes) {
            if ((p - cs.point).norm() < flag_radius) {
                cs.boundary_adjacent = true;
                break;
            }
        }
        out.push_back(std::move(cs));
    }
    return out;
}

void require_nonempty(const TriangulatedSurface& M) {
    if (M.simplices.empty()) throw EmptySurfaceError("surface has no simplices");
}

void validate_radius_spec(const TriangulatedSurface& M, const RadiusSpec& spec,
                          double reach_factor) {
    if (spec.count < 1) throw ConfigError("empty radius spec");
    if (!(spec.r0 > 0.0) || !(spec.factor > 0.0))
        throw ConfigError("radius spec must have positive r0 and factor");
    const double diam = diameter_proxy(M);
    for (double r : spec.radii())
        if (reach_factor * r > diam)
            throw ConfigError("radius " + std::to_string(reach_factor * r) +
                              " exceeds the surface diameter bound " + std::to_string(diam));
}

// Children of the doubled reference Kuhn simplex, encoded as vertex pairs
// (j,k): j == k is the parent vertex j, j < k the midpoint of (j,k).
struct RefChild {
    std::vector<std::pair<int, int>> vertices;
    int rel_sign = 1;
};

const std::vector<RefChild>& reference_children(int m) {
    static std::map<int, std::vector<RefChild>> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    std::vector<RefChild> children;
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> base(m), w(m);
    do {
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            for (int a = 0; a < m; ++a) base[a] = (mask >> a) & 1u;
            // Walk w_0 = offset, w_k = w_{k-1} + e_{perm[k-1]}; keep the
            // child when every vertex has nonincreasing coordinates
            // (i.e. lies in the doubled reference simplex).
            std::vector<std::vector<int>> verts;
            verts.reserve(m + 1);
            w = base;
            bool ok = std::is_sorted(w.rbegin(), w.rend());
            verts.push_back(w);
            for (int k = 0; ok && k < m; ++k) {
                ++w[perm[k]];
                ok = std::is_sorted(w.rbegin(), w.rend());
                verts.push_back(w);
            }
            if (!ok) continue;

            RefChild child;
            child.rel_sign = sort_parity(perm);
            for (const auto& p : verts) {
                // Barycentric weights with respect to the doubled parent:
                // lambda_0 = 1 - p_1/2, lambda_k = (p_k - p_{k+1})/2,
                // lambda_m = p_m/2; all in {0, 1/2, 1}.
                std::vector<int> halves(m + 1); // weights in units of 1/2
                halves[0] = 2 - p[0];
                for (int k = 1; k < m; ++k) halves[k] = p[k - 1] - p[k];
                halves[m] = p[m - 1];
                int a = -1, b = -1;
                for (int k = 0; k <= m; ++k) {
                    if (halves[k] == 2) a = b = k;
                    if (halves[k] == 1) (a < 0 ? a : b) = k;
                }
                child.vertices.emplace_back(a, b);
            }
            children.push_back(std::move(child));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (static_cast<int>(children.size()) != (1 << m))
        throw NumericalError("internal refinement enumeration failure");
    return cache.emplace(m, std::move(children)).first->second;
}

double overlap_recurse(const std::vector<ComplexVector>& verts, double vol,
                       const ComplexVector& center, double radius, int depth) {
    const int m = static_cast<int>(verts.size()) - 1;
    const double r2 = radius * radius;

    double dmin2 = std::numeric_limits<double>::max();
    bool all_inside = true;
    for (const ComplexVector& v : verts) {
        const double d2 = (v - center).squaredNorm();
        dmin2 = std::min(dmin2, d2);
        if (d2 > r2) all_inside = false;
    }
    if (all_inside) return vol; // the ball is convex

    double diam = 0.0;
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            diam = std::max(diam, (verts[a] - verts[b]).norm());
    if (std::sqrt(dmin2) - diam > radius) return 0.0; // no point can reach the ball

    if (diam > 0.25 * radius && depth < 12) {
        const auto& children = reference_children(m);
        double acc = 0.0;
        std::vector<ComplexVector> child(m + 1);
        for (const RefChild& c : children) {
            for (int k = 0; k <= m; ++k) {
                const auto& [a, b] = c.vertices[k];
                child[k] = (a == b) ? verts[a] : 0.5 * (verts[a] + verts[b]);
            }
            acc += overlap_recurse(child, vol / children.size(), center, radius, depth + 1);
        }
        return acc;
    }

    const auto& lattice = barycentric_lattice(m);
    int inside = 0;
    ComplexVector p(verts[0].size());
    for (const auto& w : lattice) {
        p.setZero();
        for (int j = 0; j <= m; ++j)
            if (w[j] != 0.0) p += w[j] * verts[j];
        if ((p - center).squaredNorm() <= r2) ++inside;
    }
    return vol * inside / double(lattice.size());
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace

std::vector<double> RadiusSpec::radii() const {
    std::vector<double> out;
    double r = r0;
    for (int i = 0; i < count; ++i, r *= factor) out.push_back(r);
    return out;
}

void validate_structure(const TriangulatedSurface& M) {
    if (M.ambient_m < 1) throw ConfigError("ambient dimension must be at least 1");
    const int nv = static_cast<int>(M.vertices.size());
    for (int v = 0; v < nv; ++v) {
        if (M.vertices[v].size() != M.ambient_m)
            throw ConfigError("vertex " + std::to_string(v) + " has wrong dimension");
        if (!M.vertices[v].allFinite())
            throw ConfigError("vertex " + std::to_string(v) + " has non-finite coordinates");
    }
    for (std::size_t s = 0; s < M.simplices.size(); ++s) {
        const Simplex& sx = M.simplices[s];
        if (static_cast<int>(sx.vertices.size()) != M.ambient_m + 1)
            throw ConfigError("simplex " + std::to_string(s) + " must have m+1 vertices");
        for (int v : sx.vertices)
            if (v < 0 || v >= nv)
                throw ConfigError("simplex " + std::to_string(s) + " has vertex index " +
                                  std::to_string(v) + " out of range");
        if (sx.sign != 1 && sx.sign != -1)
            throw ConfigError("simplex " + std::to_string(s) + " has sign outside {-1, +1}");
        if (!(sx.density >= 0.0) || !std::isfinite(sx.density))
            throw ConfigError("simplex " + std::to_string(s) + " has negative density");
    }
}

SurfaceCheck check_surface(const TriangulatedSurface& M, double rank_tol) {
    validate_structure(M);
    SurfaceCheck out;
    for (int s = 0; s < static_cast<int>(M.simplices.size()); ++s) {
        try {
            (void)tangent_plane(M, s, rank_tol);
        } catch (const DegenerateSubspaceError&) {
            out.degenerate_simplices.push_back(s);
        }
    }

    // Induced facet orientations: facet omitting position i of a simplex
    // with sign s contributes s * (-1)^i, normalized by the parity of
    // sorting the remaining vertices. Interior facets must cancel.
    std::map<std::vector<int>, std::vector<int>> facets;
    for (const Simplex& sx : M.simplices) {
        const int n = static_cast<int>(sx.vertices.size());
        for (int omit = 0; omit < n; ++omit) {
            std::vector<int> facet;
            facet.reserve(n - 1);
            for (int j = 0; j < n; ++j)
                if (j != omit) facet.push_back(sx.vertices[j]);
            const int induced = sx.sign * (omit % 2 == 0 ? 1 : -1) * sort_parity(facet);
            std::sort(facet.begin(), facet.end());
            facets[facet].push_back(induced);
        }
    }
    for (const auto& [facet, signs] : facets) {
        if (signs.size() == 1)
            ++out.boundary_facets;
        else if (signs.size() == 2) {
            if (signs[0] + signs[1] != 0) ++out.inconsistent_facets;
        } else
            ++out.nonmanifold_facets;
    }
    return out;
}

ComplexMatrix edge_matrix(const TriangulatedSurface& M, int simplex_id) {
    const Simplex& sx = checked_simplex(M, simplex_id);
    const int m = M.ambient_m;
    ComplexMatrix e(m, m);
    for (int k = 1; k <= m; ++k)
        e.col(k - 1) = M.vertices[sx.vertices[k]] - M.vertices[sx.vertices[0]];
    return e;
}

ComplexVector simplex_centroid(const TriangulatedSurface& M, int simplex_id) {
    const Simplex& sx = checked_simplex(M, simplex_id);
    ComplexVector c = ComplexVector::Zero(M.ambient_m);
    for (int v : sx.vertices) c += M.vertices[v];
    return c / double(M.ambient_m + 1);
}

double simplex_volume(const TriangulatedSurface& M, int simplex_id) {
    const RealMatrix e = realified(edge_matrix(M, simplex_id));
    const RealMatrix gram = e.transpose() * e;
    const double g = std::max(gram.determinant(), 0.0);
    return std::sqrt(g) / factorial(M.ambient_m);
}

Complex restricted_form_term(const TriangulatedSurface& M, int simplex_id) {
    const Simplex& sx = checked_simplex(M, simplex_id);
    return double(sx.sign) * edge_matrix(M, simplex_id).determinant() /
           factorial(M.ambient_m);
}

RealSubspace tangent_plane(const TriangulatedSurface& M, int simplex_id, double rank_tol) {
    const Simplex& sx = checked_simplex(M, simplex_id);
    ComplexMatrix basis = edge_matrix(M, simplex_id);
    if (sx.sign < 0) basis.col(0) *= -1.0; // same span, flipped orientation
    RealSubspace plane{std::move(basis), true};
    validate(plane, rank_tol);
    return plane;
}

std::vector<double> coefficient_field(const TriangulatedSurface& M, double rank_tol) {
    const int n = static_cast<int>(M.simplices.size());
    std::vector<double> out(n, 0.0);
    int bad = -1;
#pragma omp parallel for schedule(static)
    for (int s = 0; s < n; ++s) {
        try {
            out[s] = totally_real_coefficient(tangent_plane(M, s, rank_tol), rank_tol);
        } catch (const DegenerateSubspaceError&) {
#pragma omp critical
            if (bad < 0 || s < bad) bad = s;
        }
    }
    if (bad >= 0)
        throw DegenerateSubspaceError("degenerate simplex " + std::to_string(bad));
    return out;
}

double max_lagrangian_defect(const TriangulatedSurface& M, double rank_tol) {
    const int n = static_cast<int>(M.simplices.size());
    std::vector<double> defect(n, 0.0);
    int bad = -1;
#pragma omp parallel for schedule(static)
    for (int s = 0; s < n; ++s) {
        try {
            const RealSubspace on = orthonormalize(tangent_plane(M, s, rank_tol), rank_tol);
            const ComplexMatrix gram = on.basis.adjoint() * on.basis;
            defect[s] = gram.imag().cwiseAbs().maxCoeff();
        } catch (const DegenerateSubspaceError&) {
#pragma omp critical
            if (bad < 0 || s < bad) bad = s;
        }
    }
    if (bad >= 0)
        throw DegenerateSubspaceError("degenerate simplex " + std::to_string(bad));
    return defect.empty() ? 0.0 : *std::max_element(defect.begin(), defect.end());
}

Complex integrate_restricted_form(const TriangulatedSurface& M, const SurfaceFunction& f) {
    const int n = static_cast<int>(M.simplices.size());
    std::vector<Complex> terms(n, Complex{0.0, 0.0});
    int bad = -1;
#pragma omp parallel for schedule(static)
    for (int s = 0; s < n; ++s) {
        const Complex fc = f(simplex_centroid(M, s));
        if (!std::isfinite(fc.real()) || !std::isfinite(fc.imag())) {
#pragma omp critical
            if (bad < 0 || s < bad) bad = s;
            continue;
        }
        terms[s] = fc * restricted_form_term(M, s);
    }
    if (bad >= 0)
        throw EvaluationError("integrand non-finite at centroid of simplex " +
                              std::to_string(bad));
    return pairwise_sum(terms);
}

double measure_ball(const TriangulatedSurface& M, const BallQuery& q) {
    validate_ball(M, q);
    const int n = static_cast<int>(M.simplices.size());
    std::vector<double> terms(n, 0.0);
#pragma omp parallel for schedule(static)
    for (int s = 0; s < n; ++s) terms[s] = contribution_in_ball(M, s, q);
    return pairwise_sum(terms);
}

AhlforsReport ahlfors_report(const TriangulatedSurface& M, const SampleSpec& centers,
                             const RadiusSpec& radii) {
    require_nonempty(M);
    validate_radius_spec(M, radii, 1.0);
    const std::vector<double> rs = radii.radii();
    const auto samples = sample_centers(M, centers, rs.back());

    AhlforsReport rep;
    auto fold = [](std::optional<double>& lo, std::optional<double>& hi, double x) {
        lo = lo ? std::min(*lo, x) : x;
        hi = hi ? std::max(*hi, x) : x;
    };
    for (const CenterSample& cs : samples) {
        cs.boundary_adjacent ? ++rep.boundary_count : ++rep.interior_count;
        for (double r : rs) {
            const double ratio =
                measure_ball(M, BallQuery{cs.point, r}) / std::pow(r, M.ambient_m);
            if (cs.boundary_adjacent)
                fold(rep.boundary_c_lower, rep.boundary_c_upper, ratio);
            else
                fold(rep.c_lower, rep.c_upper, ratio);
        }
    }
    return rep;
}

DoublingReport doubling_report(const TriangulatedSurface& M, const SampleSpec& centers,
                               const RadiusSpec& radii) {
    require_nonempty(M);
    validate_radius_spec(M, radii, 2.0); // doubled balls must stay admissible
    const std::vector<double> rs = radii.radii();
    const auto samples = sample_centers(M, centers, 2.0 * rs.back());

    DoublingReport rep;
    for (const CenterSample& cs : samples) {
        for (double r : rs) {
            const double small = measure_ball(M, BallQuery{cs.point, r});
            if (small == 0.0) {
                ++rep.samples_excluded;
                continue;
            }
            const double big = measure_ball(M, BallQuery{cs.point, 2.0 * r});
            const double ratio = big / small;
            rep.max_ratio = rep.max_ratio ? std::max(*rep.max_ratio, ratio) : ratio;
            ++rep.samples_used;
        }
    }
    return rep;
}

TriangulatedSurface red_refine(const TriangulatedSurface& M) {
    validate_structure(M);
    const int m = M.ambient_m;
    const auto& children = reference_children(m);

    TriangulatedSurface out;
    out.ambient_m = m;
    out.vertices = M.vertices;
    out.simplices.reserve(M.simplices.size() * children.size());

    std::map<std::pair<int, int>, int> midpoint_ids;
    auto midpoint = [&](int a, int b) {
        const auto key = std::minmax(a, b);
        auto it = midpoint_ids.find(key);
        if (it != midpoint_ids.end()) return it->second;
        const int id = static_cast<int>(out.vertices.size());
        out.vertices.push_back(0.5 * (M.vertices[a] + M.vertices[b]));
        midpoint_ids.emplace(key, id);
        return id;
    };

    for (const Simplex& parent : M.simplices) {
        for (const RefChild& child : children) {
            Simplex sx;
            sx.sign = parent.sign * child.rel_sign;
            sx.density = parent.density;
            sx.vertices.reserve(m + 1);
            for (const auto& [a, b] : child.vertices) {
                const int va = parent.vertices[a], vb = parent.vertices[b];
                sx.vertices.push_back(a == b ? va : midpoint(va, vb));
            }
            out.simplices.push_back(std::move(sx));
        }
    }
    return out;
}

double diameter_proxy(const TriangulatedSurface& M) {
    if (M.vertices.empty()) return 0.0;
    RealVector lo = RealVector::Constant(2 * M.ambient_m, std::numeric_limits<double>::max());
    RealVector hi = RealVector::Constant(2 * M.ambient_m, std::numeric_limits<double>::lowest());
    for (const ComplexVector& v : M.vertices) {
        for (int j = 0; j < M.ambient_m; ++j) {
            lo[2 * j] = std::min(lo[2 * j], v[j].real());
            hi[2 * j] = std::max(hi[2 * j], v[j].real());
            lo[2 * j + 1] = std::min(lo[2 * j + 1], v[j].imag());
            hi[2 * j + 1] = std::max(hi[2 * j + 1], v[j].imag());
        }
    }
    return (hi - lo).norm();
}

TriangulatedSurface read_trmesh(std::istream& in) {
    std::string magic;
    if (!(in >> magic) || magic != "trmesh")
        throw ConfigError("mesh file must start with a 'trmesh' header");
    TriangulatedSurface M;
    int nv = 0, ns = 0;
    if (!(in >> M.ambient_m >> nv >> ns) || M.ambient_m < 1 || nv < 0 || ns < 0)
        throw ConfigError("malformed trmesh header counts");
    M.vertices.reserve(nv);
    for (int v = 0; v < nv; ++v) {
        ComplexVector p(M.ambient_m);
        for (int j = 0; j < M.ambient_m; ++j) {
            double re, im;
            if (!(in >> re >> im))
                throw ConfigError("truncated vertex line " + std::to_string(v));
            p[j] = Complex(re, im);
        }
        M.vertices.push_back(std::move(p));
    }
    M.simplices.reserve(ns);
    for (int s = 0; s < ns; ++s) {
        Simplex sx;
        sx.vertices.resize(M.ambient_m + 1);
        for (int& v : sx.vertices)
            if (!(in >> v)) throw ConfigError("truncated simplex line " + std::to_string(s));
        if (!(in >> sx.sign >> sx.density))
            throw ConfigError("truncated simplex line " + std::to_string(s));
        M.simplices.push_back(std::move(sx));
    }
    validate_structure(M);
    return M;
}

TriangulatedSurface read_trmesh_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open mesh file " + path);
    return read_trmesh(in);
}

void write_trmesh(std::ostream& out, const TriangulatedSurface& M) {
    out << "trmesh " << M.ambient_m << ' ' << M.vertices.size() << ' ' << M.simplices.size()
        << '\n';
    for (const ComplexVector& v : M.vertices) {
        for (int j = 0; j < M.ambient_m; ++j) {
            if (j) out << ' ';
            out << format_double(v[j].real()) << ' ' << format_double(v[j].imag());
        }
        out << '\n';
    }
    for (const Simplex& sx : M.simplices) {
        for (int v : sx.vertices) out << v << ' ';
        out << sx.sign << ' ' << format_double(sx.density) << '\n';
    }
}

namespace serial {

std::vector<double> coefficient_field(const TriangulatedSurface& M, double rank_tol) {
    std::vector<double> out;
    out.reserve(M.simplices.size());
    for (int s = 0; s < static_cast<int>(M.simplices.size()); ++s) {
        try {
            out.push_back(totally_real_coefficient(tangent_plane(M, s, rank_tol), rank_tol));
        } catch (const DegenerateSubspaceError&) {
            throw DegenerateSubspaceError("degenerate simplex " + std::to_string(s));
        }
    }
    return out;
}

Complex integrate_restricted_form(const TriangulatedSurface& M, const SurfaceFunction& f) {
    Complex acc{0.0, 0.0};
    for (int s = 0; s < static_cast<int>(M.simplices.size()); ++s) {
        const Complex fc = f(simplex_centroid(M, s));
        if (!std::isfinite(fc.real()) || !std::isfinite(fc.imag()))
            throw EvaluationError("integrand non-finite at centroid of simplex " +
                                  std::to_string(s));
        acc += fc * restricted_form_term(M, s);
    }
    return acc;
}

double measure_ball(const TriangulatedSurface& M, const BallQuery& q) {
    validate_ball(M, q);
    double acc = 0.0;
    for (int s = 0; s < static_cast<int>(M.simplices.size()); ++s)
        acc += contribution_in_ball(M, s, q);
    return acc;
}

} // namespace serial

} // namespace trgeo
