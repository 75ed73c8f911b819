#include "trgeo/accretivity.hpp"

#include "trgeo/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace trgeo {

namespace {

std::string cell_id_string(int level, const std::vector<int>& coords) {
    std::ostringstream os;
    os << level << ':';
    for (std::size_t j = 0; j < coords.size(); ++j) os << (j ? "," : "") << coords[j];
    return os.str();
}

RealVector realify_point(const ComplexVector& p) {
    RealVector x(2 * p.size());
    for (Eigen::Index j = 0; j < p.size(); ++j) {
        x[2 * j] = p[j].real();
        x[2 * j + 1] = p[j].imag();
    }
    return x;
}

} // namespace

CellPartition build_dyadic_cells(const TriangulatedSurface& M, int depth) {
    validate_structure(M);
    if (M.simplices.empty()) throw EmptySurfaceError("cannot partition an empty surface");
    if (depth < 0 || depth > 24) throw ConfigError("depth must lie in [0, 24]");

    const int dims = 2 * M.ambient_m;
    RealVector lo = RealVector::Constant(dims, std::numeric_limits<double>::max());
    RealVector hi = RealVector::Constant(dims, std::numeric_limits<double>::lowest());
    for (const ComplexVector& v : M.vertices) {
        const RealVector x = realify_point(v);
        lo = lo.cwiseMin(x);
        hi = hi.cwiseMax(x);
    }
    double side = (hi - lo).maxCoeff();
    if (side <= 0.0) side = 1.0; // a single-point cloud still gets a box
    side *= 1.01;

    CellPartition part;
    part.depth = depth;
    part.root_size = side;
    part.root_lo = 0.5 * (lo + hi) - RealVector::Constant(dims, side / 2.0);

    part.levels.resize(depth + 1);
    for (int level = 0; level <= depth; ++level) {
        const int cells_per_axis = 1 << level;
        const double h = side / cells_per_axis;
        std::map<std::vector<int>, std::vector<int>> buckets;
        for (int s = 0; s < static_cast<int>(M.simplices.size()); ++s) {
            const RealVector c = realify_point(simplex_centroid(M, s));
            std::vector<int> key(dims);
            for (int j = 0; j < dims; ++j) {
                int idx = static_cast<int>(std::floor((c[j] - part.root_lo[j]) / h));
                key[j] = std::clamp(idx, 0, cells_per_axis - 1);
            }
            buckets[key].push_back(s);
        }
        part.levels[level].reserve(buckets.size());
        for (auto& [coords, members] : buckets)
            part.levels[level].push_back(DyadicCell{coords, std::move(members)});
    }
    return part;
}

CellStats cell_stats(const TriangulatedSurface& M, const DyadicCell& cell, int level) {
    if (cell.simplices.empty()) throw EmptyCellError("cell holds no simplex centroids");
    std::vector<Complex> terms;
    std::vector<double> abs_terms;
    terms.reserve(cell.simplices.size());
    abs_terms.reserve(cell.simplices.size());
    for (int s : cell.simplices) {
        const Complex t = restricted_form_term(M, s);
        terms.push_back(t);
        abs_terms.push_back(std::hypot(t.real(), t.imag()));
    }
    CellStats out;
    out.cell_id = cell_id_string(level, cell.coords);
    out.count = static_cast<int>(cell.simplices.size());
    out.numerator = pairwise_sum(std::span<const Complex>(terms));
    out.denominator = pairwise_sum(std::span<const double>(abs_terms));
    const double num = std::hypot(out.numerator.real(), out.numerator.imag());
    out.ratio = out.denominator > 0.0 ? std::min(num / out.denominator, 1.0) : 0.0;
    return out;
}

double accretivity_ratio(const TriangulatedSurface& M, const DyadicCell& cell) {
    return cell_stats(M, cell, 0).ratio;
}

std::vector<CellStats> level_stats(const TriangulatedSurface& M,
                                   const std::vector<DyadicCell>& cells, int level) {
    std::vector<CellStats> out(cells.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(cells.size()); ++i) {
        try {
            out[i] = cell_stats(M, cells[i], level);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

AccretivityReport pseudo_accretivity_report(const TriangulatedSurface& M,
                                            const CellPartition& partition, double delta) {
    if (!(delta > 0.0) || delta > 1.0) throw ConfigError("delta must lie in (0, 1]");
    if (partition.levels.empty() || partition.levels[0].empty())
        throw ConfigError("empty cell partition");

    AccretivityReport rep;
    rep.delta = delta;
    rep.pass = true;
    for (int level = 0; level <= partition.depth; ++level) {
        LevelSummary summary;
        summary.level = level;
        summary.cells = level_stats(M, partition.levels[level], level);

        int below = 0;
        std::size_t argmin = 0;
        for (std::size_t i = 0; i < summary.cells.size(); ++i) {
            if (summary.cells[i].ratio < summary.cells[argmin].ratio) argmin = i;
            if (summary.cells[i].ratio < delta) ++below;
        }
        summary.min_ratio = summary.cells[argmin].ratio;
        summary.argmin_cell = summary.cells[argmin].cell_id;
        summary.below_delta_fraction = double(below) / double(summary.cells.size());
        if (summary.min_ratio < delta) rep.pass = false;
        rep.levels.push_back(std::move(summary));
    }
    return rep;
}

namespace serial {

std::vector<CellStats> level_stats(const TriangulatedSurface& M,
                                   const std::vector<DyadicCell>& cells, int level) {
    std::vector<CellStats> out;
    out.reserve(cells.size());
    for (const DyadicCell& cell : cells) out.push_back(cell_stats(M, cell, level));
    return out;
}

} // namespace serial

} // namespace trgeo
