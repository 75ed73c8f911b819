#ifndef TRGEO_ACCRETIVITY_HPP
#define TRGEO_ACCRETIVITY_HPP

#include "trgeo/surface.hpp"
#include "trgeo/types.hpp"

#include <string>
#include <vector>

namespace trgeo {

// One dyadic cube at some level, identified by its per-axis integer
// coordinates in R^{2m}, owning the simplices whose centroids fall in it.
struct DyadicCell {
    std::vector<int> coords;
    std::vector<int> simplices;
};

// Ambient dyadic-cube hierarchy over the bounding cube of M (expanded by
// 1%). Membership is by simplex centroid, so cell sums stay exactly
// consistent with the global restricted-form integral.
struct CellPartition {
    RealVector root_lo; // corner of the root cube, 2m coordinates
    double root_size = 0.0;
    int depth = 0;
    std::vector<std::vector<DyadicCell>> levels; // levels[l], cells sorted by coords
};

struct CellStats {
    std::string cell_id;
    int count = 0;
    Complex numerator;        // localized integral of the restricted form
    double denominator = 0.0; // localized integral of its absolute value
    double ratio = 0.0;
};

struct LevelSummary {
    int level = 0;
    std::vector<CellStats> cells;
    double min_ratio = 0.0;
    std::string argmin_cell;
    double below_delta_fraction = 0.0; // para-accretivity flavored statistic
};

struct AccretivityReport {
    double delta = 0.0;
    bool pass = false; // min ratio >= delta at every level
    std::vector<LevelSummary> levels;
};

CellPartition build_dyadic_cells(const TriangulatedSurface& M, int depth);

/* |sum over the cell of sign * det/m!| / sum of |det|/m|: how much of the
   restricted volume form survives cancellation over the cell. 1 on
   constant-phase (e.g. flat Lagrangian) pieces, 0 on a full circle. A
   cell whose denominator vanishes (complex-degenerate tangents) reports
   ratio 0: there is no mass to bound from below. */
double accretivity_ratio(const TriangulatedSurface& M, const DyadicCell& cell);

CellStats cell_stats(const TriangulatedSurface& M, const DyadicCell& cell, int level);

AccretivityReport pseudo_accretivity_report(const TriangulatedSurface& M,
                                            const CellPartition& partition, double delta);

namespace serial {
// Reference per-level sweep kept for testing the OpenMP kernel.
std::vector<CellStats> level_stats(const TriangulatedSurface& M,
                                   const std::vector<DyadicCell>& cells, int level);
} // namespace serial

std::vector<CellStats> level_stats(const TriangulatedSurface& M,
                                   const std::vector<DyadicCell>& cells, int level);

} // namespace trgeo

#endif
