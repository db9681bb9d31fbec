#pragma once

#include <array>
#include <utility>
#include <vector>

#include "geocenter/geodesic.hpp"

namespace geocenter {

struct FarthestPoint {
    Point point;
    double value = 0.0;
    PointLocation location;
    PivotSets pivots;
    bool degenerate = false; // more shortest paths than the location class needs
    bool obs10_ok = false;
};

struct FarthestReport {
    double dmax = 0.0;
    std::vector<FarthestPoint> farthest;
};

// A candidate local maximum of d(s,.) before farthest filtering; the raw
// material for both dmax_and_farthest and the candidate generators.
struct DistanceLocalMax {
    Point point;
    double value = 0.0;
    PointLocation location;
};

// All points t with w_i + |v_i t| equal across the three weighted sites
// (0, 1, or 2 solutions). Solved in closed form through the linearized
// three-circle system, then Newton-polished; Newton seeding is the fallback
// for collinear sites.
std::vector<Point> weighted_equidistant(const std::array<std::pair<Point, double>, 3>& sites,
                                        const Tolerances& tol = {});

// Candidate local maxima of d(s,.): polygon vertices, per-edge envelope
// maxima, and interior tri-equidistant points. Sorted by value, descending.
std::vector<DistanceLocalMax> distance_local_maxima(const PolygonalDomain& dom,
                                                    const VisibilityGraph& graph, Point s,
                                                    const Tolerances& tol = {});

FarthestReport dmax_and_farthest(const PolygonalDomain& dom, const VisibilityGraph& graph,
                                 Point s, const Tolerances& tol = {});

// Farthest-point pivot condition per location class.
bool obs10_check(const PolygonalDomain& dom, Point t, const PointLocation& location,
                 const PivotSets& pivots, const Tolerances& tol = {});

} // namespace geocenter
