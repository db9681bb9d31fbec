#pragma once

#include <optional>
#include <vector>

#include "geocenter/visibility.hpp"

namespace geocenter {

// A shortest s-t path: waypoints s, u_1, ..., u_{k-1}, t with the interior
// waypoints being polygon vertices.
struct GeodesicPath {
    std::vector<Point> waypoints;
    std::vector<int> vertex_ids; // parallel to waypoints; -1 for s and t
    double length = 0.0;

    bool direct() const { return waypoints.size() == 2; }
};

struct PivotSets {
    std::vector<int> s_pivots;                  // U_s(t)
    std::vector<int> t_pivots;                  // U_t(s)
    std::vector<std::pair<int, int>> couples;   // (s-pivot, t-pivot) per path
    int path_count = 0;

    bool empty() const { return couples.empty(); }
};

// Geodesic distance via Dijkstra on the visibility graph augmented with s,t.
double geodesic_distance(const PolygonalDomain& dom, const VisibilityGraph& graph, Point s,
                         Point t, const Tolerances& tol = {});

// Every s-t path with length <= (1+rel_tol)*d(s,t), from the tight-edge DAG
// of the Dijkstra distance field. Throws PathExplosion past `cap` paths.
std::vector<GeodesicPath> all_shortest_paths(const PolygonalDomain& dom,
                                             const VisibilityGraph& graph, Point s, Point t,
                                             double rel_tol = 1e-9, int cap = 64,
                                             const Tolerances& tol = {});

PivotSets pivot_sets(const PolygonalDomain& dom, const VisibilityGraph& graph, Point s, Point t,
                     const Tolerances& tol = {});

// Distances from a fixed source to every polygon vertex; supports cheap
// evaluation of d(source, t) for many targets.
struct DistanceField {
    Point source;
    std::vector<double> vertex_dist; // +inf where unreachable
    std::vector<int> source_visible; // vertices visible from source
};

DistanceField make_distance_field(const PolygonalDomain& dom, const VisibilityGraph& graph,
                                  Point s, const Tolerances& tol = {});

// d(source, t). When the visible vertex list of t is already known it can be
// passed to skip the visibility scan.
double eval_distance(const PolygonalDomain& dom, const DistanceField& field, Point t,
                     const Tolerances& tol = {});
double eval_distance_with_vis(const PolygonalDomain& dom, const DistanceField& field, Point t,
                              const std::vector<std::pair<int, double>>& vis_of_t,
                              bool check_direct, const Tolerances& tol = {});

// All vertex-to-vertex geodesic distances.
struct GeodesicTables {
    std::vector<std::vector<double>> vertex_dist;
};
GeodesicTables build_geodesic_tables(const PolygonalDomain& dom, const VisibilityGraph& graph);

// Full general-position report: collinear triples plus vertex pairs with
// more than one shortest path.
GeneralPositionReport check_general_position(const PolygonalDomain& dom,
                                             const VisibilityGraph& graph,
                                             const Tolerances& tol = {});

} // namespace geocenter
