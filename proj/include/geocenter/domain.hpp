#pragma once

#include <array>
#include <string>
#include <vector>

#include "geocenter/geom.hpp"

namespace geocenter {

// A polygonal domain: one outer boundary (stored CCW) plus disjoint hole
// polygons (stored CW). With this orientation the domain lies to the left of
// every directed boundary edge.
class PolygonalDomain {
public:
    PolygonalDomain(std::vector<Point> outer, std::vector<std::vector<Point>> holes,
                    const Tolerances& tol = {});

    const std::vector<Point>& outer() const { return outer_; }
    const std::vector<std::vector<Point>>& holes() const { return holes_; }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int hole_count() const { return static_cast<int>(holes_.size()); }

    Point vertex(int id) const { return vertices_[id]; }
    const std::vector<Point>& vertices() const { return vertices_; }

    // Directed boundary edges in ring order (outer first, then holes).
    struct Edge {
        int a = -1; // vertex ids
        int b = -1;
    };
    const std::vector<Edge>& edges() const { return edges_; }
    Point edge_point(int edge_id, double t) const;

    // Ring-neighbor vertex ids.
    int prev_vertex(int id) const { return prev_[id]; }
    int next_vertex(int id) const { return next_[id]; }

    std::array<Point, 2> bounding_box() const { return {bb_min_, bb_max_}; }
    double diameter_hint() const { return distance(bb_min_, bb_max_); }

private:
    std::vector<Point> outer_;
    std::vector<std::vector<Point>> holes_;
    std::vector<Point> vertices_;
    std::vector<Edge> edges_;
    std::vector<int> prev_, next_;
    Point bb_min_, bb_max_;
};

enum class LocationKind { Vertex, EdgeInterior, Interior, Outside };

struct PointLocation {
    LocationKind kind = LocationKind::Outside;
    int index = -1;     // vertex id or edge id
    double param = 0.0; // edge parameter in (0,1) for EdgeInterior
};

struct GeneralPositionReport {
    std::vector<std::array<int, 3>> collinear_triples;
    std::vector<std::array<int, 2>> multipath_pairs;
    bool multipath_checked = false;

    bool clean() const { return collinear_triples.empty() && multipath_pairs.empty(); }
};

// Parse and validate the JSON domain document:
//   {"outer": [[x,y],...], "holes": [[[x,y],...], ...]}
// Ring closure is implicit. Orientation is auto-corrected.
PolygonalDomain load_domain(const std::string& json_text, const Tolerances& tol = {});
std::string emit_domain(const PolygonalDomain& dom);

PointLocation classify(const PolygonalDomain& dom, Point p, const Tolerances& tol = {});

// Free directions of p: full for interior points, the closed interior-side
// half for edge points, the closed incident wedge for vertices.
// Throws OutsideDomain.
DirectionRange free_direction_range(const PolygonalDomain& dom, Point p,
                                    const Tolerances& tol = {});

// Collinearity part of the general-position report. The shortest-path
// uniqueness part is filled by the overload in geodesic.hpp once a
// visibility graph exists.
GeneralPositionReport check_general_position(const PolygonalDomain& dom,
                                             const Tolerances& tol = {});

} // namespace geocenter
