#pragma once

#include <utility>
#include <vector>

#include "geocenter/domain.hpp"

namespace geocenter {

// Visibility graph over polygon vertices. Edge (i,j) present iff
// visible(v_i, v_j); weights are Euclidean lengths.
struct VisibilityGraph {
    int n = 0;
    std::vector<std::vector<std::pair<int, double>>> adj;

    bool has_edge(int i, int j) const {
        for (const auto& [k, w] : adj[i])
            if (k == j) return true;
        return false;
    }
    size_t edge_count() const {
        size_t c = 0;
        for (const auto& a : adj) c += a.size();
        return c / 2;
    }
};

// p visible to q: segment pq lies in the domain and its open interior
// contains no polygon vertex. Stricter than conventional visibility: a
// segment grazing through a vertex is not visible.
// Throws OutsideDomain if either point is outside.
bool visible(const PolygonalDomain& dom, Point p, Point q, const Tolerances& tol = {});

VisibilityGraph build_visibility_graph(const PolygonalDomain& dom, const Tolerances& tol = {});

// All polygon vertices visible from p.
std::vector<int> visible_vertices(const PolygonalDomain& dom, const VisibilityGraph& graph,
                                  Point p, const Tolerances& tol = {});

} // namespace geocenter
