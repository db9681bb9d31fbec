#include "geocenter/visibility.hpp"

#include <algorithm>
#include <cmath>

namespace geocenter {

namespace {

// Signed distance of p from the line through a,b, scaled by |ab|.
double orient(Point a, Point b, Point p) { return cross(b - a, p - a); }

// Proper crossing: interiors of pq and ab intersect transversally.
bool properly_cross(Point p, Point q, Point a, Point b, double tol) {
    const double lab = distance(a, b);
    const double lpq = distance(p, q);
    const double o1 = orient(a, b, p) / lab;
    const double o2 = orient(a, b, q) / lab;
    const double o3 = orient(p, q, a) / lpq;
    const double o4 = orient(p, q, b) / lpq;
    return ((o1 > tol && o2 < -tol) || (o1 < -tol && o2 > tol)) &&
           ((o3 > tol && o4 < -tol) || (o3 < -tol && o4 > tol));
}

} // namespace

bool visible(const PolygonalDomain& dom, Point p, Point q, const Tolerances& tol) {
    if (classify(dom, p, tol).kind == LocationKind::Outside)
        throw OutsideDomain("visible: first point outside domain");
    if (classify(dom, q, tol).kind == LocationKind::Outside)
        throw OutsideDomain("visible: second point outside domain");

    const double len = distance(p, q);
    if (len <= tol.len) return true;

    // No polygon vertex may sit strictly inside the segment.
    std::vector<double> touch = {0.0, 1.0};
    for (int i = 0; i < dom.vertex_count(); ++i) {
        const Point v = dom.vertex(i);
        double t = 0.0;
        if (point_segment_distance(v, p, q, &t) <= tol.len) {
            const double along = t * len;
            if (along > tol.len && along < len - tol.len) return false;
            touch.push_back(t);
        }
    }

    // The segment must not cross any boundary edge properly, and the
    // midpoints of its pieces between boundary touch points must be inside.
    for (const auto& e : dom.edges()) {
        const Point a = dom.vertex(e.a), b = dom.vertex(e.b);
        if (properly_cross(p, q, a, b, tol.len)) return false;
        // Collinear overlap contributes touch interval endpoints.
        const double lab = distance(a, b);
        if (std::abs(orient(p, q, a)) / len <= tol.len &&
            std::abs(orient(p, q, b)) / len <= tol.len && lab > tol.len) {
            const Point d = q - p;
            touch.push_back(std::clamp(dot(a - p, d) / (len * len), 0.0, 1.0));
            touch.push_back(std::clamp(dot(b - p, d) / (len * len), 0.0, 1.0));
        }
    }
    std::sort(touch.begin(), touch.end());
    for (size_t i = 0; i + 1 < touch.size(); ++i) {
        if (touch[i + 1] - touch[i] <= tol.len / std::max(len, 1.0)) continue;
        const Point mid = p + (0.5 * (touch[i] + touch[i + 1])) * (q - p);
        if (classify(dom, mid, tol).kind == LocationKind::Outside) return false;
    }
    return true;
}

VisibilityGraph build_visibility_graph(const PolygonalDomain& dom, const Tolerances& tol) {
    const int n = dom.vertex_count();
    VisibilityGraph g;
    g.n = n;
    g.adj.resize(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (visible(dom, dom.vertex(i), dom.vertex(j), tol)) {
                const double w = distance(dom.vertex(i), dom.vertex(j));
                g.adj[i].push_back({j, w});
                g.adj[j].push_back({i, w});
            }
        }
    }
    return g;
}

std::vector<int> visible_vertices(const PolygonalDomain& dom, const VisibilityGraph&, Point p,
                                  const Tolerances& tol) {
    if (classify(dom, p, tol).kind == LocationKind::Outside)
        throw OutsideDomain("visible_vertices: point outside domain");
    std::vector<int> out;
    for (int i = 0; i < dom.vertex_count(); ++i) {
        if (distance(p, dom.vertex(i)) <= tol.len) continue;
        if (visible(dom, p, dom.vertex(i), tol)) out.push_back(i);
    }
    return out;
}

} // namespace geocenter
