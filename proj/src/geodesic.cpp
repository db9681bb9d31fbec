#include "geocenter/geodesic.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace geocenter {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_in_domain(const PolygonalDomain& dom, Point p, const Tolerances& tol,
                     const char* what) {
    if (classify(dom, p, tol).kind == LocationKind::Outside)
        throw OutsideDomain(std::string(what) + ": point outside domain");
}

std::vector<double> dijkstra(const std::vector<std::vector<std::pair<int, double>>>& adj,
                             int source) {
    const int n = static_cast<int>(adj.size());
    std::vector<double> dist(n, kInf);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[source] = 0.0;
    pq.push({0.0, source});
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d > dist[u]) continue;
        for (const auto& [v, w] : adj[u]) {
            if (d + w < dist[v]) {
                dist[v] = d + w;
                pq.push({dist[v], v});
            }
        }
    }
    return dist;
}

// Adjacency over polygon vertices plus the two query points s (=n) and
// t (=n+1). Vertices coincident with a query point are dropped from its
// star so ties are not double counted.
struct AugmentedGraph {
    std::vector<std::vector<std::pair<int, double>>> adj;
    int s_id, t_id;
};

AugmentedGraph augment(const PolygonalDomain& dom, const VisibilityGraph& graph, Point s, Point t,
                       const Tolerances& tol) {
    const int n = dom.vertex_count();
    AugmentedGraph ag;
    ag.s_id = n;
    ag.t_id = n + 1;
    ag.adj.resize(n + 2);
    for (int i = 0; i < n; ++i) ag.adj[i] = graph.adj[i];
    auto attach = [&](int node, Point p) {
        for (int i = 0; i < n; ++i) {
            if (distance(p, dom.vertex(i)) <= tol.len) continue;
            if (visible(dom, p, dom.vertex(i), tol)) {
                const double w = distance(p, dom.vertex(i));
                ag.adj[node].push_back({i, w});
                ag.adj[i].push_back({node, w});
            }
        }
    };
    attach(ag.s_id, s);
    attach(ag.t_id, t);
    if (distance(s, t) > tol.len && visible(dom, s, t, tol)) {
        const double w = distance(s, t);
        ag.adj[ag.s_id].push_back({ag.t_id, w});
        ag.adj[ag.t_id].push_back({ag.s_id, w});
    }
    return ag;
}

} // namespace

double geodesic_distance(const PolygonalDomain& dom, const VisibilityGraph& graph, Point s,
                         Point t, const Tolerances& tol) {
    check_in_domain(dom, s, tol, "distance");
    check_in_domain(dom, t, tol, "distance");
    if (distance(s, t) <= tol.len) return 0.0;
    if (visible(dom, s, t, tol)) return distance(s, t);
    const DistanceField field = make_distance_field(dom, graph, s, tol);
    return eval_distance(dom, field, t, tol);
}

std::vector<GeodesicPath> all_shortest_paths(const PolygonalDomain& dom,
                                             const VisibilityGraph& graph, Point s, Point t,
                                             double rel_tol, int cap, const Tolerances& tol) {
    check_in_domain(dom, s, tol, "all_shortest_paths");
    check_in_domain(dom, t, tol, "all_shortest_paths");
    if (distance(s, t) <= tol.len) {
        GeodesicPath p;
        p.waypoints = {s, t};
        p.vertex_ids = {-1, -1};
        p.length = distance(s, t);
        return {p};
    }
    const AugmentedGraph ag = augment(dom, graph, s, t, tol);
    const auto ds = dijkstra(ag.adj, ag.s_id);
    const auto dt = dijkstra(ag.adj, ag.t_id);
    const double d = ds[ag.t_id];
    if (!std::isfinite(d)) throw Error("all_shortest_paths: disconnected query");
    const double slack = std::max(tol.len, rel_tol * d);

    // DFS over edges on near-optimal s-t paths.
    std::vector<GeodesicPath> out;
    std::vector<int> stack = {ag.s_id};
    std::vector<bool> on_path(ag.adj.size(), false);
    on_path[ag.s_id] = true;

    auto emit = [&](const std::vector<int>& nodes) {
        GeodesicPath p;
        double len = 0.0;
        for (size_t i = 0; i < nodes.size(); ++i) {
            const int id = nodes[i];
            const Point pt = id == ag.s_id ? s : id == ag.t_id ? t : dom.vertex(id);
            if (i > 0) len += distance(p.waypoints.back(), pt);
            p.waypoints.push_back(pt);
            p.vertex_ids.push_back(id < dom.vertex_count() ? id : -1);
        }
        p.length = len;
        if (len <= d * (1.0 + rel_tol) + tol.len) {
            out.push_back(std::move(p));
            if (static_cast<int>(out.size()) > cap)
                throw PathExplosion("all_shortest_paths: too many tied paths");
        }
    };

    // Iterative DFS with explicit neighbor cursors.
    std::vector<size_t> cursor = {0};
    while (!stack.empty()) {
        const int u = stack.back();
        if (u == ag.t_id) {
            emit(stack);
            on_path[u] = false;
            stack.pop_back();
            cursor.pop_back();
            continue;
        }
        bool advanced = false;
        while (cursor.back() < ag.adj[u].size()) {
            const auto [v, w] = ag.adj[u][cursor.back()];
            ++cursor.back();
            if (on_path[v]) continue;
            if (ds[u] + w + dt[v] <= d + slack) {
                stack.push_back(v);
                cursor.push_back(0);
                on_path[v] = true;
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            on_path[u] = false;
            stack.pop_back();
            cursor.pop_back();
        }
    }

    std::sort(out.begin(), out.end(), [](const GeodesicPath& a, const GeodesicPath& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.vertex_ids < b.vertex_ids;
    });
    return out;
}

PivotSets pivot_sets(const PolygonalDomain& dom, const VisibilityGraph& graph, Point s, Point t,
                     const Tolerances& tol) {
    const auto paths = all_shortest_paths(dom, graph, s, t, 1e-9, 64, tol);
    PivotSets ps;
    ps.path_count = static_cast<int>(paths.size());
    for (const auto& p : paths) {
        if (p.direct()) continue;
        const int u = p.vertex_ids[1];
        const int v = p.vertex_ids[p.vertex_ids.size() - 2];
        if (std::find(ps.s_pivots.begin(), ps.s_pivots.end(), u) == ps.s_pivots.end())
            ps.s_pivots.push_back(u);
        if (std::find(ps.t_pivots.begin(), ps.t_pivots.end(), v) == ps.t_pivots.end())
            ps.t_pivots.push_back(v);
        const std::pair<int, int> c{u, v};
        if (std::find(ps.couples.begin(), ps.couples.end(), c) == ps.couples.end())
            ps.couples.push_back(c);
    }
    std::sort(ps.s_pivots.begin(), ps.s_pivots.end());
    std::sort(ps.t_pivots.begin(), ps.t_pivots.end());
    std::sort(ps.couples.begin(), ps.couples.end());
    return ps;
}

DistanceField make_distance_field(const PolygonalDomain& dom, const VisibilityGraph& graph,
                                  Point s, const Tolerances& tol) {
    check_in_domain(dom, s, tol, "make_distance_field");
    const int n = dom.vertex_count();
    std::vector<std::vector<std::pair<int, double>>> adj(n + 1);
    for (int i = 0; i < n; ++i) adj[i] = graph.adj[i];
    DistanceField f;
    f.source = s;
    int coincident = -1;
    for (int i = 0; i < n; ++i) {
        if (distance(s, dom.vertex(i)) <= tol.len) {
            coincident = i;
            break;
        }
    }
    if (coincident >= 0) {
        // Source sits on a vertex: inherit its star.
        for (const auto& [j, w] : graph.adj[coincident]) {
            adj[n].push_back({j, w});
            adj[j].push_back({n, w});
            f.source_visible.push_back(j);
        }
    } else {
        for (int i = 0; i < n; ++i) {
            if (visible(dom, s, dom.vertex(i), tol)) {
                const double w = distance(s, dom.vertex(i));
                adj[n].push_back({i, w});
                adj[i].push_back({n, w});
                f.source_visible.push_back(i);
            }
        }
    }
    auto dist = dijkstra(adj, n);
    f.vertex_dist.assign(dist.begin(), dist.begin() + n);
    if (coincident >= 0) f.vertex_dist[coincident] = 0.0;
    return f;
}

double eval_distance_with_vis(const PolygonalDomain& dom, const DistanceField& field, Point t,
                              const std::vector<std::pair<int, double>>& vis_of_t,
                              bool check_direct, const Tolerances& tol) {
    double best = kInf;
    for (const auto& [v, len] : vis_of_t) {
        const double c = field.vertex_dist[v] + len;
        if (c < best) best = c;
    }
    if (check_direct) {
        const double direct = distance(field.source, t);
        if (direct < best && visible(dom, field.source, t, tol)) best = direct;
    }
    return best;
}

double eval_distance(const PolygonalDomain& dom, const DistanceField& field, Point t,
                     const Tolerances& tol) {
    if (distance(field.source, t) <= tol.len) return 0.0;
    std::vector<std::pair<int, double>> vis;
    for (int i = 0; i < dom.vertex_count(); ++i) {
        const double len = distance(t, dom.vertex(i));
        if (len <= tol.len) {
            vis.push_back({i, 0.0});
            continue;
        }
        if (visible(dom, t, dom.vertex(i), tol)) vis.push_back({i, len});
    }
    return eval_distance_with_vis(dom, field, t, vis, true, tol);
}

GeodesicTables build_geodesic_tables(const PolygonalDomain& dom, const VisibilityGraph& graph) {
    GeodesicTables t;
    const int n = dom.vertex_count();
    t.vertex_dist.resize(n);
    for (int i = 0; i < n; ++i) t.vertex_dist[i] = dijkstra(graph.adj, i);
    return t;
}

GeneralPositionReport check_general_position(const PolygonalDomain& dom,
                                             const VisibilityGraph& graph,
                                             const Tolerances& tol) {
    GeneralPositionReport rep = check_general_position(dom, tol);
    rep.multipath_checked = true;
    const int n = dom.vertex_count();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const auto paths =
                all_shortest_paths(dom, graph, dom.vertex(i), dom.vertex(j), 0.0, 64, tol);
            if (paths.size() > 1) rep.multipath_pairs.push_back({i, j});
        }
    }
    return rep;
}

} // namespace geocenter
