#include "geocenter/farthest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "numerics.hpp"

namespace geocenter {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](Point a, Point b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    if (pts.size() < 3) return pts;
    std::vector<Point> h(2 * pts.size());
    size_t k = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    const size_t lower = k + 1;
    for (size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lower && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

bool strictly_inside_hull(const std::vector<Point>& hull, Point p, double tol) {
    if (hull.size() < 3) return false;
    for (size_t i = 0; i < hull.size(); ++i) {
        const Point a = hull[i];
        const Point b = hull[(i + 1) % hull.size()];
        if (cross(b - a, p - a) <= tol * distance(a, b)) return false;
    }
    return true;
}

// Newton refinement of the two equal-value residuals around a solution.
bool polish_equidistant(const std::array<std::pair<Point, double>, 3>& sites, Point* t,
                        double scale) {
    auto residual = [&](const std::vector<double>& x) {
        const Point p{x[0], x[1]};
        const double f1 = sites[0].second + distance(p, sites[0].first);
        const double f2 = sites[1].second + distance(p, sites[1].first);
        const double f3 = sites[2].second + distance(p, sites[2].first);
        return std::vector<double>{f1 - f2, f1 - f3};
    };
    std::vector<double> x{t->x, t->y};
    if (!num::newton_solve(residual, &x, 1e-13 * scale, 60)) return false;
    *t = {x[0], x[1]};
    return true;
}

} // namespace

std::vector<Point> weighted_equidistant(const std::array<std::pair<Point, double>, 3>& sites,
                                        const Tolerances& tol) {
    const Point v1 = sites[0].first, v2 = sites[1].first, v3 = sites[2].first;
    const double w1 = sites[0].second, w2 = sites[1].second, w3 = sites[2].second;
    if (distance(v1, v2) <= tol.len || distance(v1, v3) <= tol.len ||
        distance(v2, v3) <= tol.len)
        throw DegenerateInput("weighted_equidistant: coincident sites");

    double scale = 1.0;
    for (const auto& s : sites) scale = std::max({scale, std::abs(s.second), norm(s.first)});

    std::vector<Point> out;
    auto accept = [&](Point t) {
        if (!polish_equidistant(sites, &t, scale)) return;
        const double f1 = w1 + distance(t, v1);
        const double f2 = w2 + distance(t, v2);
        const double f3 = w3 + distance(t, v3);
        if (std::abs(f1 - f2) > 1e-10 * scale || std::abs(f1 - f3) > 1e-10 * scale) return;
        if (f1 + 1e-9 * scale < std::max({w1, w2, w3})) return;
        for (const Point& q : out)
            if (distance(q, t) <= 1e-8 * scale) return;
        out.push_back(t);
    };

    // Subtracting pairs of the circle equations |t-v_i|^2 = (rho-w_i)^2
    // leaves two equations linear in (t, rho).
    const double m11 = 2.0 * (v2.x - v1.x), m12 = 2.0 * (v2.y - v1.y);
    const double m21 = 2.0 * (v3.x - v1.x), m22 = 2.0 * (v3.y - v1.y);
    const double det = m11 * m22 - m12 * m21;
    if (std::abs(det) > 1e-12 * scale * scale) {
        const double c1 = dot(v2, v2) - dot(v1, v1) + w1 * w1 - w2 * w2;
        const double c2 = dot(v3, v3) - dot(v1, v1) + w1 * w1 - w3 * w3;
        const double d1 = 2.0 * (w2 - w1); // coefficient of rho moved right
        const double d2 = 2.0 * (w3 - w1);
        // t = p + rho*q
        const Point p{(c1 * m22 - c2 * m12) / det, (m11 * c2 - m21 * c1) / det};
        const Point q{(d1 * m22 - d2 * m12) / det, (m11 * d2 - m21 * d1) / det};
        const double a = dot(q, q) - 1.0;
        const double b = 2.0 * dot(q, p - v1) + 2.0 * w1;
        const double c = dot(p - v1, p - v1) - w1 * w1;
        if (std::abs(a) < 1e-14) {
            if (std::abs(b) > 1e-14) accept(p + (-c / b) * q);
        } else {
            const double disc = b * b - 4.0 * a * c;
            if (disc >= 0.0) {
                const double sq = std::sqrt(disc);
                accept(p + ((-b + sq) / (2.0 * a)) * q);
                accept(p + ((-b - sq) / (2.0 * a)) * q);
            }
        }
        return out;
    }

    // Collinear sites: fall back to Newton from a fan of seeds.
    const Point centroid = (1.0 / 3.0) * (v1 + v2 + v3);
    const double spread = std::max({distance(v1, v2), distance(v1, v3), 1e-3});
    const Point dir = (1.0 / distance(v1, v3)) * (v3 - v1);
    const Point perp{-dir.y, dir.x};
    for (double base : {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0}) {
        for (const Point anchor : {centroid, v1, v2, v3}) {
            accept(anchor + (base * spread) * perp);
        }
    }
    return out;
}

namespace {

// Parameters in (0,1) where the visible-vertex set of a point moving on the
// edge (a,b) changes: sight lines to any target grazing a polygon vertex.
std::vector<double> edge_visibility_events(const PolygonalDomain& dom, Point a, Point b, Point s) {
    std::vector<double> ev = {0.0, 1.0};
    std::vector<Point> targets = dom.vertices();
    targets.push_back(s);
    for (const Point& x : targets) {
        for (int w = 0; w < dom.vertex_count(); ++w) {
            const Point pw = dom.vertex(w);
            if (distance(pw, x) <= 1e-12) continue;
            const double c1 = cross(x - pw, b - a);
            const double c0 = cross(x - pw, a - pw);
            if (std::abs(c1) < 1e-14) continue;
            const double lam = -c0 / c1;
            if (lam <= 1e-10 || lam >= 1.0 - 1e-10) continue;
            const Point t = a + lam * (b - a);
            // blocker strictly between the moving point and the target
            if (dot(pw - t, x - t) > 0 && distance(pw, t) < distance(x, t) - 1e-12) {
                ev.push_back(lam);
            }
        }
    }
    std::sort(ev.begin(), ev.end());
    ev.erase(std::unique(ev.begin(), ev.end(),
                         [](double p, double q) { return std::abs(p - q) < 1e-12; }),
             ev.end());
    return ev;
}

} // namespace

std::vector<DistanceLocalMax> distance_local_maxima(const PolygonalDomain& dom,
                                                    const VisibilityGraph& graph, Point s,
                                                    const Tolerances& tol) {
    const DistanceField field = make_distance_field(dom, graph, s, tol);
    const int n = dom.vertex_count();
    std::vector<DistanceLocalMax> out;

    // (a) polygon vertices
    for (int i = 0; i < n; ++i) {
        if (!std::isfinite(field.vertex_dist[i])) continue;
        out.push_back({dom.vertex(i), field.vertex_dist[i], {LocationKind::Vertex, i, 0.0}});
    }

    // (b) per-edge maxima of the distance envelope
    for (size_t e = 0; e < dom.edges().size(); ++e) {
        const Point a = dom.vertex(dom.edges()[e].a);
        const Point b = dom.vertex(dom.edges()[e].b);
        const auto events = edge_visibility_events(dom, a, b, s);
        for (size_t k = 0; k + 1 < events.size(); ++k) {
            const double lo = events[k], hi = events[k + 1];
            if (hi - lo < 1e-11) continue;
            const double mid = 0.5 * (lo + hi);
            const Point tm = a + mid * (b - a);
            // active envelope branches on this event-free piece
            std::vector<std::pair<int, double>> active;
            for (int i = 0; i < n; ++i) {
                if (!std::isfinite(field.vertex_dist[i])) continue;
                if (distance(tm, dom.vertex(i)) <= tol.len) continue;
                if (visible(dom, tm, dom.vertex(i), tol)) active.push_back({i, 0.0});
            }
            const bool direct = visible(dom, tm, s, tol);
            if (active.empty() && !direct) continue;
            auto f = [&](double lam) {
                const Point t = a + lam * (b - a);
                double best = direct ? distance(s, t) : kInf;
                for (const auto& [i, unused] : active) {
                    best = std::min(best, field.vertex_dist[i] + distance(dom.vertex(i), t));
                }
                return best;
            };
            const int M = 33;
            std::vector<double> lam(M), val(M);
            for (int i = 0; i < M; ++i) {
                lam[i] = lo + (hi - lo) * i / (M - 1);
                val[i] = f(lam[i]);
            }
            for (int i = 0; i < M; ++i) {
                const bool up = i == 0 || val[i] >= val[i - 1];
                const bool down = i == M - 1 || val[i] >= val[i + 1];
                if (!(up && down)) continue;
                const double blo = lam[std::max(0, i - 1)];
                const double bhi = lam[std::min(M - 1, i + 1)];
                double arg = lam[i];
                if (bhi > blo) num::golden_section_max(f, blo, bhi, &arg);
                if (arg <= 1e-9 || arg >= 1.0 - 1e-9) continue;
                const Point t = a + arg * (b - a);
                const double exact = eval_distance(dom, field, t, tol);
                out.push_back({t, exact, {LocationKind::EdgeInterior, static_cast<int>(e), arg}});
            }
        }
    }

    // (c) interior tri-equidistant points
    const double scale = 1.0 + dom.diameter_hint();
    for (int i = 0; i < n; ++i) {
        if (!std::isfinite(field.vertex_dist[i])) continue;
        for (int j = i + 1; j < n; ++j) {
            if (!std::isfinite(field.vertex_dist[j])) continue;
            for (int k = j + 1; k < n; ++k) {
                if (!std::isfinite(field.vertex_dist[k])) continue;
                const Point vi = dom.vertex(i), vj = dom.vertex(j), vk = dom.vertex(k);
                if (std::abs(cross(vj - vi, vk - vi)) < 1e-12 * scale * scale) continue;
                std::array<std::pair<Point, double>, 3> sites{
                    std::pair{vi, field.vertex_dist[i]}, std::pair{vj, field.vertex_dist[j]},
                    std::pair{vk, field.vertex_dist[k]}};
                std::vector<Point> sols;
                try {
                    sols = weighted_equidistant(sites, tol);
                } catch (const DegenerateInput&) {
                    continue;
                }
                for (const Point& t : sols) {
                    if (classify(dom, t, tol).kind != LocationKind::Interior) continue;
                    if (!visible(dom, t, vi, tol) || !visible(dom, t, vj, tol) ||
                        !visible(dom, t, vk, tol))
                        continue;
                    const double v = field.vertex_dist[i] + distance(vi, t);
                    const double exact = eval_distance(dom, field, t, tol);
                    if (std::abs(exact - v) > 1e-9 * scale) continue;
                    // conservative local-maximum filter on a small circle
                    const double r = 10.0 * tol.len * std::max(1.0, v);
                    bool is_max = true;
                    for (int dir = 0; dir < 16 && is_max; ++dir) {
                        const double th = kTwoPi * dir / 16.0;
                        const Point q = t + Point{r * std::cos(th), r * std::sin(th)};
                        if (classify(dom, q, tol).kind == LocationKind::Outside) continue;
                        if (eval_distance(dom, field, q, tol) > v + 1e-12 * scale) is_max = false;
                    }
                    if (!is_max) continue;
                    out.push_back({t, v, {LocationKind::Interior, -1, 0.0}});
                }
            }
        }
    }

    std::sort(out.begin(), out.end(), [](const DistanceLocalMax& a, const DistanceLocalMax& b) {
        return a.value > b.value;
    });
    // spatial dedupe, keeping the larger value
    std::vector<DistanceLocalMax> dedup;
    for (const auto& c : out) {
        bool dup = false;
        for (const auto& kept : dedup) {
            if (distance(kept.point, c.point) <= 1e-7 * scale) {
                dup = true;
                break;
            }
        }
        if (!dup) dedup.push_back(c);
    }
    return dedup;
}

bool obs10_check(const PolygonalDomain& dom, Point t, const PointLocation& location,
                 const PivotSets& pivots, const Tolerances& tol) {
    switch (location.kind) {
    case LocationKind::Vertex:
        return true;
    case LocationKind::Outside:
        return false;
    case LocationKind::EdgeInterior: {
        if (pivots.t_pivots.size() < 2) return false;
        const auto& e = dom.edges()[location.index];
        const Point a = dom.vertex(e.a), b = dom.vertex(e.b);
        const Point ehat = (1.0 / distance(a, b)) * (b - a);
        const Point nhat{-ehat.y, ehat.x}; // interior side (domain is left)
        bool interior_side = false, fwd = false, bwd = false;
        for (int v : pivots.t_pivots) {
            const Point d = dom.vertex(v) - t;
            if (dot(d, nhat) > tol.len) interior_side = true;
            if (dot(d, ehat) > tol.len) fwd = true;
            if (dot(d, ehat) < -tol.len) bwd = true;
        }
        return interior_side && fwd && bwd;
    }
    case LocationKind::Interior: {
        if (pivots.t_pivots.size() < 3) return false;
        std::vector<Point> pts;
        for (int v : pivots.t_pivots) pts.push_back(dom.vertex(v));
        return strictly_inside_hull(convex_hull(pts), t, tol.len);
    }
    }
    return false;
}

FarthestReport dmax_and_farthest(const PolygonalDomain& dom, const VisibilityGraph& graph,
                                 Point s, const Tolerances& tol) {
    if (classify(dom, s, tol).kind == LocationKind::Outside)
        throw OutsideDomain("dmax_and_farthest: source outside domain");
    const auto cands = distance_local_maxima(dom, graph, s, tol);
    FarthestReport rep;
    if (cands.empty()) return rep;
    rep.dmax = cands.front().value;
    const double atol = std::max(tol.len, 1e-9 * (1.0 + rep.dmax));
    for (const auto& c : cands) {
        if (c.value < rep.dmax - atol) break;
        FarthestPoint fp;
        fp.point = c.point;
        fp.value = c.value;
        fp.location = c.location;
        fp.pivots = pivot_sets(dom, graph, s, c.point, tol);
        int required = 0;
        switch (c.location.kind) {
        case LocationKind::Interior: required = 3; break;
        case LocationKind::EdgeInterior: required = 2; break;
        case LocationKind::Vertex: required = 1; break;
        default: required = 0; break;
        }
        fp.degenerate = fp.pivots.path_count != required;
        fp.obs10_ok = obs10_check(dom, c.point, c.location, fp.pivots, tol);
        rep.farthest.push_back(std::move(fp));
    }
    return rep;
}

} // namespace geocenter
