#include "geocenter/pirange.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace geocenter {

namespace {

// Cyclic gap from x to y going counterclockwise, with near-full gaps
// collapsed to zero (coincident directions).
double ccw_gap(double x, double y, double eps = 1e-9) {
    const double g = normalize_angle(y - x);
    return g > kTwoPi - eps ? 0.0 : g;
}

} // namespace

PathDerivatives path_derivatives(const PathDerivativeInput& in, const Tolerances& tol) {
    if (distance(in.s, in.u) <= tol.len || distance(in.t, in.v) <= tol.len)
        throw DegenerateInput("path_derivatives: coincident pivot");
    if (in.tau < 0.0) throw DegenerateInput("path_derivatives: negative speed ratio");
    const double cs = std::cos(in.r_s - angle_of(in.u, in.s, tol));
    const double ct = std::cos(in.r_t - angle_of(in.v, in.t, tol));
    PathDerivatives d;
    d.first = cs + in.tau * ct;
    d.second = (1.0 - cs * cs) / distance(in.s, in.u) +
               in.tau * (1.0 - ct * ct) / distance(in.t, in.v);
    return d;
}

PiRangeResult pi_range_vertex(Point s, Point u, const Tolerances& tol) {
    PiRangeResult r;
    r.range = DirectionRange::half_plane(angle_of(s, u, tol));
    r.special = false;
    return r;
}

PiRangeResult pi_range_edge(double alpha1, double alpha2, double beta1, double beta2,
                            double eps_special) {
    if (beta1 < -1e-9 || beta1 >= kPi / 2.0 || beta2 <= kPi / 2.0 || beta2 > kPi + 1e-9)
        throw PreconditionViolated("pi_range_edge: beta angles out of range");
    if (beta1 <= 1e-12 && beta2 >= kPi - 1e-12)
        throw PreconditionViolated("pi_range_edge: both pivots on the edge line");

    const double alpha = alpha2 - alpha1;
    const double sa = std::sin(alpha);
    const double lambda = std::cos(alpha) - std::cos(beta2) / std::cos(beta1);

    PiRangeResult r;
    r.diagnostics = EdgeCaseScalars{alpha1, alpha2, beta1, beta2, wrap_to_pi(alpha), lambda};
    if (std::abs(sa) <= eps_special && std::abs(lambda) <= eps_special) {
        r.range = DirectionRange::empty();
        r.special = true;
        return r;
    }
    if (sa > eps_special) {
        const double a = alpha1 - std::atan(lambda / sa);
        r.range = DirectionRange::interval(a, kPi, true, true);
    } else if (sa < -eps_special) {
        const double a = alpha1 - std::atan(lambda / sa);
        r.range = DirectionRange::interval(a - kPi, kPi, true, true);
    } else if (lambda > 0.0) {
        r.range = DirectionRange::interval(alpha1 - kPi / 2.0, kPi, true, true);
    } else {
        r.range = DirectionRange::interval(alpha1 - 3.0 * kPi / 2.0, kPi, true, true);
    }
    return r;
}

PiRangeResult pi_range_interior(const std::array<double, 3>& alpha,
                                const std::array<double, 3>& beta, double eps_special) {
    std::array<double, 3> b{};
    for (int i = 0; i < 3; ++i) b[i] = normalize_angle(beta[i] - beta[(i + 1) % 3]);
    const double bsum = b[0] + b[1] + b[2];
    for (int i = 0; i < 3; ++i) {
        if (b[i] <= 1e-9 || b[i] >= kPi - 1e-9)
            throw PreconditionViolated("pi_range_interior: clockwise beta gap outside (0,pi)");
    }
    if (std::abs(bsum - kTwoPi) > 1e-6)
        throw PreconditionViolated("pi_range_interior: beta gaps do not wrap once");

    const double d21 = alpha[1] - alpha[0], d31 = alpha[2] - alpha[0];
    const double e21 = beta[1] - beta[0], e31 = beta[2] - beta[0];
    const double delta = std::sin(d31) / std::sin(e31) - std::sin(d21) / std::sin(e21);
    const double delta1 = (std::cos(e21) - std::cos(d21)) / std::sin(e21);
    const double delta2 = (std::cos(e31) - std::cos(d31)) / std::sin(e31);

    InteriorCaseScalars diag;
    diag.alpha = alpha;
    diag.beta = beta;
    diag.b = b;
    for (int i = 0; i < 3; ++i) diag.a[i] = ccw_gap(alpha[i], alpha[(i + 1) % 3]);
    diag.delta = delta;
    diag.delta1 = delta1;
    diag.delta2 = delta2;

    PiRangeResult r;
    r.diagnostics = diag;
    if (std::abs(delta) <= eps_special && std::abs(delta1 - delta2) <= eps_special) {
        r.range = DirectionRange::empty();
        r.special = true;
        return r;
    }
    if (delta > eps_special) {
        const double a = alpha[0] - std::atan((delta1 - delta2) / delta);
        r.range = DirectionRange::interval(a, kPi, true, true);
    } else if (delta < -eps_special) {
        const double a = alpha[0] - std::atan((delta1 - delta2) / delta);
        r.range = DirectionRange::interval(a - kPi, kPi, true, true);
    } else if (delta1 > delta2) {
        r.range = DirectionRange::interval(alpha[0] - kPi / 2.0, kPi, true, true);
    } else {
        r.range = DirectionRange::interval(alpha[0] - 3.0 * kPi / 2.0, kPi, true, true);
    }
    return r;
}

CanonicalInterior canonicalize_interior(Point s, Point t,
                                        std::array<std::pair<Point, Point>, 3> couples,
                                        const Tolerances& tol) {
    for (int i = 0; i < 3; ++i) {
        if (distance(couples[i].second, t) <= tol.len || distance(couples[i].first, s) <= tol.len)
            throw PreconditionViolated("canonicalize_interior: pivot coincides with endpoint");
        for (int j = i + 1; j < 3; ++j) {
            if (distance(couples[i].second, couples[j].second) <= tol.len)
                throw PreconditionViolated("canonicalize_interior: repeated t-pivot");
        }
    }
    // t strictly inside the pivot triangle
    {
        const Point v1 = couples[0].second, v2 = couples[1].second, v3 = couples[2].second;
        const double o = cross(v2 - v1, v3 - v1);
        if (std::abs(o) < 1e-12)
            throw PreconditionViolated("canonicalize_interior: collinear t-pivots");
        const double s1 = cross(v2 - v1, t - v1) * o;
        const double s2 = cross(v3 - v2, t - v2) * o;
        const double s3 = cross(v1 - v3, t - v3) * o;
        if (s1 <= 0 || s2 <= 0 || s3 <= 0)
            throw PreconditionViolated("canonicalize_interior: t not inside pivot triangle");
    }

    // Order the t-pivots clockwise around t (decreasing angle cyclically).
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int i, int j) {
        return angle_of(t, couples[i].second, tol) > angle_of(t, couples[j].second, tol);
    });
    // Pick the rotation starting at the original first couple for determinism.
    while (idx[0] != 0) std::rotate(idx.begin(), idx.begin() + 1, idx.end());

    CanonicalInterior out;
    for (int i = 0; i < 3; ++i) {
        out.couples[i] = couples[idx[i]];
        out.alpha[i] = angle_of(s, out.couples[i].first, tol);
        out.beta[i] = angle_of(t, out.couples[i].second, tol);
    }
    // s-pivots must run counterclockwise: their ccw gaps wrap exactly once
    // (or all coincide).
    double asum = 0.0;
    for (int i = 0; i < 3; ++i) asum += ccw_gap(out.alpha[i], out.alpha[(i + 1) % 3], 1e-9);
    if (!(std::abs(asum) < 1e-6 || std::abs(asum - kTwoPi) < 1e-6))
        throw NotCanonical("canonicalize_interior: s-pivots not counterclockwise");
    return out;
}

namespace {

struct HalfPlaneConstraint {
    Point e;  // unit normal (w . e > b)
    double b;
};

// Feasibility of {w : w . e_i > b_i} in the plane. Exact up to tolerance by
// the transposition theorem: infeasible iff nonneg multipliers with support
// of size <= 3 cancel the normals while keeping the offsets nonnegative.
bool open_halfplanes_feasible(const std::vector<HalfPlaneConstraint>& cons) {
    const int k = static_cast<int>(cons.size());
    if (k == 0) return true;
    bool all_negative = true;
    for (const auto& c : cons)
        if (c.b >= 0.0) all_negative = false;
    if (all_negative) return true; // w = 0
    // Antiparallel pairs.
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (dot(cons[i].e, cons[j].e) <= -1.0 + 1e-12) {
                if (cons[i].b + cons[j].b >= -1e-12) return false;
            }
        }
    }
    // Triples whose normals positively span the plane.
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            for (int m = j + 1; m < k; ++m) {
                if (j == i || m == i) continue;
                const double det = cross(cons[j].e, cons[m].e);
                if (std::abs(det) < 1e-9) continue;
                // -e_i = mu_j e_j + mu_m e_m
                const Point rhs = -1.0 * cons[i].e;
                const double mu_j = cross(rhs, cons[m].e) / det;
                const double mu_m = cross(cons[j].e, rhs) / det;
                if (mu_j >= -1e-12 && mu_m >= -1e-12) {
                    if (cons[i].b + mu_j * cons[j].b + mu_m * cons[m].b >= -1e-12) return false;
                }
            }
        }
    }
    return true;
}

} // namespace

bool feasibility_from_couples(Point s, Point t,
                              const std::vector<std::pair<Point, Point>>& couples,
                              LocationKind t_kind, std::optional<double> edge_dir, double r_s,
                              const Tolerances& tol) {
    if (couples.empty()) throw PreconditionViolated("feasibility: no pivot couples");

    // Per t-pivot, only the best coupled s-pivot matters: the constraint is
    // w . e_v > -max_u cos(r_s - alpha_u), with the max over u coupled to v.
    struct Agg {
        Point v;
        Point e;
        double best_c;
    };
    std::vector<Agg> agg;
    for (const auto& [u, v] : couples) {
        const double c = std::cos(r_s - angle_of(s, u, tol));
        bool merged = false;
        for (auto& a : agg) {
            if (distance(a.v, v) <= tol.len) {
                a.best_c = std::max(a.best_c, c);
                merged = true;
                break;
            }
        }
        if (!merged) {
            const double bv = angle_of(t, v, tol);
            agg.push_back({v, Point{std::cos(bv), std::sin(bv)}, c});
        }
    }

    if (t_kind == LocationKind::Vertex) {
        for (const auto& a : agg)
            if (a.best_c <= 0.0) return false;
        return true;
    }
    if (t_kind == LocationKind::EdgeInterior) {
        if (!edge_dir) throw PreconditionViolated("feasibility: edge direction required");
        const Point ehat{std::cos(*edge_dir), std::sin(*edge_dir)};
        double lo = -std::numeric_limits<double>::infinity();
        double hi = std::numeric_limits<double>::infinity();
        for (const auto& a : agg) {
            const double coef = dot(ehat, a.e);
            const double b = -a.best_c;
            if (std::abs(coef) < 1e-12) {
                if (b >= 0.0) return false;
            } else if (coef > 0.0) {
                lo = std::max(lo, b / coef);
            } else {
                hi = std::min(hi, b / coef);
            }
        }
        return lo < hi;
    }
    std::vector<HalfPlaneConstraint> cons;
    for (const auto& a : agg) cons.push_back({a.e, -a.best_c});
    return open_halfplanes_feasible(cons);
}

namespace {

// Shared path-structure extraction for admissible_range / feasibility_oracle.
struct PairStructure {
    bool visible = false;
    PointLocation t_loc;
    std::vector<std::pair<int, int>> couples;
    int path_count = 0;
};

PairStructure pair_structure(const PolygonalDomain& dom, const VisibilityGraph& graph, Point s,
                             Point t, const Tolerances& tol) {
    PairStructure ps;
    ps.t_loc = classify(dom, t, tol);
    if (ps.t_loc.kind == LocationKind::Outside)
        throw OutsideDomain("pair structure: t outside domain");
    if (visible(dom, s, t, tol)) {
        ps.visible = true;
        return ps;
    }
    const PivotSets piv = pivot_sets(dom, graph, s, t, tol);
    ps.couples = piv.couples;
    ps.path_count = piv.path_count;
    return ps;
}

// Directed edge angle chosen so both pivots lie left of or on the edge line.
double oriented_edge_angle(const PolygonalDomain& dom, int edge_id, Point t,
                           const std::vector<Point>& pivot_pts, const Tolerances& tol) {
    const auto& e = dom.edges()[edge_id];
    const Point a = dom.vertex(e.a), b = dom.vertex(e.b);
    Point ehat = (1.0 / distance(a, b)) * (b - a);
    double left = 0.0, right = 0.0;
    for (const Point& v : pivot_pts) {
        const double c = cross(ehat, v - t);
        left = std::max(left, c);
        right = std::min(right, c);
    }
    if (right < -tol.len && left > tol.len)
        throw DegenerateFarthest("edge pi-range: pivots on both sides of the edge line");
    if (left <= tol.len) ehat = -1.0 * ehat; // flip so pivots sit left
    return normalize_angle(std::atan2(ehat.y, ehat.x));
}

} // namespace

DirectionRange admissible_range(const PolygonalDomain& dom, const VisibilityGraph& graph,
                                Point s, Point t, const Tolerances& tol) {
    const DirectionRange rf = free_direction_range(dom, s, tol);
    const PairStructure ps = pair_structure(dom, graph, s, t, tol);

    if (ps.visible) return rf.intersect(DirectionRange::half_plane(angle_of(s, t, tol)), tol);

    switch (ps.t_loc.kind) {
    case LocationKind::Vertex: {
        if (ps.path_count != 1)
            throw DegenerateFarthest("admissible_range: vertex target with tied paths");
        return rf.intersect(pi_range_vertex(s, dom.vertex(ps.couples[0].first), tol).range, tol);
    }
    case LocationKind::EdgeInterior: {
        if (ps.path_count != 2 || ps.couples.size() != 2)
            throw DegenerateFarthest("admissible_range: edge target without exactly two paths");
        std::vector<Point> vpts{dom.vertex(ps.couples[0].second),
                                dom.vertex(ps.couples[1].second)};
        const double edir = oriented_edge_angle(dom, ps.t_loc.index, t, vpts, tol);
        double beta[2], alpha[2];
        for (int i = 0; i < 2; ++i) {
            beta[i] = normalize_angle(angle_of(t, vpts[i], tol) - edir);
            if (beta[i] > 1.5 * kPi) beta[i] = 0.0; // wrapped tiny negative: on-line, ahead
            beta[i] = std::min(beta[i], kPi);        // tiny overshoot: on-line, behind
            alpha[i] = angle_of(s, dom.vertex(ps.couples[i].first), tol);
        }
        if (beta[0] > beta[1]) {
            std::swap(beta[0], beta[1]);
            std::swap(alpha[0], alpha[1]);
        }
        if (!(beta[0] < kPi / 2.0 && beta[1] > kPi / 2.0))
            throw DegenerateFarthest("admissible_range: edge pivots not canonical");
        return rf.intersect(pi_range_edge(alpha[0], alpha[1], beta[0], beta[1]).range, tol);
    }
    case LocationKind::Interior: {
        if (ps.path_count != 3 || ps.couples.size() != 3)
            throw DegenerateFarthest("admissible_range: interior target without exactly three paths");
        std::array<std::pair<Point, Point>, 3> cpl;
        for (int i = 0; i < 3; ++i) {
            cpl[i] = {dom.vertex(ps.couples[i].first), dom.vertex(ps.couples[i].second)};
        }
        const CanonicalInterior canon = canonicalize_interior(s, t, cpl, tol);
        return rf.intersect(pi_range_interior(canon.alpha, canon.beta).range, tol);
    }
    default:
        throw OutsideDomain("admissible_range: t outside domain");
    }
}

NecessaryConditionResult necessary_condition(const PolygonalDomain& dom,
                                             const VisibilityGraph& graph, Point s,
                                             const Tolerances& tol) {
    const FarthestReport rep = dmax_and_farthest(dom, graph, s, tol);
    NecessaryConditionResult out;
    out.range = free_direction_range(dom, s, tol);
    for (const auto& fp : rep.farthest) {
        if (fp.degenerate)
            throw NotApplicable("necessary_condition: degenerate farthest point");
        out.range = out.range.intersect(admissible_range(dom, graph, s, fp.point, tol), tol);
    }
    out.empty = out.range.is_empty(tol.ang);
    return out;
}

bool feasibility_oracle(const PolygonalDomain& dom, const VisibilityGraph& graph, Point s,
                        Point t, double r_s, const Tolerances& tol) {
    const PairStructure ps = pair_structure(dom, graph, s, t, tol);
    if (ps.visible) {
        // Single segment path: admissibility is the half-plane toward t.
        return std::cos(r_s - angle_of(s, t, tol)) > 0.0;
    }
    if (ps.couples.empty()) throw DegenerateFarthest("feasibility_oracle: no pivots");
    std::vector<std::pair<Point, Point>> cpl;
    for (const auto& [u, v] : ps.couples) cpl.push_back({dom.vertex(u), dom.vertex(v)});
    std::optional<double> edge_dir;
    if (ps.t_loc.kind == LocationKind::EdgeInterior) {
        const auto& e = dom.edges()[ps.t_loc.index];
        edge_dir = angle_of(dom.vertex(e.a), dom.vertex(e.b), tol);
    }
    return feasibility_from_couples(s, t, cpl, ps.t_loc.kind, edge_dir, r_s, tol);
}

} // namespace geocenter
