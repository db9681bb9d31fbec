#pragma once

#include <array>
#include <optional>
#include <variant>

#include "geocenter/farthest.hpp"

namespace geocenter {

// First and second directional derivatives of the pivot-anchored path
// length |su| + d(u,v) + |vt| as s moves along r_s with unit speed and t
// along r_t with speed tau.
struct PathDerivativeInput {
    Point s, t, u, v;
    double r_s = 0.0; // angle of s's moving direction
    double r_t = 0.0; // angle of t's moving direction
    double tau = 0.0; // speed ratio, >= 0
};
struct PathDerivatives {
    double first = 0.0;
    double second = 0.0;
};
PathDerivatives path_derivatives(const PathDerivativeInput& in, const Tolerances& tol = {});

struct EdgeCaseScalars {
    double alpha1, alpha2; // pivot direction angles at s
    double beta1, beta2;   // pivot angles at t, measured from the edge line
    double alpha;          // alpha2 - alpha1
    double lambda;
};
struct InteriorCaseScalars {
    std::array<double, 3> alpha, beta; // absolute pivot direction angles
    std::array<double, 3> a, b;        // cyclic gaps at s (ccw) and t (cw)
    double delta, delta1, delta2;
};

struct PiRangeResult {
    DirectionRange range;  // open interval of size pi, or empty
    bool special = false;  // empty range through the codimension-2 case
    std::variant<std::monostate, EdgeCaseScalars, InteriorCaseScalars> diagnostics;
};

inline constexpr double kEpsSpecial = 1e-7;

// Single-path case: open half of directions with positive component toward
// the pivot.
PiRangeResult pi_range_vertex(Point s, Point u, const Tolerances& tol = {});

// Two-path case. beta1 in [0, pi/2), beta2 in (pi/2, pi], both measured
// counterclockwise from the directed edge line (pivots left of or on it).
PiRangeResult pi_range_edge(double alpha1, double alpha2, double beta1, double beta2,
                            double eps_special = kEpsSpecial);

// Three-path case with canonical inputs: the clockwise gaps b_i of the betas
// must lie in (0, pi) and sum to 2*pi.
PiRangeResult pi_range_interior(const std::array<double, 3>& alpha,
                                const std::array<double, 3>& beta,
                                double eps_special = kEpsSpecial);

// Relabels three pivot couples so the t-pivots run clockwise around t and
// the s-pivots counterclockwise around s. Throws NotCanonical if no
// relabeling works (crossing paths), PreconditionViolated on bad input.
struct CanonicalInterior {
    std::array<double, 3> alpha, beta;
    std::array<std::pair<Point, Point>, 3> couples; // (u_i, v_i) in canonical order
};
CanonicalInterior canonicalize_interior(Point s, Point t,
                                        std::array<std::pair<Point, Point>, 3> couples,
                                        const Tolerances& tol = {});

// R(s,t) = R_f(s) intersected with the pi-range of the matching case.
// Requires t to be reachable with the non-degenerate path multiset of its
// location class (or s visible to t).
DirectionRange admissible_range(const PolygonalDomain& dom, const VisibilityGraph& graph,
                                Point s, Point t, const Tolerances& tol = {});

struct NecessaryConditionResult {
    bool empty = false;
    DirectionRange range; // R(s)
};
// R(s) over all farthest points; throws NotApplicable when F(s) contains a
// degenerate point.
NecessaryConditionResult necessary_condition(const PolygonalDomain& dom,
                                             const VisibilityGraph& graph, Point s,
                                             const Tolerances& tol = {});

// Decides whether some (r_t, tau >= 0) makes every coupled path derivative
// strictly negative, with r_t constrained parallel to the containing edge
// for t in E and tau = 0 for t a vertex. Exact: each constraint is linear
// in w = tau * (cos r_t, sin r_t).
bool feasibility_oracle(const PolygonalDomain& dom, const VisibilityGraph& graph, Point s,
                        Point t, double r_s, const Tolerances& tol = {});

// Same decision driven directly by pivot couples; the differential tests
// construct configurations without re-deriving them from a domain.
bool feasibility_from_couples(Point s, Point t,
                              const std::vector<std::pair<Point, Point>>& couples,
                              LocationKind t_kind, std::optional<double> edge_dir, double r_s,
                              const Tolerances& tol = {});

} // namespace geocenter
