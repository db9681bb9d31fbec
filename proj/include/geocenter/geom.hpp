#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "geocenter/errors.hpp"

namespace geocenter {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Global comparison tolerances: len for length-like quantities, ang for
// angles in radians.
struct Tolerances {
    double len = 1e-9;
    double ang = 1e-9;
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double k, Point p) { return {k * p.x, k * p.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(b - a); }

// Angle normalized to [0, 2pi).
double normalize_angle(double a);

// Signed wrap to (-pi, pi].
double wrap_to_pi(double a);

// Direction of the vector to - from, as an angle in [0, 2pi).
// Throws DegenerateInput when the points coincide within tol.len.
double angle_of(Point from, Point to, const Tolerances& tol = {});

// Squared distance from p to segment ab, plus the clamped parameter.
double point_segment_distance(Point p, Point a, Point b, double* param = nullptr);

// One circular interval: canonical start in [0, 2pi), size in (0, 2pi].
// A full circle is represented by DirectionRange::full(), never by an
// interval of size 2pi.
struct AngleInterval {
    double start = 0.0;
    double size = 0.0;
    bool open_lo = false;
    bool open_hi = false;

    double end() const { return start + size; } // may exceed 2pi
};

// A set of directions on the circle: either "full" or a normalized list of
// pairwise disjoint circular intervals.
class DirectionRange {
public:
    DirectionRange() = default;

    static DirectionRange empty() { return DirectionRange(); }
    static DirectionRange full();
    // Interval from `start` spanning `size` counterclockwise.
    static DirectionRange interval(double start, double size, bool open_lo, bool open_hi);
    // Open range of size pi of directions with positive dot product against
    // the unit vector at bound_normal.
    static DirectionRange half_plane(double bound_normal);

    bool is_full() const { return full_; }
    bool is_empty(double tol = 0.0) const;
    double measure() const;
    bool contains(double angle) const;

    DirectionRange intersect(const DirectionRange& other, const Tolerances& tol = {}) const;
    static DirectionRange intersect_all(std::span<const DirectionRange> ranges,
                                        const Tolerances& tol = {});

    const std::vector<AngleInterval>& intervals() const { return parts_; }

private:
    bool full_ = false;
    std::vector<AngleInterval> parts_;

    void normalize(const Tolerances& tol);
};

} // namespace geocenter
