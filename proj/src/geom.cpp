#include "geocenter/geom.hpp"

#include <algorithm>

namespace geocenter {

double normalize_angle(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
}

double wrap_to_pi(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r > kPi) r -= kTwoPi;
    if (r <= -kPi) r += kTwoPi;
    return r;
}

double angle_of(Point from, Point to, const Tolerances& tol) {
    if (distance(from, to) <= tol.len)
        throw DegenerateInput("angle_of: coincident points");
    return normalize_angle(std::atan2(to.y - from.y, to.x - from.x));
}

double point_segment_distance(Point p, Point a, Point b, double* param) {
    const Point ab = b - a;
    const double len2 = dot(ab, ab);
    double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    if (param) *param = t;
    return distance(p, a + t * ab);
}

DirectionRange DirectionRange::full() {
    DirectionRange r;
    r.full_ = true;
    return r;
}

DirectionRange DirectionRange::interval(double start, double size, bool open_lo, bool open_hi) {
    if (size <= 0.0) return empty();
    if (size >= kTwoPi) return full();
    DirectionRange r;
    r.parts_.push_back({normalize_angle(start), size, open_lo, open_hi});
    return r;
}

DirectionRange DirectionRange::half_plane(double bound_normal) {
    return interval(bound_normal - kPi / 2.0, kPi, true, true);
}

bool DirectionRange::is_empty(double tol) const {
    if (full_) return false;
    return measure() <= tol;
}

double DirectionRange::measure() const {
    if (full_) return kTwoPi;
    double m = 0.0;
    for (const auto& p : parts_) m += p.size;
    return m;
}

bool DirectionRange::contains(double angle) const {
    if (full_) return true;
    const double a = normalize_angle(angle);
    for (const auto& p : parts_) {
        for (double shift : {0.0, kTwoPi}) {
            const double x = a + shift;
            if (x > p.start && x < p.end()) return true;
            if (x == p.start && !p.open_lo) return true;
            if (x == p.end() && !p.open_hi) return true;
        }
    }
    return false;
}

namespace {

// Intersection of two linear intervals [a0,a1], [b0,b1] with openness flags.
bool linear_intersect(double a0, double a1, bool aol, bool aoh,
                      double b0, double b1, bool bol, bool boh,
                      AngleInterval* out) {
    double lo, hi;
    bool ol, oh;
    if (a0 > b0) {
        lo = a0; ol = aol;
    } else if (b0 > a0) {
        lo = b0; ol = bol;
    } else {
        lo = a0; ol = aol || bol;
    }
    if (a1 < b1) {
        hi = a1; oh = aoh;
    } else if (b1 < a1) {
        hi = b1; oh = boh;
    } else {
        hi = a1; oh = aoh || boh;
    }
    if (hi < lo) return false;
    if (hi == lo && (ol || oh)) return false;
    if (hi == lo) {
        // Degenerate closed singleton. Keep it with zero measure semantics:
        // represented as a tiny closed interval of size 0 is not allowed, so
        // callers treat it as measure zero; we drop it.
        return false;
    }
    *out = {normalize_angle(lo), hi - lo, ol, oh};
    return true;
}

} // namespace

void DirectionRange::normalize(const Tolerances& tol) {
    parts_.erase(std::remove_if(parts_.begin(), parts_.end(),
                                [](const AngleInterval& p) { return p.size <= 0.0; }),
                 parts_.end());
    std::sort(parts_.begin(), parts_.end(),
              [](const AngleInterval& a, const AngleInterval& b) { return a.start < b.start; });
    // Merge intervals that touch or overlap once unwrapped.
    auto touches = [&](double hi, bool open_hi, double lo, bool open_lo) {
        if (lo > hi + tol.ang) return false;
        if (std::abs(lo - hi) <= tol.ang && open_hi && open_lo) return false;
        return true;
    };
    std::vector<AngleInterval> merged;
    for (const auto& p : parts_) {
        if (!merged.empty()) {
            AngleInterval& m = merged.back();
            if (touches(m.end(), m.open_hi, p.start, p.open_lo)) {
                const double new_end = std::max(m.end(), p.end());
                if (p.end() >= m.end()) m.open_hi = p.open_hi;
                m.size = new_end - m.start;
                continue;
            }
        }
        merged.push_back(p);
    }
    // Wrap-around merge between the last and first interval.
    if (merged.size() >= 2) {
        AngleInterval& last = merged.back();
        AngleInterval& first = merged.front();
        if (touches(last.end(), last.open_hi, first.start + kTwoPi, first.open_lo)) {
            const double new_end = std::max(last.end(), first.end() + kTwoPi);
            last.open_hi = (first.end() + kTwoPi >= last.end()) ? first.open_hi : last.open_hi;
            last.size = new_end - last.start;
            merged.erase(merged.begin());
        }
    }
    double total = 0.0;
    for (const auto& p : merged) total += p.size;
    if (total >= kTwoPi) {
        full_ = true;
        merged.clear();
    }
    parts_ = std::move(merged);
}

DirectionRange DirectionRange::intersect(const DirectionRange& other, const Tolerances& tol) const {
    if (full_) return other;
    if (other.full_) return *this;
    DirectionRange out;
    for (const auto& a : parts_) {
        for (const auto& b : other.parts_) {
            // Compare in a linear unwrapping; b may sit one turn left or right.
            for (double shift : {-kTwoPi, 0.0, kTwoPi}) {
                AngleInterval piece;
                if (linear_intersect(a.start, a.end(), a.open_lo, a.open_hi,
                                     b.start + shift, b.end() + shift, b.open_lo, b.open_hi,
                                     &piece)) {
                    out.parts_.push_back(piece);
                }
            }
        }
    }
    out.normalize(tol);
    return out;
}

DirectionRange DirectionRange::intersect_all(std::span<const DirectionRange> ranges,
                                             const Tolerances& tol) {
    DirectionRange acc = DirectionRange::full();
    for (const auto& r : ranges) acc = acc.intersect(r, tol);
    return acc;
}

} // namespace geocenter
