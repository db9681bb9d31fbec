#include "geocenter/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace geocenter {

namespace {

double signed_area(const std::vector<Point>& ring) {
    double a = 0.0;
    for (size_t i = 0; i < ring.size(); ++i) {
        const Point& p = ring[i];
        const Point& q = ring[(i + 1) % ring.size()];
        a += cross(p, q);
    }
    return 0.5 * a;
}

// Strict point-in-polygon by crossing number; boundary points are resolved
// by the caller before this is consulted.
bool inside_ring(const std::vector<Point>& ring, Point p) {
    bool in = false;
    for (size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
        const Point& a = ring[i];
        const Point& b = ring[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (p.x < x) in = !in;
        }
    }
    return in;
}

bool on_ring_boundary(const std::vector<Point>& ring, Point p, double tol) {
    for (size_t i = 0; i < ring.size(); ++i) {
        if (point_segment_distance(p, ring[i], ring[(i + 1) % ring.size()]) <= tol) return true;
    }
    return false;
}

// Proper-crossing test for ring simplicity / disjointness validation.
bool segments_properly_cross(Point a, Point b, Point c, Point d) {
    const double d1 = cross(b - a, c - a);
    const double d2 = cross(b - a, d - a);
    const double d3 = cross(d - c, a - c);
    const double d4 = cross(d - c, b - c);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) &&
           d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0;
}

void validate_ring_simple(const std::vector<Point>& ring, const char* what) {
    const size_t n = ring.size();
    if (n < 3) throw ValidationError(std::string(what) + ": ring needs at least 3 vertices");
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (distance(ring[i], ring[j]) <= 1e-12)
                throw ValidationError(std::string(what) + ": repeated vertex in ring");
        }
    }
    for (size_t i = 0; i < n; ++i) {
        const Point a = ring[i], b = ring[(i + 1) % n];
        for (size_t j = i + 1; j < n; ++j) {
            if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
            const Point c = ring[j], d = ring[(j + 1) % n];
            if (segments_properly_cross(a, b, c, d))
                throw ValidationError(std::string(what) + ": self-intersecting ring");
        }
    }
    if (std::abs(signed_area(ring)) <= 1e-15)
        throw ValidationError(std::string(what) + ": degenerate (zero-area) ring");
}

} // namespace

PolygonalDomain::PolygonalDomain(std::vector<Point> outer, std::vector<std::vector<Point>> holes,
                                 const Tolerances&)
    : outer_(std::move(outer)), holes_(std::move(holes)) {
    for (const Point& p : outer_) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw ValidationError("non-finite coordinate");
    }
    for (const auto& h : holes_) {
        for (const Point& p : h) {
            if (!std::isfinite(p.x) || !std::isfinite(p.y))
                throw ValidationError("non-finite coordinate");
        }
    }

    validate_ring_simple(outer_, "outer");
    if (signed_area(outer_) < 0) std::reverse(outer_.begin(), outer_.end());

    for (size_t k = 0; k < holes_.size(); ++k) {
        auto& h = holes_[k];
        validate_ring_simple(h, "hole");
        if (signed_area(h) > 0) std::reverse(h.begin(), h.end());
        for (const Point& p : h) {
            if (!inside_ring(outer_, p) || on_ring_boundary(outer_, p, 1e-12))
                throw ValidationError("hole not strictly inside outer boundary");
        }
        for (size_t i = 0; i < h.size(); ++i) {
            for (size_t j = 0; j < outer_.size(); ++j) {
                if (segments_properly_cross(h[i], h[(i + 1) % h.size()], outer_[j],
                                            outer_[(j + 1) % outer_.size()]))
                    throw ValidationError("hole crosses outer boundary");
            }
        }
    }
    for (size_t k = 0; k < holes_.size(); ++k) {
        for (size_t m = k + 1; m < holes_.size(); ++m) {
            const auto& a = holes_[k];
            const auto& b = holes_[m];
            for (size_t i = 0; i < a.size(); ++i) {
                for (size_t j = 0; j < b.size(); ++j) {
                    if (segments_properly_cross(a[i], a[(i + 1) % a.size()], b[j],
                                                b[(j + 1) % b.size()]))
                        throw ValidationError("holes overlap");
                }
            }
            if (inside_ring(b, a[0]) || inside_ring(a, b[0]))
                throw ValidationError("holes overlap");
        }
    }

    auto add_ring = [&](const std::vector<Point>& ring) {
        const int base = static_cast<int>(vertices_.size());
        const int n = static_cast<int>(ring.size());
        for (const Point& p : ring) vertices_.push_back(p);
        for (int i = 0; i < n; ++i) {
            edges_.push_back({base + i, base + (i + 1) % n});
            prev_.push_back(base + (i + n - 1) % n);
            next_.push_back(base + (i + 1) % n);
        }
    };
    add_ring(outer_);
    for (const auto& h : holes_) add_ring(h);

    bb_min_ = {std::numeric_limits<double>::max(), std::numeric_limits<double>::max()};
    bb_max_ = {std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
    for (const Point& p : vertices_) {
        bb_min_.x = std::min(bb_min_.x, p.x);
        bb_min_.y = std::min(bb_min_.y, p.y);
        bb_max_.x = std::max(bb_max_.x, p.x);
        bb_max_.y = std::max(bb_max_.y, p.y);
    }
}

Point PolygonalDomain::edge_point(int edge_id, double t) const {
    const Edge& e = edges_[edge_id];
    return vertices_[e.a] + t * (vertices_[e.b] - vertices_[e.a]);
}

PolygonalDomain load_domain(const std::string& json_text, const Tolerances& tol) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    auto read_ring = [](const nlohmann::json& arr) {
        std::vector<Point> ring;
        if (!arr.is_array()) throw ParseError("ring must be an array of [x,y] pairs");
        for (const auto& v : arr) {
            if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
                throw ParseError("ring vertex must be [x,y]");
            ring.push_back({v[0].get<double>(), v[1].get<double>()});
        }
        return ring;
    };
    if (!doc.is_object() || !doc.contains("outer")) throw ParseError("missing \"outer\" ring");
    std::vector<Point> outer = read_ring(doc["outer"]);
    std::vector<std::vector<Point>> holes;
    if (doc.contains("holes")) {
        if (!doc["holes"].is_array()) throw ParseError("\"holes\" must be an array of rings");
        for (const auto& h : doc["holes"]) holes.push_back(read_ring(h));
    }
    return PolygonalDomain(std::move(outer), std::move(holes), tol);
}

std::string emit_domain(const PolygonalDomain& dom) {
    nlohmann::json doc;
    doc["outer"] = nlohmann::json::array();
    for (const Point& p : dom.outer()) doc["outer"].push_back({p.x, p.y});
    doc["holes"] = nlohmann::json::array();
    for (const auto& h : dom.holes()) {
        nlohmann::json ring = nlohmann::json::array();
        for (const Point& p : h) ring.push_back({p.x, p.y});
        doc["holes"].push_back(ring);
    }
    return doc.dump();
}

PointLocation classify(const PolygonalDomain& dom, Point p, const Tolerances& tol) {
    for (int i = 0; i < dom.vertex_count(); ++i) {
        if (distance(p, dom.vertex(i)) <= tol.len) return {LocationKind::Vertex, i, 0.0};
    }
    const auto& edges = dom.edges();
    for (size_t e = 0; e < edges.size(); ++e) {
        double t = 0.0;
        if (point_segment_distance(p, dom.vertex(edges[e].a), dom.vertex(edges[e].b), &t) <=
            tol.len) {
            return {LocationKind::EdgeInterior, static_cast<int>(e), t};
        }
    }
    if (!inside_ring(dom.outer(), p)) return {LocationKind::Outside, -1, 0.0};
    for (const auto& h : dom.holes()) {
        if (inside_ring(h, p)) return {LocationKind::Outside, -1, 0.0};
    }
    return {LocationKind::Interior, -1, 0.0};
}

DirectionRange free_direction_range(const PolygonalDomain& dom, Point p, const Tolerances& tol) {
    const PointLocation loc = classify(dom, p, tol);
    switch (loc.kind) {
    case LocationKind::Outside:
        throw OutsideDomain("free_direction_range: point outside domain");
    case LocationKind::Interior:
        return DirectionRange::full();
    case LocationKind::EdgeInterior: {
        // Domain lies to the left of the directed edge.
        const auto& e = dom.edges()[loc.index];
        const double dir = angle_of(dom.vertex(e.a), dom.vertex(e.b), tol);
        return DirectionRange::interval(dir, kPi, false, false);
    }
    case LocationKind::Vertex: {
        const Point v = dom.vertex(loc.index);
        const Point to_next = dom.vertex(dom.next_vertex(loc.index));
        const Point to_prev = dom.vertex(dom.prev_vertex(loc.index));
        const double start = angle_of(v, to_next, tol);
        const double size = normalize_angle(angle_of(v, to_prev, tol) - start);
        return DirectionRange::interval(start, size, false, false);
    }
    }
    throw Error("unreachable");
}

GeneralPositionReport check_general_position(const PolygonalDomain& dom, const Tolerances& tol) {
    GeneralPositionReport rep;
    const int n = dom.vertex_count();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                const Point a = dom.vertex(i), b = dom.vertex(j), c = dom.vertex(k);
                const double base = distance(a, b);
                if (base <= tol.len) continue;
                const double d = std::abs(cross(b - a, c - a)) / base;
                if (d <= tol.len) rep.collinear_triples.push_back({i, j, k});
            }
        }
    }
    return rep;
}

} // namespace geocenter
