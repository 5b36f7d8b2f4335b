#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "unicount/arith.hpp"

namespace unicount {

struct Vec2 {
    Int x, y;

    Vec2() : x(0), y(0) {}
    Vec2(Int xx, Int yy) : x(std::move(xx)), y(std::move(yy)) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(const Int& k) const { return {x * k, y * k}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Vec2& o) const { return !(*this == o); }
    // lexicographic: x first, then y
    bool operator<(const Vec2& o) const {
        if (x != o.x) return x < o.x;
        return y < o.y;
    }
    bool is_zero() const { return x == 0 && y == 0; }
};

inline Int cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Int dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

// counterclockwise quarter turn; for a ccw polygon the edge with outward
// normal z runs along ccw_perp(z)
inline Vec2 ccw_perp(const Vec2& z) { return {-z.y, z.x}; }

// outward normal of a ccw edge vector
inline Vec2 outward_normal(const Vec2& e) { return {e.y, -e.x}; }

inline bool lex_positive(const Vec2& v) { return v.x > 0 || (v.x == 0 && v.y > 0); }

// canonical representative of the class {z, -z}: the lexicographically
// larger of the pair
inline Vec2 canonical_class(const Vec2& z) { return lex_positive(z) ? z : -z; }

// direction with gcd-1 entries plus the positive multiplier taking it back
// to v; rejects the zero vector
std::pair<Vec2, Int> primitive(const Vec2& v);

Int lattice_length(const Vec2& a, const Vec2& b);

// strict ccw order over full turns, starting just past direction (0,-1);
// this is the edge order of a ccw convex polygon traversed from its
// lexicographically smallest vertex
bool edge_angle_less(const Vec2& a, const Vec2& b);

// edge multiset of a convex polygon: primitive direction -> lattice length.
// A segment contributes both opposite directions, a point contributes
// nothing.
using EdgeMap = std::map<Vec2, Int>;

// Convex lattice polygon in canonical form: extreme points only, ccw,
// first vertex lexicographically minimal. One vertex encodes a point and
// two a segment.
class Polygon2 {
  public:
    Polygon2() = default;

    // convex hull of the input points (duplicates and interior points
    // dropped); rejects an empty list
    static Polygon2 from_points(std::span<const Vec2> pts);
    static Polygon2 from_points(const std::vector<Vec2>& pts) {
        return from_points(std::span<const Vec2>(pts));
    }

    const std::vector<Vec2>& verts() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    int dim() const;  // 0 point, 1 segment, 2 polygon

    // twice the euclidean area; 0 for points and segments
    Int area2() const;

    // total boundary lattice length (both directions for a segment)
    Int boundary_length() const;

    EdgeMap edge_map() const;

    // full ccw cycle of (start vertex, edge vector); two antiparallel
    // entries for a segment, empty for a point
    std::vector<std::pair<Vec2, Vec2>> edge_cycle() const;

    Polygon2 translate(const Vec2& v) const;

    bool contains(const Vec2& p) const { return contains_scaled(p, 1); }
    // membership of the rational point u/m, tested as u in m*P
    bool contains_scaled(const Vec2& u, const Int& m) const;

    // is p on the boundary? (for points and segments the boundary is the
    // whole set)
    bool on_boundary(const Vec2& p) const;

    std::pair<Vec2, Vec2> bbox() const;  // (min corner, max corner)

    bool operator==(const Polygon2& o) const { return verts_ == o.verts_; }
    bool operator!=(const Polygon2& o) const { return !(*this == o); }

  private:
    std::vector<Vec2> verts_;
};

inline Polygon2 convex_hull_2d(const std::vector<Vec2>& pts) {
    return Polygon2::from_points(pts);
}

struct SupportFace2 {
    Vec2 direction;
    std::vector<Vec2> vertices;  // in ccw traversal order when an edge
    int dim = 0;
};

SupportFace2 support_face(const Polygon2& p, const Vec2& z);

Polygon2 minkowski_sum(const Polygon2& a, const Polygon2& b);
Polygon2 reflect(const Polygon2& p);
Polygon2 dilate(const Polygon2& p, const Int& k);

// translate with the lexicographically minimal vertex at the origin, plus
// the shift that restores the input
std::pair<Polygon2, Vec2> canonical_translate(const Polygon2& p);

// rebuild a polygon from a balanced edge multiset; anchor becomes the
// lexicographically minimal vertex
Polygon2 polygon_from_edges(const EdgeMap& edges, const Vec2& anchor);

// |P ∩ Z²| for any lattice polygon: area + half boundary + 1 when
// full-dimensional, segment/point counts otherwise
Int lattice_points_in(const Polygon2& p);

// doubled area of the intersection of two convex lattice polygons
// (exact rational clipping; the intersection may have rational vertices)
Rat intersection_area2(const Polygon2& a, const Polygon2& b);

// extreme points of the intersection, ccw from the lexicographic minimum;
// sizes 0/1/2/3+ mean empty/point/segment/full-dimensional
std::vector<std::pair<Rat, Rat>> intersection_hull(const Polygon2& a, const Polygon2& b);

}  // namespace unicount
