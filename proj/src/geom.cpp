#include "unicount/geom.hpp"

#include <algorithm>

namespace unicount {

std::pair<Vec2, Int> primitive(const Vec2& v) {
    if (v.is_zero()) throw input_error("zero direction");
    Int g = gcd(v.x, v.y);
    return {Vec2{v.x / g, v.y / g}, g};
}

Int lattice_length(const Vec2& a, const Vec2& b) {
    if (a == b) return 0;
    Vec2 d = b - a;
    return gcd(d.x, d.y);
}

bool edge_angle_less(const Vec2& a, const Vec2& b) {
    auto half = [](const Vec2& v) { return lex_positive(v) ? 0 : 1; };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

Polygon2 Polygon2::from_points(std::span<const Vec2> pts) {
    if (pts.empty()) throw input_error("empty point set");
    std::vector<Vec2> s(pts.begin(), pts.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());

    Polygon2 out;
    if (s.size() == 1) {
        out.verts_ = s;
        return out;
    }
    // monotone chain, strict turns only (collinear points dropped)
    std::vector<Vec2> lower, upper;
    for (const Vec2& p : s) {
        while (lower.size() >= 2 &&
               cross(lower.back() - lower[lower.size() - 2], p - lower[lower.size() - 2]) <= 0)
            lower.pop_back();
        lower.push_back(p);
    }
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
        while (upper.size() >= 2 &&
               cross(upper.back() - upper[upper.size() - 2], *it - upper[upper.size() - 2]) <= 0)
            upper.pop_back();
        upper.push_back(*it);
    }
    lower.pop_back();
    upper.pop_back();
    out.verts_ = std::move(lower);
    out.verts_.insert(out.verts_.end(), upper.begin(), upper.end());
    return out;
}

int Polygon2::dim() const {
    if (verts_.size() <= 1) return 0;
    return verts_.size() == 2 ? 1 : 2;
}

Int Polygon2::area2() const {
    Int a = 0;
    const std::size_t n = verts_.size();
    if (n < 3) return a;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& u = verts_[i];
        const Vec2& v = verts_[(i + 1) % n];
        a += cross(u, v);
    }
    return a;
}

Int Polygon2::boundary_length() const {
    Int b = 0;
    for (const auto& [from, vec] : edge_cycle()) b += gcd(vec.x, vec.y);
    return b;
}

EdgeMap Polygon2::edge_map() const {
    EdgeMap m;
    for (const auto& [from, vec] : edge_cycle()) {
        auto [dir, len] = primitive(vec);
        m[dir] += len;
    }
    return m;
}

std::vector<std::pair<Vec2, Vec2>> Polygon2::edge_cycle() const {
    std::vector<std::pair<Vec2, Vec2>> es;
    const std::size_t n = verts_.size();
    if (n < 2) return es;
    if (n == 2) {
        es.push_back({verts_[0], verts_[1] - verts_[0]});
        es.push_back({verts_[1], verts_[0] - verts_[1]});
        return es;
    }
    for (std::size_t i = 0; i < n; ++i)
        es.push_back({verts_[i], verts_[(i + 1) % n] - verts_[i]});
    return es;
}

Polygon2 Polygon2::translate(const Vec2& v) const {
    Polygon2 out;
    out.verts_.reserve(verts_.size());
    for (const Vec2& w : verts_) out.verts_.push_back(w + v);
    return out;
}

bool Polygon2::contains_scaled(const Vec2& u, const Int& m) const {
    if (verts_.size() == 1) return u == Vec2{verts_[0].x * m, verts_[0].y * m};
    if (verts_.size() == 2) {
        Vec2 a{verts_[0].x * m, verts_[0].y * m};
        Vec2 b{verts_[1].x * m, verts_[1].y * m};
        Vec2 e = b - a;
        Vec2 w = u - a;
        if (cross(e, w) != 0) return false;
        return dot(e, w) >= 0 && dot(e, u - b) <= 0;
    }
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = verts_[i];
        const Vec2& b = verts_[(i + 1) % n];
        Vec2 e = b - a;
        Vec2 w{u.x - a.x * m, u.y - a.y * m};
        if (cross(e, w) < 0) return false;
    }
    return true;
}

bool Polygon2::on_boundary(const Vec2& p) const {
    if (dim() < 2) return contains(p);
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = verts_[i];
        const Vec2& b = verts_[(i + 1) % n];
        Vec2 e = b - a;
        if (cross(e, p - a) == 0 && dot(e, p - a) >= 0 && dot(e, p - b) <= 0) return true;
    }
    return false;
}

std::pair<Vec2, Vec2> Polygon2::bbox() const {
    Vec2 lo = verts_[0], hi = verts_[0];
    for (const Vec2& v : verts_) {
        lo.x = std::min(lo.x, v.x);
        lo.y = std::min(lo.y, v.y);
        hi.x = std::max(hi.x, v.x);
        hi.y = std::max(hi.y, v.y);
    }
    return {lo, hi};
}

SupportFace2 support_face(const Polygon2& p, const Vec2& z) {
    if (z.is_zero()) throw input_error("zero direction");
    const auto& vs = p.verts();
    Int best = dot(z, vs[0]);
    for (const Vec2& v : vs) best = std::max(best, dot(z, v));
    std::vector<Vec2> face;
    for (const Vec2& v : vs)
        if (dot(z, v) == best) face.push_back(v);

    SupportFace2 out;
    out.direction = z;
    if (face.size() == 1) {
        out.vertices = face;
        out.dim = 0;
        return out;
    }
    out.dim = 1;
    if (p.dim() == 1) {
        out.vertices = {vs[0], vs[1]};
        return out;
    }
    // report the edge in traversal order
    const std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = vs[i];
        const Vec2& b = vs[(i + 1) % n];
        if (dot(z, a) == best && dot(z, b) == best) {
            out.vertices = {a, b};
            return out;
        }
    }
    throw internal_error("support face vertices not adjacent");
}

Polygon2 polygon_from_edges(const EdgeMap& edges, const Vec2& anchor) {
    std::vector<std::pair<Vec2, Int>> dirs;
    Vec2 total{0, 0};
    for (const auto& [dir, len] : edges) {
        if (len < 0) throw internal_error("negative edge length");
        if (len == 0) continue;
        dirs.push_back({dir, len});
        total = total + dir * len;
    }
    if (!total.is_zero()) throw internal_error("edge multiset does not close");
    if (dirs.empty()) return Polygon2::from_points(std::vector<Vec2>{anchor});
    if (dirs.size() == 2) {
        const Vec2& u = lex_positive(dirs[0].first) ? dirs[0].first : dirs[1].first;
        const Int& len = dirs[0].second;
        return Polygon2::from_points(std::vector<Vec2>{anchor, anchor + u * len});
    }
    std::sort(dirs.begin(), dirs.end(),
              [](const auto& a, const auto& b) { return edge_angle_less(a.first, b.first); });
    std::vector<Vec2> vs;
    Vec2 cur = anchor;
    for (const auto& [dir, len] : dirs) {
        vs.push_back(cur);
        cur = cur + dir * len;
    }
    Polygon2 out = Polygon2::from_points(vs);
    if (out.size() != vs.size()) throw internal_error("edge multiset not convex");
    return out;
}

Polygon2 minkowski_sum(const Polygon2& a, const Polygon2& b) {
    EdgeMap m = a.edge_map();
    for (const auto& [dir, len] : b.edge_map()) m[dir] += len;
    return polygon_from_edges(m, a.verts()[0] + b.verts()[0]);
}

Polygon2 reflect(const Polygon2& p) {
    std::vector<Vec2> vs;
    vs.reserve(p.size());
    for (const Vec2& v : p.verts()) vs.push_back(-v);
    return Polygon2::from_points(vs);
}

Polygon2 dilate(const Polygon2& p, const Int& k) {
    if (k <= 0) throw input_error("dilation factor must be positive");
    std::vector<Vec2> vs;
    vs.reserve(p.size());
    for (const Vec2& v : p.verts()) vs.push_back(v * k);
    return Polygon2::from_points(vs);
}

std::pair<Polygon2, Vec2> canonical_translate(const Polygon2& p) {
    Vec2 shift = p.verts()[0];
    return {p.translate(-shift), shift};
}

Int lattice_points_in(const Polygon2& p) {
    if (p.dim() == 0) return 1;
    if (p.dim() == 1) return lattice_length(p.verts()[0], p.verts()[1]) + 1;
    Int twice = p.area2() + p.boundary_length();
    if (!divides(2, twice)) throw internal_error("odd doubled point count");
    return twice / 2 + 1;
}

namespace {

struct RatVec2 {
    Rat x, y;
    bool operator==(const RatVec2& o) const { return x == o.x && y == o.y; }
    bool operator<(const RatVec2& o) const {
        if (x != o.x) return x < o.x;
        return y < o.y;
    }
};

RatVec2 sub(const RatVec2& a, const RatVec2& b) { return {a.x - b.x, a.y - b.y}; }
Rat rcross(const RatVec2& a, const RatVec2& b) { return a.x * b.y - a.y * b.x; }

// clip a convex cycle by cross(dir, x - base) >= 0
std::vector<RatVec2> clip_halfplane(const std::vector<RatVec2>& cyc, const Vec2& base,
                                    const Vec2& dir) {
    std::vector<RatVec2> out;
    const std::size_t n = cyc.size();
    if (n == 0) return out;
    RatVec2 rbase{Rat(base.x), Rat(base.y)};
    RatVec2 rdir{Rat(dir.x), Rat(dir.y)};
    auto side = [&](const RatVec2& p) { return rcross(rdir, sub(p, rbase)); };
    for (std::size_t i = 0; i < n; ++i) {
        const RatVec2& s = cyc[i];
        const RatVec2& e = cyc[(i + 1) % n];
        Rat ss = side(s), se = side(e);
        bool sin = sgn(ss) >= 0, ein = sgn(se) >= 0;
        if (sin) out.push_back(s);
        if (sin != ein) {
            Rat t = ss / (ss - se);
            out.push_back({s.x + t * (e.x - s.x), s.y + t * (e.y - s.y)});
        }
    }
    return out;
}

// half-plane description of a (possibly degenerate) lattice polygon
std::vector<std::pair<Vec2, Vec2>> halfplanes(const Polygon2& p) {
    std::vector<std::pair<Vec2, Vec2>> hs;
    const auto& vs = p.verts();
    if (vs.size() == 1) {
        hs.push_back({vs[0], {1, 0}});
        hs.push_back({vs[0], {-1, 0}});
        hs.push_back({vs[0], {0, 1}});
        hs.push_back({vs[0], {0, -1}});
        return hs;
    }
    if (vs.size() == 2) {
        Vec2 e = vs[1] - vs[0];
        hs.push_back({vs[0], e});
        hs.push_back({vs[0], -e});
        hs.push_back({vs[0], Vec2{e.y, -e.x}});   // dot(e, x - a) >= 0
        hs.push_back({vs[1], Vec2{-e.y, e.x}});   // dot(e, b - x) >= 0
        return hs;
    }
    for (const auto& [from, vec] : p.edge_cycle()) hs.push_back({from, vec});
    return hs;
}

std::vector<RatVec2> intersect_cycles(const Polygon2& a, const Polygon2& b) {
    std::vector<RatVec2> cyc;
    for (const Vec2& v : a.verts()) cyc.push_back({Rat(v.x), Rat(v.y)});
    for (const auto& [base, dir] : halfplanes(b)) {
        cyc = clip_halfplane(cyc, base, dir);
        if (cyc.empty()) break;
    }
    return cyc;
}

}  // namespace

Rat intersection_area2(const Polygon2& a, const Polygon2& b) {
    std::vector<RatVec2> cyc = intersect_cycles(a, b);
    Rat s = 0;
    const std::size_t n = cyc.size();
    if (n < 3) return s;
    for (std::size_t i = 0; i < n; ++i) s += rcross(cyc[i], cyc[(i + 1) % n]);
    if (sgn(s) < 0) s = -s;
    return s;
}

std::vector<std::pair<Rat, Rat>> intersection_hull(const Polygon2& a, const Polygon2& b) {
    std::vector<RatVec2> pts = intersect_cycles(a, b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<std::pair<Rat, Rat>> out;
    if (pts.size() > 2) {
        std::vector<RatVec2> lower, upper;
        for (const RatVec2& p : pts) {
            while (lower.size() >= 2 &&
                   sgn(rcross(sub(lower.back(), lower[lower.size() - 2]),
                              sub(p, lower[lower.size() - 2]))) <= 0)
                lower.pop_back();
            lower.push_back(p);
        }
        for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
            while (upper.size() >= 2 &&
                   sgn(rcross(sub(upper.back(), upper[upper.size() - 2]),
                              sub(*it, upper[upper.size() - 2]))) <= 0)
                upper.pop_back();
            upper.push_back(*it);
        }
        lower.pop_back();
        upper.pop_back();
        pts = std::move(lower);
        pts.insert(pts.end(), upper.begin(), upper.end());
    }
    for (const RatVec2& p : pts) out.push_back({p.x, p.y});
    return out;
}

}  // namespace unicount
