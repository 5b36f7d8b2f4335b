#include "unicount/universal.hpp"

#include <algorithm>
#include <set>

namespace unicount {

EdgeProfile edge_profile(const Polygon2& p) {
    EdgeProfile prof;
    for (const auto& [dir, len] : p.edge_map())
        prof[canonical_class(primitive(outward_normal(dir)).first)] += len;
    return prof;
}

namespace {

// first class whose profile values differ, in descending lexicographic
// order of the canonical key
std::optional<Vec2> profile_witness(const EdgeProfile& a, const EdgeProfile& b) {
    std::set<Vec2> keys;
    for (const auto& [k, v] : a) keys.insert(k);
    for (const auto& [k, v] : b) keys.insert(k);
    for (auto it = keys.rbegin(); it != keys.rend(); ++it) {
        auto ia = a.find(*it);
        auto ib = b.find(*it);
        const Int va = ia == a.end() ? Int(0) : ia->second;
        const Int vb = ib == b.end() ? Int(0) : ib->second;
        if (va != vb) return *it;
    }
    return std::nullopt;
}

}  // namespace

Decision equal_universal_2d(const Polygon2& p, const Polygon2& q) {
    Decision d;
    d.area_p = p.area2();
    d.area_q = q.area2();
    if (d.area_p != d.area_q) {
        d.fail = "area";
        return d;
    }
    if (p.dim() < 2 || q.dim() < 2) {
        // both degenerate once areas match; counts compare directly: a
        // point meets every superlattice in one point, and a segment's
        // counts are determined by its vector up to sign
        if (p.dim() != q.dim()) {
            d.fail = "degenerate";
            return d;
        }
        if (p.dim() == 0) {
            d.equal = true;
            return d;
        }
        Vec2 vp = p.verts()[1] - p.verts()[0];
        Vec2 vq = q.verts()[1] - q.verts()[0];
        if (vp == vq || vp == -vq)
            d.equal = true;
        else
            d.fail = "degenerate";
        return d;
    }
    auto w = profile_witness(edge_profile(p), edge_profile(q));
    if (w) {
        d.fail = "profile";
        d.witness_class = *w;
        return d;
    }
    d.equal = true;
    return d;
}

namespace {

Int map_get(const EdgeMap& m, const Vec2& k) {
    auto it = m.find(k);
    return it == m.end() ? Int(0) : it->second;
}

void map_add(EdgeMap& m, const Vec2& k, const Int& v) {
    if (v > 0) m[k] += v;
}

void map_sub(EdgeMap& m, const Vec2& k, const Int& v) {
    auto it = m.find(k);
    if (it == m.end() || it->second < v) throw internal_error("edge length underflow");
    it->second -= v;
    if (it->second == 0) m.erase(it);
}

// canonical normal classes present in either edge map, ascending
std::vector<Vec2> normal_classes(const EdgeMap& a, const EdgeMap& b) {
    std::set<Vec2> cls;
    for (const auto& [dir, len] : a) cls.insert(canonical_class(outward_normal(dir)));
    for (const auto& [dir, len] : b) cls.insert(canonical_class(outward_normal(dir)));
    return {cls.begin(), cls.end()};
}

struct DirectionQuad {
    Vec2 t;                     // common edge direction, ccw_perp of the class key
    Int alpha, beta_len, gamma, delta_len;  // face lengths for p(z), p(-z), q(z), q(-z)
};

DirectionQuad quad_of(const Vec2& cls, const EdgeMap& ep, const EdgeMap& eq) {
    DirectionQuad qd;
    qd.t = ccw_perp(cls);
    qd.alpha = map_get(ep, qd.t);
    qd.beta_len = map_get(ep, -qd.t);
    qd.gamma = map_get(eq, qd.t);
    qd.delta_len = map_get(eq, -qd.t);
    return qd;
}

}  // namespace

DecompWitness decompose(const Polygon2& p, const Polygon2& q) {
    if (!equal_universal_2d(p, q).equal) throw input_error("not U-equal");

    EdgeMap ep = p.edge_map();
    EdgeMap eq = q.edge_map();
    EdgeMap ex, ey;

    // while some class has all four faces one-dimensional, split off the
    // shortest of the four edges as a segment summand of x
    for (;;) {
        bool stripped = false;
        for (const Vec2& cls : normal_classes(ep, eq)) {
            DirectionQuad qd = quad_of(cls, ep, eq);
            Int len = std::min(std::min(qd.alpha, qd.beta_len), std::min(qd.gamma, qd.delta_len));
            if (len == 0) continue;
            map_sub(ep, qd.t, len);
            map_sub(ep, -qd.t, len);
            map_sub(eq, qd.t, len);
            map_sub(eq, -qd.t, len);
            map_add(ex, qd.t, len);
            map_add(ex, -qd.t, len);
            stripped = true;
            break;
        }
        if (!stripped) break;
    }

    // base case: in every class at least one face is now a point; emit the
    // edges of x and y classwise
    for (const Vec2& cls : normal_classes(ep, eq)) {
        DirectionQuad qd = quad_of(cls, ep, eq);
        if (qd.alpha + qd.beta_len != qd.gamma + qd.delta_len)
            throw internal_error("edge profile mismatch in decomposition");
        if (qd.delta_len == 0) {
            map_add(ex, qd.t, qd.alpha);
            map_add(ey, -qd.t, qd.beta_len);
        } else if (qd.gamma == 0) {
            map_add(ex, -qd.t, qd.beta_len);
            map_add(ey, qd.t, qd.alpha);
        } else if (qd.beta_len == 0) {
            map_add(ex, qd.t, qd.gamma);
            map_add(ey, qd.t, qd.delta_len);
        } else if (qd.alpha == 0) {
            map_add(ex, -qd.t, qd.delta_len);
            map_add(ey, -qd.t, qd.gamma);
        } else {
            throw internal_error("strip recursion incomplete");
        }
    }

    DecompWitness w;
    w.x = polygon_from_edges(ex, {0, 0});
    w.y = polygon_from_edges(ey, {0, 0});

    Polygon2 rp = minkowski_sum(w.x, w.y);
    w.shift_p = p.verts()[0] - rp.verts()[0];
    if (rp.translate(w.shift_p) != p) throw internal_error("reconstruction of p failed");
    Polygon2 rq = minkowski_sum(w.x, reflect(w.y));
    w.shift_q = q.verts()[0] - rq.verts()[0];
    if (rq.translate(w.shift_q) != q) throw internal_error("reconstruction of q failed");
    return w;
}

SynthReport synth(const Polygon2& x, const Polygon2& y) {
    SynthReport rep;
    rep.p = minkowski_sum(x, y);
    rep.q = minkowski_sum(x, reflect(y));
    rep.area2_p = rep.p.area2();
    rep.area2_q = rep.q.area2();
    rep.decision = equal_universal_2d(rep.p, rep.q);
    // profiles of a sum/difference pair agree, so the verdict is exactly
    // area equality
    if (rep.decision.equal != (rep.area2_p == rep.area2_q))
        throw internal_error("profile mismatch on sum/difference pair");
    return rep;
}

namespace {

Polygon2 move_piece(const Polygon2& piece, const Motion& mo) {
    Polygon2 r = mo.reflected ? reflect(piece) : piece;
    return r.translate(mo.translate);
}

bool piece_inside(const Polygon2& piece, const Polygon2& whole) {
    for (const Vec2& v : piece.verts())
        if (!whole.contains(v)) return false;
    return true;
}

bool segment_on_edge(const Polygon2& whole, const Vec2& a, const Vec2& b) {
    const auto& vs = whole.verts();
    const std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& u = vs[i];
        Vec2 e = vs[(i + 1) % n] - u;
        if (cross(e, a - u) != 0 || cross(e, b - u) != 0) continue;
        bool a_in = dot(e, a - u) >= 0 && dot(e, a - u) <= dot(e, e);
        bool b_in = dot(e, b - u) >= 0 && dot(e, b - u) <= dot(e, e);
        if (a_in && b_in) return true;
    }
    return false;
}

bool piece_in_boundary(const Polygon2& piece, const Polygon2& whole) {
    if (whole.dim() < 2) return piece_inside(piece, whole);
    if (piece.dim() == 0) return whole.on_boundary(piece.verts()[0]);
    return segment_on_edge(whole, piece.verts()[0], piece.verts()[1]);
}

bool is_integer_point(const std::pair<Rat, Rat>& p, Vec2& out) {
    if (p.first.get_den() != 1 || p.second.get_den() != 1) return false;
    out = Vec2{p.first.get_num(), p.second.get_num()};
    return true;
}

// is the intersection hull a face (empty set, vertex, edge or the whole)
// of the piece?
bool face_of(const std::vector<std::pair<Rat, Rat>>& hull, const Polygon2& r) {
    if (hull.empty()) return true;
    std::vector<Vec2> pts;
    for (const auto& rp : hull) {
        Vec2 v;
        if (!is_integer_point(rp, v)) return false;
        pts.push_back(v);
    }
    const auto& vs = r.verts();
    if (pts.size() == 1) {
        return std::find(vs.begin(), vs.end(), pts[0]) != vs.end();
    }
    if (pts.size() == 2) {
        if (r.dim() == 1)
            return (pts[0] == vs[0] && pts[1] == vs[1]) || (pts[0] == vs[1] && pts[1] == vs[0]);
        if (r.dim() != 2) return false;
        const std::size_t n = vs.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2& a = vs[i];
            const Vec2& b = vs[(i + 1) % n];
            if ((pts[0] == a && pts[1] == b) || (pts[0] == b && pts[1] == a)) return true;
        }
        return false;
    }
    if (r.dim() != 2) return false;
    std::vector<Vec2> sp = pts, sv = vs;
    std::sort(sp.begin(), sp.end());
    std::sort(sv.begin(), sv.end());
    return sp == sv;
}

}  // namespace

VerifyReport verify_equidecomposition(const Polygon2& p, const Polygon2& q,
                                      const EquidecompCert& cert) {
    const std::size_t m = cert.pieces_p.size();
    if (m == 0) throw input_error("malformed certificate: no pieces");
    if (cert.pieces_q.size() != m || cert.motions.size() != m)
        throw input_error("malformed certificate: length mismatch");

    VerifyReport rep;
    const Polygon2* wholes[2] = {&p, &q};
    const std::vector<Polygon2>* sides[2] = {&cert.pieces_p, &cert.pieces_q};
    const char* names[2] = {"p", "q"};

    // (a) each piece lies inside its polygon
    for (int s = 0; s < 2; ++s)
        for (std::size_t i = 0; i < m; ++i)
            if (!piece_inside((*sides[s])[i], *wholes[s])) {
                rep.failed_check = "a";
                rep.side = names[s];
                rep.piece_i = static_cast<long>(i);
                rep.message = "piece outside polygon";
                return rep;
            }

    // (b) full-dimensional pieces have pairwise disjoint interiors
    for (int s = 0; s < 2; ++s)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                const Polygon2& a = (*sides[s])[i];
                const Polygon2& b = (*sides[s])[j];
                if (a.dim() < 2 || b.dim() < 2) continue;
                Rat inter = intersection_area2(a, b);
                if (inter != 0) {
                    rep.failed_check = "b";
                    rep.side = names[s];
                    rep.piece_i = static_cast<long>(i);
                    rep.piece_j = static_cast<long>(j);
                    rep.intersection_area2 = inter;
                    rep.message = "pieces overlap with positive area";
                    return rep;
                }
            }

    // (c) piece areas sum to the whole
    for (int s = 0; s < 2; ++s) {
        Int sum = 0;
        for (const Polygon2& piece : *sides[s]) sum += piece.area2();
        if (sum != wholes[s]->area2()) {
            rep.failed_check = "c";
            rep.side = names[s];
            rep.message = "piece areas sum to " + sum.get_str() + ", polygon has " +
                          wholes[s]->area2().get_str();
            return rep;
        }
    }

    // (d) closures of any two pieces meet in a common face
    for (int s = 0; s < 2; ++s)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                auto hull = intersection_hull((*sides[s])[i], (*sides[s])[j]);
                if (!face_of(hull, (*sides[s])[i]) || !face_of(hull, (*sides[s])[j])) {
                    rep.failed_check = "d";
                    rep.side = names[s];
                    rep.piece_i = static_cast<long>(i);
                    rep.piece_j = static_cast<long>(j);
                    rep.message = "closures do not meet in a common face";
                    return rep;
                }
            }

    // (e) motion i carries piece i of p exactly onto piece i of q
    for (std::size_t i = 0; i < m; ++i)
        if (move_piece(cert.pieces_p[i], cert.motions[i]) != cert.pieces_q[i]) {
            rep.failed_check = "e";
            rep.piece_i = static_cast<long>(i);
            rep.message = "motion does not map piece onto partner";
            return rep;
        }

    // (f) boundary pieces correspond
    for (std::size_t i = 0; i < m; ++i) {
        if (cert.pieces_p[i].dim() > 1) continue;
        bool bp = piece_in_boundary(cert.pieces_p[i], p);
        bool bq = piece_in_boundary(cert.pieces_q[i], q);
        if (bp != bq) {
            rep.failed_check = "f";
            rep.piece_i = static_cast<long>(i);
            rep.message = "boundary pieces do not correspond";
            return rep;
        }
    }

    rep.pass = true;
    return rep;
}

}  // namespace unicount
