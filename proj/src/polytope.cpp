#include "unicount/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "unicount/geom.hpp"

namespace unicount {

Int dot(const VecN& a, const VecN& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

VecN sub(const VecN& a, const VecN& b) {
    VecN r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

VecN neg(const VecN& v) {
    VecN r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

bool is_zero(const VecN& v) {
    for (const Int& c : v)
        if (c != 0) return false;
    return true;
}

std::pair<VecN, Int> primitive_n(const VecN& v) {
    if (is_zero(v)) throw input_error("zero direction");
    Int g = 0;
    for (const Int& c : v) g = gcd(g, c);
    VecN r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return {r, g};
}

VecN canonical_class_n(const VecN& z) {
    for (const Int& c : z) {
        if (c > 0) return z;
        if (c < 0) return neg(z);
    }
    throw input_error("zero direction");
}

Int det_int(std::vector<VecN> rows) {
    const std::size_t n = rows.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (rows[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && rows[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(rows[k], rows[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]) / prev;
            }
            rows[i][k] = 0;
        }
        prev = rows[k][k];
    }
    return sign * rows[n - 1][n - 1];
}

VecN orthogonal_complement(const std::vector<VecN>& rows, int n) {
    VecN out(n);
    Int s = 1;
    for (int j = 0; j < n; ++j) {
        std::vector<VecN> minor;
        minor.reserve(rows.size());
        for (const VecN& r : rows) {
            VecN m;
            m.reserve(n - 1);
            for (int c = 0; c < n; ++c)
                if (c != j) m.push_back(r[c]);
            minor.push_back(std::move(m));
        }
        out[j] = s * det_int(std::move(minor));
        s = -s;
    }
    return out;
}

int affine_rank(const std::vector<VecN>& pts) {
    if (pts.size() <= 1) return 0;
    std::vector<VecN> rows;
    rows.reserve(pts.size() - 1);
    for (std::size_t i = 1; i < pts.size(); ++i) rows.push_back(sub(pts[i], pts[0]));
    // fraction-free elimination, count pivots
    const std::size_t m = rows.size(), w = rows[0].size();
    int rank = 0;
    std::size_t col = 0;
    for (std::size_t r = 0; r < m && col < w; ++col) {
        std::size_t p = r;
        while (p < m && rows[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t i = r + 1; i < m; ++i) {
            if (rows[i][col] == 0) continue;
            Int a = rows[r][col], b = rows[i][col];
            for (std::size_t j = col; j < w; ++j) rows[i][j] = rows[i][j] * a - rows[r][j] * b;
        }
        ++r;
        ++rank;
    }
    return rank;
}

namespace {

void subsets_rec(std::size_t start, std::size_t need, std::size_t total,
                 std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
    if (need == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i + need <= total; ++i) {
        cur.push_back(i);
        subsets_rec(i + 1, need - 1, total, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t total, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    subsets_rec(0, k, total, cur, out);
    return out;
}

}  // namespace

PolytopeN PolytopeN::from_points(int n, std::vector<VecN> pts) {
    if (n < 2) throw input_error("polytope dimension must be at least 2");
    for (const VecN& p : pts)
        if (static_cast<int>(p.size()) != n) throw input_error("coordinate length mismatch");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (affine_rank(pts) != n) throw input_error("polytope not full-dimensional");

    // candidate hyperplanes through n-subsets, kept when one-sided
    std::set<std::pair<VecN, Int>> kept;
    for (const auto& sel : subsets(pts.size(), n)) {
        std::vector<VecN> rows;
        rows.reserve(n - 1);
        for (std::size_t i = 1; i < sel.size(); ++i)
            rows.push_back(sub(pts[sel[i]], pts[sel[0]]));
        VecN nu = orthogonal_complement(rows, n);
        if (is_zero(nu)) continue;
        VecN zeta = primitive_n(nu).first;
        Int c = dot(zeta, pts[sel[0]]);
        bool below = true, above = true;
        for (const VecN& p : pts) {
            Int d = dot(zeta, p);
            if (d > c) below = false;
            if (d < c) above = false;
            if (!below && !above) break;
        }
        if (below)
            kept.insert({zeta, c});
        else if (above)
            kept.insert({neg(zeta), -c});
    }

    // a point is a vertex iff its tight facet normals span dimension n
    std::vector<VecN> verts;
    for (const VecN& p : pts) {
        std::vector<VecN> tight;
        tight.push_back(VecN(n, 0));  // affine_rank wants a base point
        for (const auto& [zeta, c] : kept)
            if (dot(zeta, p) == c) tight.push_back(zeta);
        if (affine_rank(tight) == n) verts.push_back(p);
    }

    PolytopeN out;
    out.n_ = n;
    out.verts_ = std::move(verts);
    for (const auto& [zeta, c] : kept) {
        FacetN f;
        f.normal = zeta;
        f.offset = c;
        for (std::size_t i = 0; i < out.verts_.size(); ++i)
            if (dot(zeta, out.verts_[i]) == c) f.vert_idx.push_back(i);
        out.facets_.push_back(std::move(f));
    }
    return out;
}

SupportFaceN PolytopeN::support_face(const VecN& z) const {
    if (static_cast<int>(z.size()) != n_) throw input_error("dimension mismatch");
    if (is_zero(z)) throw input_error("zero direction");
    Int best = dot(z, verts_[0]);
    for (const VecN& v : verts_) best = std::max(best, dot(z, v));
    SupportFaceN out;
    out.direction = z;
    for (const VecN& v : verts_)
        if (dot(z, v) == best) out.vertices.push_back(v);
    out.dim = affine_rank(out.vertices);
    return out;
}

bool PolytopeN::contains_scaled(const VecN& u, const Int& m) const {
    for (const FacetN& f : facets_)
        if (dot(f.normal, u) > f.offset * m) return false;
    return true;
}

std::pair<VecN, VecN> PolytopeN::bbox() const {
    VecN lo = verts_[0], hi = verts_[0];
    for (const VecN& v : verts_)
        for (int j = 0; j < n_; ++j) {
            lo[j] = std::min(lo[j], v[j]);
            hi[j] = std::max(hi[j], v[j]);
        }
    return {lo, hi};
}

PolytopeN PolytopeN::dilate(const Int& k) const {
    if (k <= 0) throw input_error("dilation factor must be positive");
    PolytopeN out = *this;
    for (VecN& v : out.verts_)
        for (Int& c : v) c *= k;
    for (FacetN& f : out.facets_) f.offset *= k;
    return out;
}

PolytopeN PolytopeN::translate(const VecN& t) const {
    PolytopeN out = *this;
    for (VecN& v : out.verts_)
        for (int j = 0; j < n_; ++j) v[j] += t[j];
    for (FacetN& f : out.facets_) f.offset += dot(f.normal, t);
    return out;
}

namespace {

// drop one coordinate; the map is injective on the face when the face's
// normal has a nonzero entry there
std::size_t drop_coord(const VecN& normal) {
    for (std::size_t k = 0; k < normal.size(); ++k)
        if (normal[k] != 0) return k;
    throw internal_error("zero face normal");
}

VecN project_out(const VecN& v, std::size_t k) {
    VecN r;
    r.reserve(v.size() - 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (i != k) r.push_back(v[i]);
    return r;
}

}  // namespace

std::vector<std::vector<VecN>> triangulate_fulldim(const std::vector<VecN>& pts, int m) {
    std::vector<std::vector<VecN>> out;
    if (m == 1) {
        VecN lo = pts[0], hi = pts[0];
        for (const VecN& p : pts) {
            lo = std::min(lo, p);
            hi = std::max(hi, p);
        }
        out.push_back({lo, hi});
        return out;
    }
    if (m == 2) {
        std::vector<Vec2> ps;
        ps.reserve(pts.size());
        for (const VecN& p : pts) ps.push_back({p[0], p[1]});
        Polygon2 hull = Polygon2::from_points(ps);
        const auto& vs = hull.verts();
        if (vs.size() < 3) throw internal_error("triangulation input not full-dimensional");
        for (std::size_t i = 1; i + 1 < vs.size(); ++i)
            out.push_back({{vs[0].x, vs[0].y}, {vs[i].x, vs[i].y}, {vs[i + 1].x, vs[i + 1].y}});
        return out;
    }
    PolytopeN poly = PolytopeN::from_points(m, pts);
    const VecN& apex = poly.verts()[0];
    for (const FacetN& f : poly.facets()) {
        if (dot(f.normal, apex) == f.offset) continue;  // flat cone
        std::vector<VecN> face_pts;
        for (std::size_t i : f.vert_idx) face_pts.push_back(poly.verts()[i]);
        for (auto& simplex : triangulate_face(face_pts, f.normal)) {
            simplex.push_back(apex);
            out.push_back(std::move(simplex));
        }
    }
    return out;
}

std::vector<std::vector<VecN>> triangulate_face(const std::vector<VecN>& face_pts,
                                                const VecN& normal) {
    const std::size_t k = drop_coord(normal);
    std::map<VecN, VecN> lift;
    std::vector<VecN> proj;
    proj.reserve(face_pts.size());
    for (const VecN& p : face_pts) {
        VecN q = project_out(p, k);
        lift[q] = p;
        proj.push_back(std::move(q));
    }
    if (lift.size() != face_pts.size()) throw internal_error("face projection not injective");
    std::vector<std::vector<VecN>> out;
    for (const auto& simplex : triangulate_fulldim(proj, static_cast<int>(normal.size()) - 1)) {
        std::vector<VecN> lifted;
        lifted.reserve(simplex.size());
        for (const VecN& q : simplex) lifted.push_back(lift.at(q));
        out.push_back(std::move(lifted));
    }
    return out;
}

Rat volume(const PolytopeN& p) {
    Int doubled = 0;
    for (const auto& simplex : triangulate_fulldim(p.verts(), p.dim())) {
        std::vector<VecN> rows;
        rows.reserve(simplex.size() - 1);
        for (std::size_t i = 1; i < simplex.size(); ++i) rows.push_back(sub(simplex[i], simplex[0]));
        Int d = det_int(std::move(rows));
        doubled += abs(d);
    }
    return Rat(doubled) / Rat(factorial(static_cast<unsigned>(p.dim())));
}

}  // namespace unicount
