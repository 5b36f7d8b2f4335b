#include "unicount/ehrhart.hpp"

#include <algorithm>

#include "unicount/lattice.hpp"

namespace unicount {

Rat EhrhartPoly::eval(const Int& k) const {
    Rat acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * Rat(k) + coeffs[i];
    return acc;
}

namespace {

// exact Gaussian elimination; a is square and nonsingular
std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) throw internal_error("singular interpolation system");
        std::swap(a[k], a[piv]);
        std::swap(b[k], b[piv]);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rat f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rat s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

EhrhartPoly interpolate(const std::vector<Int>& counts, int n) {
    std::vector<std::vector<Rat>> a(n + 1, std::vector<Rat>(n + 1));
    std::vector<Rat> b(n + 1);
    for (int r = 0; r <= n; ++r) {
        Int k = r + 1;
        Rat pw = 1;
        for (int c = 0; c <= n; ++c) {
            a[r][c] = pw;
            pw *= Rat(k);
        }
        b[r] = Rat(counts[r]);
    }
    EhrhartPoly poly;
    poly.coeffs = solve_linear(std::move(a), std::move(b));
    if (poly.coeffs.back() == 0) throw internal_error("counting polynomial degree collapsed");
    for (int r = 0; r <= n; ++r)
        if (poly.eval(r + 1) != Rat(counts[r]))
            throw internal_error("interpolation does not reproduce counts");
    return poly;
}

}  // namespace

EhrhartPoly ehrhart_poly(const Polygon2& p) {
    if (p.dim() != 2) throw input_error("degenerate polygon");
    std::vector<Int> counts;
    for (int k = 1; k <= 3; ++k) counts.push_back(lattice_points_in(dilate(p, k)));
    return interpolate(counts, 2);
}

EhrhartPoly ehrhart_poly(const PolytopeN& p) {
    const int n = p.dim();
    std::vector<Int> counts;
    for (int k = 1; k <= n + 1; ++k) counts.push_back(lattice_points_in(p.dilate(k)));
    return interpolate(counts, n);
}

namespace {

void require_primitive(const Int& g) {
    if (g != 1) throw input_error("direction not primitive");
}

}  // namespace

Rat rvol_facet(const Polygon2& p, const Vec2& z) {
    require_primitive(primitive(z).second);
    SupportFace2 f = support_face(p, z);
    if (f.dim < 1) return 0;
    Vec2 e = f.vertices[1] - f.vertices[0];
    // one-simplex Gram determinant over the squared normal length
    return rat_sqrt(Rat(dot(e, e)) / Rat(dot(z, z)), "rvol not rational");
}

Rat rvol_facet(const PolytopeN& p, const VecN& z) {
    require_primitive(primitive_n(z).second);
    SupportFaceN f = p.support_face(z);
    const int n = p.dim();
    if (f.dim < n - 1) return 0;
    Rat zz(dot(z, z));
    Rat sum = 0;
    for (const auto& simplex : triangulate_face(f.vertices, z)) {
        std::vector<VecN> edges;
        edges.reserve(simplex.size() - 1);
        for (std::size_t i = 1; i < simplex.size(); ++i)
            edges.push_back(sub(simplex[i], simplex[0]));
        std::vector<VecN> gram(edges.size(), VecN(edges.size()));
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = 0; j < edges.size(); ++j) gram[i][j] = dot(edges[i], edges[j]);
        sum += rat_sqrt(Rat(det_int(std::move(gram))) / zz, "rvol not rational");
    }
    return sum / Rat(factorial(static_cast<unsigned>(n - 1)));
}

std::vector<FaceVolume<SupportFace2>> facet_volumes(const Polygon2& p) {
    if (p.dim() != 2) throw input_error("degenerate polygon");
    std::vector<FaceVolume<SupportFace2>> out;
    for (const auto& [from, vec] : p.edge_cycle()) {
        Vec2 z = primitive(outward_normal(vec)).first;
        out.push_back({support_face(p, z), rvol_facet(p, z)});
    }
    return out;
}

std::vector<FaceVolume<SupportFaceN>> facet_volumes(const PolytopeN& p) {
    std::vector<FaceVolume<SupportFaceN>> out;
    for (const FacetN& f : p.facets())
        out.push_back({p.support_face(f.normal), rvol_facet(p, f.normal)});
    return out;
}

namespace {

template <class FaceVolumes>
IdentityCheckReport identity_check_impl(const FaceVolumes& fvs, const EhrhartPoly& poly,
                                        const Rat& vol) {
    IdentityCheckReport rep;
    rep.leading_coeff = poly.coeffs.back();
    rep.volume = vol;
    rep.second_coeff = poly.coeffs[poly.coeffs.size() - 2];
    Rat sum = 0;
    for (const auto& fv : fvs) sum += fv.rvol;
    rep.half_rvol_sum = sum / 2;
    rep.pass = rep.leading_coeff == rep.volume && rep.second_coeff == rep.half_rvol_sum;
    return rep;
}

}  // namespace

IdentityCheckReport ehrhart_identity_check(const Polygon2& p) {
    return identity_check_impl(facet_volumes(p), ehrhart_poly(p), Rat(p.area2()) / 2);
}

IdentityCheckReport ehrhart_identity_check(const PolytopeN& p) {
    return identity_check_impl(facet_volumes(p), ehrhart_poly(p), volume(p));
}

namespace {

// facet-normal classes of p then q, deduplicated, in descending
// lexicographic order of the canonical representative
template <class Key, class Body, class ClassesOf>
std::vector<Key> normal_classes(const Body& p, const Body& q, ClassesOf classes_of) {
    std::vector<Key> all = classes_of(p);
    for (const Key& k : classes_of(q)) all.push_back(k);
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    std::reverse(all.begin(), all.end());
    return all;
}

std::vector<Vec2> polygon_classes(const Polygon2& p) {
    std::vector<Vec2> out;
    for (const auto& [from, vec] : p.edge_cycle())
        out.push_back(canonical_class(primitive(outward_normal(vec)).first));
    return out;
}

std::vector<VecN> polytope_classes(const PolytopeN& p) {
    std::vector<VecN> out;
    for (const FacetN& f : p.facets()) out.push_back(canonical_class_n(f.normal));
    return out;
}

Vec2 negate_dir(const Vec2& v) { return -v; }
VecN negate_dir(const VecN& v) { return neg(v); }
VecN as_vecn(const Vec2& v) { return {v.x, v.y}; }
VecN as_vecn(const VecN& v) { return v; }

template <class Body, class Dir>
NecessaryReport necessary_impl(const Body& p, const Body& q, const std::vector<Dir>& classes) {
    NecessaryReport rep;
    for (const Dir& z : classes) {
        Rat pp = rvol_facet(p, z);
        Rat pn = rvol_facet(p, negate_dir(z));
        Rat qp = rvol_facet(q, z);
        Rat qn = rvol_facet(q, negate_dir(z));
        if (pp + pn != qp + qn) {
            rep.pass = false;
            rep.violation = NecessaryViolation{as_vecn(z), pp, pn, qp, qn};
            return rep;
        }
    }
    rep.pass = true;
    return rep;
}

}  // namespace

NecessaryReport necessary_condition(const Polygon2& p, const Polygon2& q) {
    if (p.dim() != 2 || q.dim() != 2) throw input_error("degenerate polygon");
    return necessary_impl(p, q, normal_classes<Vec2>(p, q, polygon_classes));
}

NecessaryReport necessary_condition(const PolytopeN& p, const PolytopeN& q) {
    if (p.dim() != q.dim()) throw input_error("dimension mismatch");
    return necessary_impl(p, q, normal_classes<VecN>(p, q, polytope_classes));
}

Int width(const Polygon2& p, const Vec2& z) {
    if (z.is_zero()) throw input_error("zero direction");
    Int lo = dot(z, p.verts()[0]), hi = lo;
    for (const Vec2& v : p.verts()) {
        Int d = dot(z, v);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return hi - lo;
}

Int width(const PolytopeN& p, const VecN& z) {
    if (static_cast<int>(z.size()) != p.dim()) throw input_error("dimension mismatch");
    if (is_zero(z)) throw input_error("zero direction");
    Int lo = dot(z, p.verts()[0]), hi = lo;
    for (const VecN& v : p.verts()) {
        Int d = dot(z, v);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return hi - lo;
}

Int width_boundary_formula(const Polygon2& p, const Vec2& z) {
    if (z.is_zero()) throw input_error("zero direction");
    Int sum = 0;
    for (const auto& [from, vec] : p.edge_cycle()) sum += abs(dot(z, vec));
    if (!divides(2, sum)) throw internal_error("odd boundary width sum");
    return sum / 2;
}

Int pick_count(const Polygon2& p) {
    if (p.dim() != 2) throw input_error("degenerate polygon");
    return lattice_points_in(p);
}

}  // namespace unicount
