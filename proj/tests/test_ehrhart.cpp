#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "unicount/ehrhart.hpp"
#include "unicount/lattice.hpp"
#include "unicount/randgen.hpp"
#include "unicount/universal.hpp"

using namespace unicount;

namespace {

Polygon2 poly(std::vector<Vec2> vs) { return Polygon2::from_points(vs); }

const Polygon2 kSquare = poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
const Polygon2 kX = poly({{0, 0}, {2, 0}, {1, 1}});
const Polygon2 kY = poly({{0, 0}, {1, 1}, {0, 3}});

std::vector<Rat> rats(std::vector<long> v) {
    std::vector<Rat> out;
    for (long c : v) out.push_back(Rat(c));
    return out;
}

PolytopeN unit_cube() {
    std::vector<VecN> pts;
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b)
            for (int c = 0; c <= 1; ++c) pts.push_back({a, b, c});
    return PolytopeN::from_points(3, pts);
}

}  // namespace

TEST_CASE("counting polynomials by interpolation") {
    CHECK(ehrhart_poly(kSquare).coeffs == rats({1, 2, 1}));
    // same polynomial as the square even though the shapes differ
    CHECK(ehrhart_poly(kX).coeffs == rats({1, 2, 1}));
    CHECK(ehrhart_poly(unit_cube()).coeffs == rats({1, 3, 3, 1}));
    CHECK_THROWS_AS(ehrhart_poly(poly({{0, 0}, {1, 0}})), input_error);
}

TEST_CASE("polynomial evaluation matches dilation counting") {
    Rng rng(53);
    for (int it = 0; it < 10; ++it) {
        Polygon2 p = random_polygon(rng, 10, 6, true);
        EhrhartPoly e = ehrhart_poly(p);
        for (long k = 1; k <= 5; ++k) {
            std::vector<Int> ks(2, k);
            CHECK(e.eval(k) == Rat(count_points(p, dilation(ks))));
        }
    }
    EhrhartPoly cube = ehrhart_poly(unit_cube());
    for (long k = 1; k <= 5; ++k)
        CHECK(cube.eval(k) == Rat(count_points(unit_cube(), dilation({k, k, k}))));
}

TEST_CASE("facet relative volumes") {
    CHECK(rvol_facet(kSquare, {0, -1}) == 1);
    CHECK(rvol_facet(kX, {0, -1}) == 2);
    CHECK(rvol_facet(kX, {1, 1}) == 1);
    CHECK(rvol_facet(kX, {0, 1}) == 0);   // support face is a vertex
    CHECK(rvol_facet(kSquare, {1, 1}) == 0);
    CHECK(rvol_facet(unit_cube(), {0, 0, 1}) == 1);
    CHECK(rvol_facet(unit_cube(), {1, 1, 1}) == 0);
    CHECK_THROWS_AS(rvol_facet(kX, {0, -2}), input_error);

    // in the plane the relative volume is the lattice length of the edge
    Rng rng(59);
    for (int it = 0; it < 25; ++it) {
        Polygon2 p = random_polygon(rng, 10, 7, true);
        for (const auto& [from, vec] : p.edge_cycle()) {
            Vec2 z = primitive(outward_normal(vec)).first;
            CHECK(rvol_facet(p, z) == Rat(gcd(vec.x, vec.y)));
        }
    }
}

TEST_CASE("facet volume listings") {
    auto fx = facet_volumes(kX);
    REQUIRE(fx.size() == 3);
    CHECK(fx[0].rvol == 2);  // bottom edge first in boundary order
    for (const auto& fv : fx) {
        CHECK(fv.face.dim == 1);
        CHECK(fv.rvol > 0);
        CHECK(fv.rvol == Rat(lattice_length(fv.face.vertices[0], fv.face.vertices[1])));
    }
    auto fc = facet_volumes(unit_cube());
    REQUIRE(fc.size() == 6);
    for (const auto& fv : fc) {
        CHECK(fv.face.dim == 2);
        CHECK(fv.rvol == 1);
    }
    CHECK_THROWS_AS(facet_volumes(poly({{0, 0}, {1, 0}})), input_error);
}

TEST_CASE("relative volume multiset is unimodular invariant") {
    Rng rng(61);
    for (int it = 0; it < 20; ++it) {
        Polygon2 p = random_polygon(rng, 9, 5, true);
        long k = rng.uniform(-3, 3);
        bool shear_x = rng.uniform(0, 1) == 0;
        std::vector<Vec2> mapped;
        for (const Vec2& v : p.verts())
            mapped.push_back(shear_x ? Vec2{v.x + k * v.y, v.y} : Vec2{v.x, v.y + k * v.x});
        Polygon2 q = Polygon2::from_points(mapped);

        auto rvols = [](const Polygon2& r) {
            std::vector<Rat> out;
            for (const auto& [from, vec] : r.edge_cycle())
                out.push_back(rvol_facet(r, primitive(outward_normal(vec)).first));
            std::sort(out.begin(), out.end());
            return out;
        };
        CHECK(rvols(p) == rvols(q));
    }
}

TEST_CASE("coefficient identities on fixed shapes") {
    IdentityCheckReport sq = ehrhart_identity_check(kSquare);
    CHECK(sq.pass);
    CHECK(sq.leading_coeff == 1);
    CHECK(sq.second_coeff == 2);

    IdentityCheckReport tri = ehrhart_identity_check(kX);
    CHECK(tri.pass);
    CHECK(tri.leading_coeff == 1);
    CHECK(tri.second_coeff == 2);

    Polygon2 hexagon = minkowski_sum(kX, kY);
    IdentityCheckReport hex = ehrhart_identity_check(hexagon);
    CHECK(hex.pass);
    CHECK(hex.leading_coeff == Rat(17, 2));
    CHECK(hex.second_coeff == Rat(9, 2));

    IdentityCheckReport cube = ehrhart_identity_check(unit_cube());
    CHECK(cube.pass);
    CHECK(cube.volume == 1);
    CHECK(cube.half_rvol_sum == 3);
}

TEST_CASE("coefficient identities on random shapes") {
    Rng rng(67);
    for (int it = 0; it < 12; ++it) CHECK(ehrhart_identity_check(random_polygon(rng, 10, 6, true)).pass);
    for (int it = 0; it < 4; ++it) CHECK(ehrhart_identity_check(random_polytope(rng, 3, 8, 3)).pass);
    for (int it = 0; it < 3; ++it) CHECK(ehrhart_identity_check(random_polytope(rng, 4, 7, 2)).pass);
}

TEST_CASE("necessary condition") {
    Polygon2 hexagon = minkowski_sum(kX, kY);
    Polygon2 pentagon = minkowski_sum(kX, reflect(kY));
    CHECK(necessary_condition(hexagon, pentagon).pass);
    CHECK(necessary_condition(kX, kX.translate({5, -7})).pass);

    NecessaryReport rep = necessary_condition(kSquare, kX);
    REQUIRE_FALSE(rep.pass);
    REQUIRE(rep.violation.has_value());
    CHECK(rep.violation->z == VecN{1, 1});
    CHECK(rep.violation->rvol_p_pos == 0);
    CHECK(rep.violation->rvol_p_neg == 0);
    CHECK(rep.violation->rvol_q_pos == 1);
    CHECK(rep.violation->rvol_q_neg == 0);

    CHECK_THROWS_AS(necessary_condition(kX, poly({{0, 0}, {1, 0}})), input_error);
}

TEST_CASE("relative volumes in dimension four") {
    std::vector<VecN> pts4;
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b)
            for (int c = 0; c <= 1; ++c)
                for (int d = 0; d <= 1; ++d) pts4.push_back({a, b, c, d});
    PolytopeN cube4 = PolytopeN::from_points(4, pts4);
    CHECK(rvol_facet(cube4, {0, 0, 0, 1}) == 1);
    CHECK(rvol_facet(cube4, {1, 1, 1, 1}) == 0);
    std::vector<VecN> moved;
    for (const VecN& v : cube4.verts()) moved.push_back({v[0] + 1, v[1], v[2] - 2, v[3]});
    CHECK(necessary_condition(cube4, PolytopeN::from_points(4, moved)).pass);
}

TEST_CASE("necessary condition in dimension three") {
    PolytopeN cube = unit_cube();
    std::vector<VecN> moved;
    for (const VecN& v : cube.verts()) moved.push_back({v[0] + 2, v[1] - 1, v[2]});
    CHECK(necessary_condition(cube, PolytopeN::from_points(3, moved)).pass);

    PolytopeN simplex = PolytopeN::from_points(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK_FALSE(necessary_condition(cube, simplex).pass);
}

TEST_CASE("widths") {
    CHECK(width(kSquare, Vec2{1, 0}) == 1);
    CHECK(width(kX, Vec2{1, 0}) == 2);
    CHECK(width(kX, Vec2{0, 1}) == 1);
    CHECK(width(unit_cube(), VecN{1, 1, 1}) == 3);

    CHECK(width_boundary_formula(kSquare, {1, 0}) == 1);
    CHECK(width_boundary_formula(kX, {0, 1}) == 1);

    Polygon2 hexagon = minkowski_sum(kX, kY);
    CHECK(width(hexagon, Vec2{1, 0}) == 3);
    CHECK(width_boundary_formula(hexagon, {1, 0}) == 3);

    Rng rng(71);
    for (int it = 0; it < 15; ++it) {
        Polygon2 p = random_polygon(rng, 10, 7, false);
        for (const Vec2& z : primitive_directions(5))
            CHECK(width(p, z) == width_boundary_formula(p, z));
    }
}

TEST_CASE("pick counts") {
    CHECK(pick_count(kSquare) == 4);
    CHECK(pick_count(kY) == 5);  // {(0,0),(0,1),(0,2),(0,3),(1,1)}
    Polygon2 hexagon = minkowski_sum(kX, kY);
    Polygon2 pentagon = minkowski_sum(kX, reflect(kY));
    CHECK(pick_count(hexagon) == 14);
    CHECK(pick_count(pentagon) == 14);
    CHECK_THROWS_AS(pick_count(poly({{1, 2}})), input_error);

    Rng rng(73);
    Superlattice id = dilation({1, 1});
    for (int it = 0; it < 30; ++it) {
        Polygon2 p = random_polygon(rng, 12, 8, true);
        CHECK(pick_count(p) == count_points_brute(p, id));
        CHECK(pick_count(p) == oracle::count_rational_points(p.verts(), id));
    }
}

TEST_CASE("translates share polynomials and pass the necessary condition") {
    Rng rng(79);
    for (int it = 0; it < 10; ++it) {
        Polygon2 p = random_polygon(rng, 9, 6, true);
        Polygon2 t = p.translate({rng.uniform(-9, 9), rng.uniform(-9, 9)});
        CHECK(ehrhart_poly(p) == ehrhart_poly(t));
        CHECK(necessary_condition(p, t).pass);
    }
}

TEST_CASE("necessary condition holds whenever the exact decision says equal") {
    Rng rng(83);
    int found = 0;
    while (found < 10) {
        Polygon2 x = random_polygon(rng, 5, 3, true);
        Polygon2 y = random_polygon(rng, 5, 3, true);
        SynthReport rep = synth(x, y);
        if (!rep.decision.equal) continue;
        ++found;
        CHECK(necessary_condition(rep.p, rep.q).pass);
    }
}
