#include <doctest.h>

#include "oracles.hpp"
#include "unicount/geom.hpp"
#include "unicount/randgen.hpp"

using namespace unicount;

namespace {

Polygon2 poly(std::vector<Vec2> vs) { return Polygon2::from_points(vs); }

const Polygon2 kSquare = poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
const Polygon2 kX = poly({{0, 0}, {2, 0}, {1, 1}});
const Polygon2 kY = poly({{0, 0}, {1, 1}, {0, 3}});

}  // namespace

TEST_CASE("primitive direction extraction") {
    CHECK(primitive({4, 6}) == std::pair<Vec2, Int>({2, 3}, 2));
    CHECK(primitive({0, 5}) == std::pair<Vec2, Int>({0, 1}, 5));
    CHECK(primitive({1, 0}) == std::pair<Vec2, Int>({1, 0}, 1));
    CHECK(primitive({-4, -6}) == std::pair<Vec2, Int>({-2, -3}, 2));
    CHECK_THROWS_AS(primitive({0, 0}), input_error);
}

TEST_CASE("convex hull canonical form") {
    Polygon2 sq = poly({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 0}});
    CHECK(sq.verts() == std::vector<Vec2>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});

    Polygon2 tri = poly({{0, 0}, {2, 0}, {1, 0}, {1, 1}});
    CHECK(tri.verts() == std::vector<Vec2>{{0, 0}, {2, 0}, {1, 1}});

    Polygon2 pt = poly({{5, 5}});
    CHECK(pt.dim() == 0);
    CHECK(pt.verts() == std::vector<Vec2>{{5, 5}});

    Polygon2 seg = poly({{3, 3}, {0, 0}, {1, 1}});
    CHECK(seg.dim() == 1);
    CHECK(seg.verts() == std::vector<Vec2>{{0, 0}, {3, 3}});

    CHECK_THROWS_AS(poly({}), input_error);
}

TEST_CASE("hull is idempotent") {
    Rng rng(11);
    for (int it = 0; it < 50; ++it) {
        Polygon2 p = random_polygon(rng, 12, 8, false);
        CHECK(Polygon2::from_points(p.verts()) == p);
    }
}

TEST_CASE("doubled areas") {
    CHECK(kSquare.area2() == 2);
    CHECK(kX.area2() == oracle::shoelace2({{0, 0}, {2, 0}, {1, 1}}));
    CHECK(kX.area2() == 2);
    CHECK(poly({{0, 0}, {4, 4}}).area2() == 0);

    Polygon2 hexagon = minkowski_sum(kX, kY);
    CHECK(hexagon.area2() == oracle::shoelace2(hexagon.verts()));
    CHECK(hexagon.area2() == 17);
}

TEST_CASE("minkowski sums of the reference triangles") {
    Polygon2 hexagon = minkowski_sum(kX, kY);
    CHECK(hexagon.size() == 6);
    Polygon2 pentagon = minkowski_sum(kX, reflect(kY));
    CHECK(pentagon.size() == 5);
    CHECK(pentagon.verts() ==
          std::vector<Vec2>{{-1, -1}, {0, -3}, {2, -3}, {2, 0}, {1, 1}});

    Polygon2 shifted = minkowski_sum(kX, poly({{3, 3}}));
    CHECK(shifted == kX.translate({3, 3}));
}

TEST_CASE("minkowski sum against the pairwise-sum oracle") {
    Rng rng(23);
    for (int it = 0; it < 80; ++it) {
        Polygon2 a = random_polygon(rng, 8, 6, false);
        Polygon2 b = random_polygon(rng, 8, 6, false);
        CHECK(minkowski_sum(a, b) == oracle::minkowski_by_pairs(a, b));
    }
}

TEST_CASE("minkowski sum is commutative and associative") {
    Rng rng(29);
    for (int it = 0; it < 40; ++it) {
        Polygon2 a = random_polygon(rng, 6, 5, false);
        Polygon2 b = random_polygon(rng, 6, 5, false);
        Polygon2 c = random_polygon(rng, 6, 5, false);
        CHECK(minkowski_sum(a, b) == minkowski_sum(b, a));
        CHECK(canonical_translate(minkowski_sum(minkowski_sum(a, b), c)).first ==
              canonical_translate(minkowski_sum(a, minkowski_sum(b, c))).first);
    }
}

TEST_CASE("sum area dominates the parts") {
    Rng rng(31);
    for (int it = 0; it < 80; ++it) {
        Polygon2 a = random_polygon(rng, 7, 5, false);
        Polygon2 b = random_polygon(rng, 7, 5, false);
        Int lhs = minkowski_sum(a, b).area2();
        Int rhs = a.area2() + b.area2();
        CHECK(lhs >= rhs);
        bool point = a.dim() == 0 || b.dim() == 0;
        bool parallel_segments =
            a.dim() == 1 && b.dim() == 1 &&
            cross(a.verts()[1] - a.verts()[0], b.verts()[1] - b.verts()[0]) == 0;
        CHECK((lhs == rhs) == (point || parallel_segments));
    }
}

TEST_CASE("reflection") {
    CHECK(reflect(poly({{0, 0}, {1, 0}})).verts() == std::vector<Vec2>{{-1, 0}, {0, 0}});
    CHECK(reflect(kY) == poly({{0, 0}, {-1, -1}, {0, -3}}));
    CHECK(reflect(poly({{2, 3}})).verts() == std::vector<Vec2>{{-2, -3}});

    Rng rng(37);
    for (int it = 0; it < 40; ++it) {
        Polygon2 p = random_polygon(rng, 9, 7, false);
        CHECK(canonical_translate(reflect(reflect(p))).first == canonical_translate(p).first);
    }
}

TEST_CASE("support faces") {
    SupportFace2 right = support_face(kSquare, {1, 0});
    CHECK(right.dim == 1);
    CHECK(right.vertices == std::vector<Vec2>{{1, 0}, {1, 1}});

    SupportFace2 top = support_face(kX, {0, 1});
    CHECK(top.dim == 0);
    CHECK(top.vertices == std::vector<Vec2>{{1, 1}});

    SupportFace2 bottom = support_face(kX, {0, -1});
    CHECK(bottom.dim == 1);
    CHECK(bottom.vertices == std::vector<Vec2>{{0, 0}, {2, 0}});

    CHECK_THROWS_AS(support_face(kX, {0, 0}), input_error);
}

TEST_CASE("support vertices attain the maximum strictly") {
    Rng rng(41);
    for (int it = 0; it < 40; ++it) {
        Polygon2 p = random_polygon(rng, 10, 8, false);
        for (const Vec2& z : primitive_directions(2)) {
            SupportFace2 f = support_face(p, z);
            Int best = dot(z, f.vertices[0]);
            for (const Vec2& v : f.vertices) CHECK(dot(z, v) == best);
            std::size_t hits = 0;
            for (const Vec2& v : p.verts()) {
                CHECK(dot(z, v) <= best);
                if (dot(z, v) == best) ++hits;
            }
            CHECK(hits == f.vertices.size());
        }
    }
}

TEST_CASE("lattice lengths") {
    CHECK(lattice_length({0, 0}, {2, 0}) == 2);
    CHECK(lattice_length({0, 0}, {0, 3}) == 3);
    CHECK(lattice_length({1, 1}, {3, 5}) == 2);
    CHECK(lattice_length({4, 4}, {4, 4}) == 0);

    Rng rng(43);
    for (int it = 0; it < 50; ++it) {
        Vec2 a{rng.uniform(-9, 9), rng.uniform(-9, 9)};
        Vec2 b{rng.uniform(-9, 9), rng.uniform(-9, 9)};
        Vec2 t{rng.uniform(-9, 9), rng.uniform(-9, 9)};
        CHECK(lattice_length(a, b) == lattice_length(a + t, b + t));
        CHECK(lattice_length(a, b) == lattice_length(-a, -b));
    }
}

TEST_CASE("canonical translate") {
    auto [sq, shift] = canonical_translate(kSquare.translate({5, 7}));
    CHECK(shift == Vec2{5, 7});
    CHECK(sq == kSquare);

    auto [pt, pshift] = canonical_translate(poly({{2, 2}}));
    CHECK(pshift == Vec2{2, 2});
    CHECK(pt.verts() == std::vector<Vec2>{{0, 0}});

    Polygon2 pentagon = minkowski_sum(kX, reflect(kY));
    auto [canon, qshift] = canonical_translate(pentagon);
    CHECK(qshift == Vec2{-1, -1});
    CHECK(canon.verts()[0] == Vec2{0, 0});
    CHECK(canon.translate(qshift) == pentagon);
}

TEST_CASE("edge cycle closes and matches the edge map") {
    Rng rng(47);
    for (int it = 0; it < 40; ++it) {
        Polygon2 p = random_polygon(rng, 10, 8, false);
        Vec2 total{0, 0};
        Int len = 0;
        for (const auto& [from, vec] : p.edge_cycle()) {
            total = total + vec;
            len += gcd(vec.x, vec.y);
        }
        CHECK(total == Vec2{0, 0});
        CHECK(len == p.boundary_length());
        CHECK(polygon_from_edges(p.edge_map(), p.verts()[0]) == p);
    }
}

TEST_CASE("containment and boundary") {
    CHECK(kX.contains({1, 0}));
    CHECK(kX.contains({1, 1}));
    CHECK_FALSE(kX.contains({0, 1}));
    CHECK(kX.on_boundary({1, 0}));
    CHECK_FALSE(dilate(kX, 2).on_boundary({2, 1}));

    Polygon2 seg = poly({{0, 0}, {2, 2}});
    CHECK(seg.contains({1, 1}));
    CHECK_FALSE(seg.contains({1, 0}));
    // rational midpoint of a thin triangle
    CHECK(kX.contains_scaled({3, 1}, 2));
    CHECK_FALSE(kX.contains_scaled({1, 3}, 2));
}

TEST_CASE("intersection area of convex polygons") {
    Polygon2 t1 = poly({{0, 0}, {1, 0}, {0, 1}});
    Polygon2 t2 = poly({{0, 0}, {1, 1}, {0, 1}});
    CHECK(intersection_area2(t1, t2) == Rat(1, 2));
    CHECK(intersection_area2(t1, t1) == Rat(1));
    CHECK(intersection_area2(kSquare, kSquare.translate({5, 5})) == 0);
    CHECK(intersection_area2(kSquare, kSquare.translate({1, 0})) == 0);

    auto hull = intersection_hull(kSquare, kSquare.translate({1, 0}));
    REQUIRE(hull.size() == 2);
    CHECK(hull[0] == std::pair<Rat, Rat>(Rat(1), Rat(0)));
    CHECK(hull[1] == std::pair<Rat, Rat>(Rat(1), Rat(1)));
}
