#pragma once

// brute-force oracles for the tests; written directly against the
// definitions so they stay independent of the library code paths they
// cross-check

#include <vector>

#include "unicount/geom.hpp"
#include "unicount/lattice.hpp"

namespace oracle {

using unicount::Int;
using unicount::Superlattice;
using unicount::Vec2;

inline Int shoelace2(const std::vector<Vec2>& cycle) {
    Int s = 0;
    const std::size_t n = cycle.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = cycle[i];
        const Vec2& b = cycle[(i + 1) % n];
        s += a.x * b.y - a.y * b.x;
    }
    return abs(s);
}

// is u/m inside the ccw polygon given by cycle?
inline bool contains_rational(const std::vector<Vec2>& cycle, const Int& ux, const Int& uy,
                              const Int& m) {
    const std::size_t n = cycle.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = cycle[i];
        const Vec2& b = cycle[(i + 1) % n];
        Int ex = b.x - a.x, ey = b.y - a.y;
        if (ex * (uy - a.y * m) - ey * (ux - a.x * m) < 0) return false;
    }
    return true;
}

// |P ∩ L'| by scanning all candidates with denominator dividing the index
inline Int count_rational_points(const std::vector<Vec2>& cycle, const Superlattice& s) {
    const Int& m = s.index;
    Int xlo = cycle[0].x, xhi = cycle[0].x, ylo = cycle[0].y, yhi = cycle[0].y;
    for (const Vec2& v : cycle) {
        xlo = std::min(xlo, v.x);
        xhi = std::max(xhi, v.x);
        ylo = std::min(ylo, v.y);
        yhi = std::max(yhi, v.y);
    }
    Int total = 0;
    for (Int ux = xlo * m; ux <= xhi * m; ++ux)
        for (Int uy = ylo * m; uy <= yhi * m; ++uy) {
            if (!unicount::divides(m, s.rows[0][0] * ux + s.rows[1][0] * uy)) continue;
            if (!unicount::divides(m, s.rows[0][1] * ux + s.rows[1][1] * uy)) continue;
            if (contains_rational(cycle, ux, uy, m)) ++total;
        }
    return total;
}

inline Int sum_of_divisors(long m) {
    Int s = 0;
    for (long d = 1; d <= m; ++d)
        if (m % d == 0) s += d;
    return s;
}

// Minkowski sum by the definition: hull of all pairwise vertex sums
inline unicount::Polygon2 minkowski_by_pairs(const unicount::Polygon2& a,
                                             const unicount::Polygon2& b) {
    std::vector<Vec2> sums;
    for (const Vec2& u : a.verts())
        for (const Vec2& v : b.verts()) sums.push_back(u + v);
    return unicount::Polygon2::from_points(sums);
}

}  // namespace oracle
