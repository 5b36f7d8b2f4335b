#include "unicount/randgen.hpp"

namespace unicount {

Polygon2 random_polygon(Rng& rng, int max_points, long box, bool require_fulldim) {
    for (;;) {
        const int k = static_cast<int>(rng.uniform(require_fulldim ? 3 : 1, max_points));
        std::vector<Vec2> pts;
        pts.reserve(k);
        for (int i = 0; i < k; ++i)
            pts.push_back({Int(rng.uniform(-box, box)), Int(rng.uniform(-box, box))});
        Polygon2 p = Polygon2::from_points(pts);
        if (!require_fulldim || p.dim() == 2) return p;
    }
}

PolytopeN random_polytope(Rng& rng, int n, int max_points, long box) {
    for (;;) {
        const int k = static_cast<int>(rng.uniform(n + 1, max_points));
        std::vector<VecN> pts;
        pts.reserve(k);
        for (int i = 0; i < k; ++i) {
            VecN v(n);
            for (int j = 0; j < n; ++j) v[j] = rng.uniform(-box, box);
            pts.push_back(std::move(v));
        }
        if (affine_rank(pts) != n) continue;
        return PolytopeN::from_points(n, std::move(pts));
    }
}

std::vector<Vec2> primitive_directions(long max_norm) {
    std::vector<Vec2> out;
    for (long x = -max_norm; x <= max_norm; ++x)
        for (long y = -max_norm; y <= max_norm; ++y) {
            if (x == 0 && y == 0) continue;
            Vec2 v{x, y};
            if (gcd(v.x, v.y) == 1) out.push_back(v);
        }
    return out;
}

}  // namespace unicount
