#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "unicount/geom.hpp"
#include "unicount/polytope.hpp"

namespace unicount {

// seeded generator with a pinned draw procedure so fuzz runs and property
// tests reproduce across platforms
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    long uniform(long lo, long hi) {
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
        std::uint64_t r;
        do {
            r = eng();
        } while (r >= limit);
        return lo + static_cast<long>(r % range);
    }
};

Polygon2 random_polygon(Rng& rng, int max_points, long box, bool require_fulldim);
PolytopeN random_polytope(Rng& rng, int n, int max_points, long box);

// all primitive integer directions with max-norm up to the bound, both
// signs, deterministic order
std::vector<Vec2> primitive_directions(long max_norm);

}  // namespace unicount
