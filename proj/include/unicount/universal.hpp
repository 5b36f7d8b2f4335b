#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unicount/geom.hpp"

namespace unicount {

// direction-class key (canonical representative of {z,-z}) mapped to the
// summed lattice lengths of the two support faces with normals z and -z;
// zero entries are omitted
using EdgeProfile = std::map<Vec2, Int>;

EdgeProfile edge_profile(const Polygon2& p);

struct Decision {
    bool equal = false;
    std::string fail;  // "area", "profile" or "degenerate" when unequal
    std::optional<Vec2> witness_class;
    Int area_p = 0, area_q = 0;
};

// exact planar decision: the counting functions of p and q agree over all
// superlattices iff the areas and the edge profiles agree
Decision equal_universal_2d(const Polygon2& p, const Polygon2& q);

// summands certifying p and q as a Minkowski sum/difference pair:
// minkowski_sum(x,y) + shift_p == p and minkowski_sum(x,reflect(y)) +
// shift_q == q, checked before returning
struct DecompWitness {
    Polygon2 x, y;
    Vec2 shift_p, shift_q;
};

DecompWitness decompose(const Polygon2& p, const Polygon2& q);

struct SynthReport {
    Polygon2 p, q;
    Int area2_p = 0, area2_q = 0;
    Decision decision;
};

// build the sum/difference pair of x and y; the verdict reduces to area
// equality because the edge profiles of the pair always agree
SynthReport synth(const Polygon2& x, const Polygon2& y);

// reflection through the origin (optional) followed by a lattice
// translation
struct Motion {
    Vec2 translate;
    bool reflected = false;
};

struct EquidecompCert {
    std::vector<Polygon2> pieces_p, pieces_q;
    std::vector<Motion> motions;
};

struct VerifyReport {
    bool pass = false;
    std::string failed_check;  // "a".."f"
    std::string side;          // "p" or "q" where applicable
    long piece_i = -1, piece_j = -1;
    Rat intersection_area2;
    std::string message;
};

// checks, in order: (a) pieces lie inside their polygon, (b) interiors of
// full-dimensional pieces are pairwise disjoint, (c) piece areas sum to
// the whole, (d) any two closures meet in a common face, (e) motion i
// carries piece i of p exactly onto piece i of q, (f) a low-dimensional
// piece lies on the boundary of p iff its partner lies on the boundary
// of q
VerifyReport verify_equidecomposition(const Polygon2& p, const Polygon2& q,
                                      const EquidecompCert& cert);

}  // namespace unicount
