#pragma once

#include <optional>
#include <vector>

#include "unicount/geom.hpp"
#include "unicount/polytope.hpp"

namespace unicount {

// Finite-index superlattice of Zⁿ, stored as its forward map: an upper
// triangular integer matrix H with positive diagonal and each entry right
// of the diagonal reduced modulo the diagonal entry of its row. A point x
// belongs to the superlattice iff the row-vector product x·H is integral,
// so counting |P ∩ L'| reduces to counting lattice points of the image
// polytope. Exactly one canonical H exists per superlattice of given
// index.
struct Superlattice {
    int dim = 0;
    std::vector<VecN> rows;  // H, row-major
    Int index = 1;           // det(H) = product of the diagonal
};

bool operator==(const Superlattice& a, const Superlattice& b);

// reduce an arbitrary nonsingular integer matrix to the canonical
// representative of its superlattice (column operations only)
Superlattice hnf_canonicalize(int n, std::vector<VecN> rows);

// all canonical superlattices of the given index, ordered by the
// lexicographic order of the flattened matrix; σ(index) of them when n=2
std::vector<Superlattice> enumerate_superlattices(int n, const Int& index);

// number of superlattices of each index 1..max_index (no materialization)
Int superlattice_count(int n, const Int& index);

// diagonal superlattice diag(k₁,...,kₙ); counting against it evaluates
// the anisotropic dilation x ↦ (k₁x₁,...,kₙxₙ)
Superlattice dilation(const std::vector<Int>& factors);

Vec2 apply(const Superlattice& s, const Vec2& v);
VecN apply(const Superlattice& s, const VecN& v);

Polygon2 image_polygon(const Polygon2& p, const Superlattice& s);
PolytopeN image_polytope(const PolytopeN& p, const Superlattice& s);

// |P ∩ Zⁿ| by bounding-box enumeration with facet tests (OpenMP over the
// outer axis)
Int lattice_points_in(const PolytopeN& p);

// |P ∩ L'| via the image polytope: Pick's formula in the plane, bounding
// box enumeration with facet tests otherwise
Int count_points(const Polygon2& p, const Superlattice& s);
Int count_points(const PolytopeN& p, const Superlattice& s);

// one evaluation of the counting function, tagged with its superlattice
struct CountRecord {
    Superlattice lattice;
    Int count;
};

CountRecord count_record(const Polygon2& p, const Superlattice& s);
CountRecord count_record(const PolytopeN& p, const Superlattice& s);

// independent serial reference: enumerate rational candidates with
// denominators dividing the index inside the bounding box of P and test
// superlattice membership and facet inequalities directly
Int count_points_brute(const Polygon2& p, const Superlattice& s);
Int count_points_brute(const PolytopeN& p, const Superlattice& s);

struct SweepDiscrepancy {
    Superlattice lattice;
    Int count_p, count_q;
};

struct SweepReport {
    Int tested = 0;
    std::optional<SweepDiscrepancy> discrepancy;
};

inline const long kDefaultSweepBudget = 100000000;

// compare |P ∩ L'| and |Q ∩ L'| over every superlattice of index
// 1..max_index in canonical order and report the first discrepancy.
// jobs == 1 is the serial reference; jobs != 1 maps each index block in
// parallel (jobs == 0 uses the OpenMP default) with identical output.
SweepReport sweep(const Polygon2& p, const Polygon2& q, long max_index, int jobs = 1,
                  const Int& budget = kDefaultSweepBudget);
SweepReport sweep(const PolytopeN& p, const PolytopeN& q, long max_index, int jobs = 1,
                  const Int& budget = kDefaultSweepBudget);

}  // namespace unicount
