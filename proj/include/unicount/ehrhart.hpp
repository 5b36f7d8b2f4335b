#pragma once

#include <optional>
#include <vector>

#include "unicount/geom.hpp"
#include "unicount/polytope.hpp"

namespace unicount {

// exact rational coefficients of the lattice-point counting polynomial,
// lowest degree first
struct EhrhartPoly {
    std::vector<Rat> coeffs;

    Rat eval(const Int& k) const;
    bool operator==(const EhrhartPoly& o) const { return coeffs == o.coeffs; }
};

// interpolate |kP ∩ Zⁿ| at k = 1..n+1 and solve the Vandermonde system
// exactly over the rationals
EhrhartPoly ehrhart_poly(const Polygon2& p);
EhrhartPoly ehrhart_poly(const PolytopeN& p);

// relative volume of the support face in direction z: zero unless the face
// is a facet; for facets, the squared (n-1)-volume of each simplex of a
// triangulation divided by z·z admits an exact rational square root
Rat rvol_facet(const Polygon2& p, const Vec2& z);
Rat rvol_facet(const PolytopeN& p, const VecN& z);

template <class Face>
struct FaceVolume {
    Face face;
    Rat rvol;
};

// one entry per facet, in boundary order for polygons and facet order for
// polytopes
std::vector<FaceVolume<SupportFace2>> facet_volumes(const Polygon2& p);
std::vector<FaceVolume<SupportFaceN>> facet_volumes(const PolytopeN& p);

// leading coefficient = volume, second coefficient = half the facet
// relative-volume sum; both compared exactly
struct IdentityCheckReport {
    bool pass = false;
    Rat leading_coeff, volume;
    Rat second_coeff, half_rvol_sum;
};

IdentityCheckReport ehrhart_identity_check(const Polygon2& p);
IdentityCheckReport ehrhart_identity_check(const PolytopeN& p);

struct NecessaryViolation {
    VecN z;
    Rat rvol_p_pos, rvol_p_neg, rvol_q_pos, rvol_q_neg;
};

struct NecessaryReport {
    bool pass = false;
    std::optional<NecessaryViolation> violation;
};

// the facet-volume identity that equal counting functions force:
// rvol P(z) + rvol P(-z) = rvol Q(z) + rvol Q(-z) for every primitive z.
// Only the union of the facet-normal classes of p and q needs checking;
// every other direction yields 0 = 0.
NecessaryReport necessary_condition(const Polygon2& p, const Polygon2& q);
NecessaryReport necessary_condition(const PolytopeN& p, const PolytopeN& q);

// lattice width: max z·(x-y) over the body
Int width(const Polygon2& p, const Vec2& z);
Int width(const PolytopeN& p, const VecN& z);

// the planar boundary form of the width: half the sum of |z·e| over edges
Int width_boundary_formula(const Polygon2& p, const Vec2& z);

// |P ∩ Z²| = area + boundary/2 + 1 for a full-dimensional lattice polygon
Int pick_count(const Polygon2& p);

}  // namespace unicount
