#pragma once

#include <utility>
#include <vector>

#include "unicount/arith.hpp"

namespace unicount {

using VecN = std::vector<Int>;

Int dot(const VecN& a, const VecN& b);
VecN sub(const VecN& a, const VecN& b);
VecN neg(const VecN& v);
bool is_zero(const VecN& v);
std::pair<VecN, Int> primitive_n(const VecN& v);
VecN canonical_class_n(const VecN& z);

// exact integer determinant (Bareiss elimination), rows is square
Int det_int(std::vector<VecN> rows);

// vector orthogonal to n-1 given vectors in dimension n (cofactor
// expansion); zero when they are linearly dependent
VecN orthogonal_complement(const std::vector<VecN>& rows, int n);

// rank of the affine hull direction space of a point set
int affine_rank(const std::vector<VecN>& pts);

struct FacetN {
    VecN normal;  // primitive outward normal, normal . x <= offset
    Int offset;
    std::vector<std::size_t> vert_idx;  // vertices on the facet
};

struct SupportFaceN {
    VecN direction;
    std::vector<VecN> vertices;
    int dim = 0;
};

// Full-dimensional lattice polytope, n >= 2. Vertices are the extreme
// points sorted lexicographically; facets are the irredundant facet
// inequalities found by scanning hyperplanes through n-subsets of the
// input points with a one-sidedness filter.
class PolytopeN {
  public:
    static PolytopeN from_points(int n, std::vector<VecN> pts);

    int dim() const { return n_; }
    const std::vector<VecN>& verts() const { return verts_; }
    const std::vector<FacetN>& facets() const { return facets_; }

    SupportFaceN support_face(const VecN& z) const;
    bool contains_scaled(const VecN& u, const Int& m) const;
    std::pair<VecN, VecN> bbox() const;
    PolytopeN dilate(const Int& k) const;
    PolytopeN translate(const VecN& v) const;

  private:
    int n_ = 0;
    std::vector<VecN> verts_;
    std::vector<FacetN> facets_;
};

// fan triangulation of a full-dimensional m-polytope given by points with
// integer coordinates in dimension m; returns (m+1)-tuples of points
std::vector<std::vector<VecN>> triangulate_fulldim(const std::vector<VecN>& pts, int m);

// triangulation of a (dim-1)-face of an n-polytope into simplices kept in
// the ambient coordinates; normal is any vector nonzero on the face's
// orthogonal line
std::vector<std::vector<VecN>> triangulate_face(const std::vector<VecN>& face_pts,
                                                const VecN& normal);

// exact volume via the fan triangulation from the first vertex
Rat volume(const PolytopeN& p);

}  // namespace unicount
