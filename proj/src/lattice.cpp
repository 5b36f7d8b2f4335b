#include "unicount/lattice.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace unicount {

bool operator==(const Superlattice& a, const Superlattice& b) {
    return a.dim == b.dim && a.rows == b.rows;
}

namespace {

Int matrix_det(const std::vector<VecN>& rows) { return det_int(rows); }

void check_square(int n, const std::vector<VecN>& rows) {
    if (n < 1 || static_cast<int>(rows.size()) != n)
        throw input_error("lattice matrix must be square");
    for (const VecN& r : rows)
        if (static_cast<int>(r.size()) != n) throw input_error("lattice matrix must be square");
}

void swap_cols(std::vector<VecN>& h, int a, int b) {
    for (VecN& row : h) std::swap(row[a], row[b]);
}

// col_j -= q * col_i
void submul_col(std::vector<VecN>& h, int j, int i, const Int& q) {
    if (q == 0) return;
    for (VecN& row : h) row[j] -= q * row[i];
}

}  // namespace

Superlattice hnf_canonicalize(int n, std::vector<VecN> rows) {
    check_square(n, rows);
    if (matrix_det(rows) == 0) throw input_error("non-invertible lattice matrix");

    // upper-triangularize by integer column operations, bottom row first
    for (int i = n - 1; i >= 0; --i) {
        for (;;) {
            int j = -1;
            for (int c = 0; c < i; ++c)
                if (rows[i][c] != 0) {
                    j = c;
                    break;
                }
            if (j < 0) break;
            if (rows[i][i] == 0) {
                swap_cols(rows, i, j);
                continue;
            }
            Int q = floor_div(rows[i][j], rows[i][i]);
            submul_col(rows, j, i, q);
            if (rows[i][j] != 0) swap_cols(rows, i, j);
        }
        if (rows[i][i] < 0)
            for (VecN& row : rows) row[i] = -row[i];
        if (rows[i][i] == 0) throw input_error("non-invertible lattice matrix");
    }
    // reduce entries right of the diagonal modulo the row's diagonal
    for (int i = n - 1; i >= 0; --i)
        for (int j = i + 1; j < n; ++j) submul_col(rows, j, i, floor_div(rows[i][j], rows[i][i]));

    Superlattice s;
    s.dim = n;
    s.index = 1;
    for (int i = 0; i < n; ++i) s.index *= rows[i][i];
    s.rows = std::move(rows);
    return s;
}

namespace {

void diag_tuples(int pos, int n, const Int& remaining, VecN& cur, std::vector<VecN>& out) {
    if (pos == n - 1) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (Int d = 1; d <= remaining; ++d) {
        if (!divides(d, remaining)) continue;
        cur[pos] = d;
        diag_tuples(pos + 1, n, remaining / d, cur, out);
    }
}

void offdiag_fill(int n, const VecN& diag, std::vector<Superlattice>& out) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.push_back({i, j});

    std::vector<VecN> h(n, VecN(n, 0));
    for (int i = 0; i < n; ++i) h[i][i] = diag[i];

    VecN vals(slots.size(), 0);
    for (;;) {
        Superlattice s;
        s.dim = n;
        s.rows = h;
        for (std::size_t k = 0; k < slots.size(); ++k)
            s.rows[slots[k].first][slots[k].second] = vals[k];
        s.index = 1;
        for (int i = 0; i < n; ++i) s.index *= diag[i];
        out.push_back(std::move(s));

        std::size_t k = 0;
        while (k < slots.size()) {
            vals[k] += 1;
            if (vals[k] < diag[slots[k].first]) break;
            vals[k] = 0;
            ++k;
        }
        if (k == slots.size()) break;
    }
}

std::vector<Int> flatten(const Superlattice& s) {
    std::vector<Int> f;
    for (const VecN& r : s.rows) f.insert(f.end(), r.begin(), r.end());
    return f;
}

}  // namespace

std::vector<Superlattice> enumerate_superlattices(int n, const Int& index) {
    if (n < 1) throw input_error("dimension must be positive");
    if (index < 1) throw input_error("index must be positive");
    std::vector<VecN> diags;
    VecN cur(n);
    diag_tuples(0, n, index, cur, diags);
    std::vector<Superlattice> out;
    for (const VecN& d : diags) offdiag_fill(n, d, out);
    std::sort(out.begin(), out.end(),
              [](const Superlattice& a, const Superlattice& b) { return flatten(a) < flatten(b); });
    return out;
}

Int superlattice_count(int n, const Int& index) {
    std::vector<VecN> diags;
    VecN cur(n);
    diag_tuples(0, n, index, cur, diags);
    Int total = 0;
    for (const VecN& d : diags) {
        Int combos = 1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) combos *= d[i];
        total += combos;
    }
    return total;
}

Superlattice dilation(const std::vector<Int>& factors) {
    const int n = static_cast<int>(factors.size());
    if (n < 1) throw input_error("dilation needs at least one factor");
    Superlattice s;
    s.dim = n;
    s.rows.assign(n, VecN(n, 0));
    s.index = 1;
    for (int i = 0; i < n; ++i) {
        if (factors[i] < 1) throw input_error("dilation factors must be positive");
        s.rows[i][i] = factors[i];
        s.index *= factors[i];
    }
    return s;
}

Vec2 apply(const Superlattice& s, const Vec2& v) {
    if (s.dim != 2) throw input_error("dimension mismatch");
    return {v.x * s.rows[0][0] + v.y * s.rows[1][0], v.x * s.rows[0][1] + v.y * s.rows[1][1]};
}

VecN apply(const Superlattice& s, const VecN& v) {
    if (static_cast<int>(v.size()) != s.dim) throw input_error("dimension mismatch");
    VecN w(s.dim, 0);
    for (int j = 0; j < s.dim; ++j)
        for (int i = 0; i < s.dim; ++i) w[j] += v[i] * s.rows[i][j];
    return w;
}

Polygon2 image_polygon(const Polygon2& p, const Superlattice& s) {
    std::vector<Vec2> vs;
    vs.reserve(p.size());
    for (const Vec2& v : p.verts()) vs.push_back(apply(s, v));
    return Polygon2::from_points(vs);
}

PolytopeN image_polytope(const PolytopeN& p, const Superlattice& s) {
    std::vector<VecN> vs;
    vs.reserve(p.verts().size());
    for (const VecN& v : p.verts()) vs.push_back(apply(s, v));
    return PolytopeN::from_points(p.dim(), std::move(vs));
}

Int count_points(const Polygon2& p, const Superlattice& s) {
    return lattice_points_in(image_polygon(p, s));
}

namespace {

long to_long(const Int& v, const char* what) {
    if (!v.fits_slong_p()) throw input_error(what);
    return v.get_si();
}

// integer points of poly within one slab x₀ = fixed of the bounding box;
// facet tests run allocation-free via mpz_addmul
Int count_slab(const PolytopeN& poly, const Int& x0, const VecN& lo, const VecN& hi) {
    const int n = poly.dim();
    VecN u(n);
    u[0] = x0;
    Int total = 0, acc;
    const auto& facets = poly.facets();
    // odometer over coordinates 1..n-1
    for (int j = 1; j < n; ++j) u[j] = lo[j];
    for (;;) {
        bool inside = true;
        for (const FacetN& f : facets) {
            acc = 0;
            for (int i = 0; i < n; ++i)
                mpz_addmul(acc.get_mpz_t(), f.normal[i].get_mpz_t(), u[i].get_mpz_t());
            if (acc > f.offset) {
                inside = false;
                break;
            }
        }
        if (inside) ++total;
        int j = 1;
        while (j < n) {
            ++u[j];
            if (u[j] <= hi[j]) break;
            u[j] = lo[j];
            ++j;
        }
        if (j == n) break;
    }
    return total;
}

Int count_box(const PolytopeN& poly) {
    const auto bb = poly.bbox();
    const VecN& lo = bb.first;
    const VecN& hi = bb.second;
    const long first = to_long(lo[0], "bounding box too large");
    const long last = to_long(hi[0], "bounding box too large");
    const long slabs = last - first + 1;
    std::vector<Int> partial(static_cast<std::size_t>(slabs));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (slabs > 8)
#endif
    for (long i = 0; i < slabs; ++i)
        partial[static_cast<std::size_t>(i)] = count_slab(poly, Int(first + i), lo, hi);
    Int total = 0;
    for (const Int& c : partial) total += c;
    return total;
}

}  // namespace

Int lattice_points_in(const PolytopeN& p) { return count_box(p); }

Int count_points(const PolytopeN& p, const Superlattice& s) {
    return count_box(image_polytope(p, s));
}

CountRecord count_record(const Polygon2& p, const Superlattice& s) {
    return {s, count_points(p, s)};
}

CountRecord count_record(const PolytopeN& p, const Superlattice& s) {
    return {s, count_points(p, s)};
}

Int count_points_brute(const Polygon2& p, const Superlattice& s) {
    if (s.dim != 2) throw input_error("dimension mismatch");
    const Int& m = s.index;
    auto [lo, hi] = p.bbox();
    const Int xlo = lo.x * m, xhi = hi.x * m, ylo = lo.y * m, yhi = hi.y * m;
    const Int ax = s.rows[0][0], ay = s.rows[1][0];
    const Int bx = s.rows[0][1], by = s.rows[1][1];
    Int total = 0;
    Vec2 u;
    Int c0, c1;
    for (Int x = xlo; x <= xhi; ++x) {
        for (Int y = ylo; y <= yhi; ++y) {
            c0 = ax * x;
            c0 += ay * y;
            if (!divides(m, c0)) continue;
            c1 = bx * x;
            c1 += by * y;
            if (!divides(m, c1)) continue;
            u.x = x;
            u.y = y;
            if (p.contains_scaled(u, m)) ++total;
        }
    }
    return total;
}

Int count_points_brute(const PolytopeN& p, const Superlattice& s) {
    if (s.dim != p.dim()) throw input_error("dimension mismatch");
    const Int& m = s.index;
    const int n = p.dim();
    auto [lo, hi] = p.bbox();
    VecN u(n);
    for (int j = 0; j < n; ++j) u[j] = lo[j] * m;
    Int total = 0;
    for (;;) {
        bool member = true;
        for (int j = 0; j < n && member; ++j) {
            Int c = 0;
            for (int i = 0; i < n; ++i) c += s.rows[i][j] * u[i];
            member = divides(m, c);
        }
        if (member && p.contains_scaled(u, m)) ++total;
        int j = 0;
        while (j < n) {
            ++u[j];
            if (u[j] <= hi[j] * m) break;
            u[j] = lo[j] * m;
            ++j;
        }
        if (j == n) break;
    }
    return total;
}

namespace {

Int box_volume(const std::pair<Vec2, Vec2>& bb) {
    return (bb.second.x - bb.first.x + 1) * (bb.second.y - bb.first.y + 1);
}

Int box_volume(const std::pair<VecN, VecN>& bb) {
    Int v = 1;
    for (std::size_t j = 0; j < bb.first.size(); ++j) v *= bb.second[j] - bb.first[j] + 1;
    return v;
}

template <class Body>
int body_dim(const Body& b);

template <>
int body_dim(const Polygon2&) {
    return 2;
}

template <>
int body_dim(const PolytopeN& b) {
    return b.dim();
}

template <class Body>
SweepReport sweep_impl(const Body& p, const Body& q, long max_index, int jobs,
                       const Int& budget) {
    if (body_dim(p) != body_dim(q)) throw input_error("dimension mismatch");
    if (max_index < 1) throw input_error("max index must be positive");

    Int work = Int(max_index) * (box_volume(p.bbox()) + box_volume(q.bbox()));
    if (work > budget)
        throw budget_error("sweep work estimate " + work.get_str() +
                           " exceeds budget " + budget.get_str() +
                           " (set UNICOUNT_BUDGET to raise it)");

    SweepReport report;
    const int n = body_dim(p);
    for (long m = 1; m <= max_index; ++m) {
        std::vector<Superlattice> lats = enumerate_superlattices(n, m);
        const std::size_t cnt = lats.size();
        if (jobs == 1) {
            for (const Superlattice& lat : lats) {
                Int cp = count_points(p, lat);
                Int cq = count_points(q, lat);
                report.tested += 1;
                if (cp != cq) {
                    report.discrepancy = SweepDiscrepancy{lat, cp, cq};
                    return report;
                }
            }
        } else {
            std::vector<Int> cps(cnt), cqs(cnt);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs > 0 ? jobs : omp_get_max_threads())
#endif
            for (long i = 0; i < static_cast<long>(cnt); ++i) {
                cps[i] = count_points(p, lats[i]);
                cqs[i] = count_points(q, lats[i]);
            }
            for (std::size_t i = 0; i < cnt; ++i) {
                report.tested += 1;
                if (cps[i] != cqs[i]) {
                    report.discrepancy = SweepDiscrepancy{lats[i], cps[i], cqs[i]};
                    return report;
                }
            }
        }
    }
    return report;
}

}  // namespace

SweepReport sweep(const Polygon2& p, const Polygon2& q, long max_index, int jobs,
                  const Int& budget) {
    return sweep_impl(p, q, max_index, jobs, budget);
}

SweepReport sweep(const PolytopeN& p, const PolytopeN& q, long max_index, int jobs,
                  const Int& budget) {
    return sweep_impl(p, q, max_index, jobs, budget);
}

}  // namespace unicount
