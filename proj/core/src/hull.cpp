#include "cy3/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "exact.hpp"

namespace cy3 {

using detail::Wide;

namespace {

struct SimplexFacet {
    std::vector<int> verts;  // n point ids, sorted
    LatticePoint normal;     // outward, integer, not necessarily primitive
    Int offset = 0;          // normal . v = offset on the facet hyperplane
    bool alive = true;
};

// Orientation of p against a facet: > 0 means strictly outside.
Wide side(const SimplexFacet& f, const LatticePoint& p) {
    Wide s = 0;
    for (size_t i = 0; i < p.size(); ++i) s += Wide(f.normal[i]) * p[i];
    return s - Wide(f.offset);
}

// Builds the facet spanned by the given point ids, oriented away from the
// scaled interior reference point ref_num / ref_den.
SimplexFacet make_facet(const std::vector<LatticePoint>& pts, std::vector<int> ids,
                        const LatticePoint& ref_num, Int ref_den, int n) {
    std::sort(ids.begin(), ids.end());
    std::vector<LatticePoint> diffs;
    const LatticePoint& base = pts[static_cast<size_t>(ids[0])];
    for (size_t i = 1; i < ids.size(); ++i)
        diffs.push_back(detail::sub(pts[static_cast<size_t>(ids[i])], base));
    LatticePoint normal = detail::cross_normal(diffs, n);
    Int offset = detail::dot(normal, base);
    Wide ref_side = Wide(detail::dot(normal, ref_num)) - Wide(ref_den) * offset;
    if (ref_side == 0) throw Error("internal: degenerate hull facet");
    if (ref_side > 0) {
        for (Int& x : normal) x = -x;
        offset = -offset;
    }
    return SimplexFacet{std::move(ids), std::move(normal), offset, true};
}

std::vector<int> ridge_of(const std::vector<int>& verts, size_t omit) {
    std::vector<int> r;
    r.reserve(verts.size() - 1);
    for (size_t i = 0; i < verts.size(); ++i)
        if (i != omit) r.push_back(verts[i]);
    return r;
}

}  // namespace

LatticePolytope LatticePolytope::hull(std::vector<LatticePoint> points, int dim) {
    if (dim < 2 || dim > 4) throw PreconditionError("ambient dimension must be 2..4");
    if (points.empty()) throw PreconditionError("empty point set");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dim)
            throw PreconditionError("point dimension does not match ambient dimension");

    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    const size_t n = static_cast<size_t>(dim);

    // Greedy affinely independent seed simplex.
    std::vector<int> seed{0};
    for (size_t i = 1; i < points.size() && seed.size() <= n; ++i) {
        std::vector<LatticePoint> probe;
        for (int id : seed) probe.push_back(points[static_cast<size_t>(id)]);
        probe.push_back(points[i]);
        if (detail::affine_rank(probe) == static_cast<int>(seed.size()))
            seed.push_back(static_cast<int>(i));
    }
    if (seed.size() != n + 1)
        throw NotFullDimensional("affine hull has dimension below the ambient dimension");

    // Fixed interior reference: the seed simplex centroid, kept as a scaled
    // integer vector. It stays strictly interior to every later hull.
    LatticePoint ref_num(n, 0);
    for (int id : seed)
        for (size_t j = 0; j < n; ++j) ref_num[j] += points[static_cast<size_t>(id)][j];
    const Int ref_den = static_cast<Int>(n) + 1;

    std::vector<SimplexFacet> facets;
    std::map<std::vector<int>, std::vector<int>> ridges;  // ridge -> facet ids

    auto add_facet = [&](std::vector<int> ids) {
        SimplexFacet f = make_facet(points, std::move(ids), ref_num, ref_den, dim);
        int fid = static_cast<int>(facets.size());
        for (size_t i = 0; i < f.verts.size(); ++i)
            ridges[ridge_of(f.verts, i)].push_back(fid);
        facets.push_back(std::move(f));
    };

    for (size_t omit = 0; omit < seed.size(); ++omit)
        add_facet(ridge_of(seed, omit));

    std::set<int> in_seed(seed.begin(), seed.end());
    for (size_t pid = 0; pid < points.size(); ++pid) {
        if (in_seed.count(static_cast<int>(pid))) continue;
        const LatticePoint& p = points[pid];

        std::vector<int> visible;
        for (size_t i = 0; i < facets.size(); ++i)
            if (facets[i].alive && side(facets[i], p) > 0) visible.push_back(static_cast<int>(i));
        if (visible.empty()) continue;  // inside or on the current hull

        // Horizon: ridges between a visible facet and an invisible one.
        std::vector<std::vector<int>> horizon;
        std::set<int> vis(visible.begin(), visible.end());
        for (int fid : visible) {
            const auto& f = facets[static_cast<size_t>(fid)];
            for (size_t i = 0; i < f.verts.size(); ++i) {
                std::vector<int> r = ridge_of(f.verts, i);
                for (int other : ridges[r])
                    if (other != fid && facets[static_cast<size_t>(other)].alive &&
                        !vis.count(other))
                        horizon.push_back(r);
            }
        }

        for (int fid : visible) {
            auto& f = facets[static_cast<size_t>(fid)];
            f.alive = false;
            for (size_t i = 0; i < f.verts.size(); ++i) {
                auto& owners = ridges[ridge_of(f.verts, i)];
                owners.erase(std::remove(owners.begin(), owners.end(), fid), owners.end());
            }
        }
        for (auto& r : horizon) {
            r.push_back(static_cast<int>(pid));
            add_facet(std::move(r));
        }
    }

    // Collapse the simplicial cover onto distinct supporting hyperplanes.
    std::map<std::pair<LatticePoint, Int>, bool> hyperplanes;
    std::set<int> corners;
    for (const auto& f : facets) {
        if (!f.alive) continue;
        LatticePoint normal = f.normal;
        Int g = detail::gcd_of(normal);
        if (g == 0) throw Error("internal: zero facet normal");
        for (Int& x : normal) x /= g;
        hyperplanes[{std::move(normal), f.offset / g}] = true;
        corners.insert(f.verts.begin(), f.verts.end());
    }

    std::vector<Facet> final_facets;
    final_facets.reserve(hyperplanes.size());
    for (const auto& [key, _] : hyperplanes) final_facets.push_back(Facet{key.first, key.second});

    // A corner is a vertex iff its tight facet normals span the full space.
    std::vector<LatticePoint> verts;
    for (int id : corners) {
        const LatticePoint& v = points[static_cast<size_t>(id)];
        std::vector<LatticePoint> tight;
        for (const auto& f : final_facets)
            if (detail::dot(f.normal, v) == f.offset) tight.push_back(f.normal);
        if (detail::linear_rank_points(tight) == dim) verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());

    // Safety net: every input point must satisfy every facet inequality.
    for (const auto& p : points)
        for (const auto& f : final_facets)
            if (detail::dot(f.normal, p) > f.offset) throw Error("internal: hull misses a point");

    LatticePolytope P;
    P.dim_ = dim;
    P.vertices_ = std::move(verts);
    P.facets_ = std::move(final_facets);
    return P;
}

LatticePolytope hull_from_points(const std::vector<LatticePoint>& points, int dim) {
    return LatticePolytope::hull(points, dim);
}

bool LatticePolytope::contains(const LatticePoint& z) const {
    for (const auto& f : facets_)
        if (detail::dot(f.normal, z) > f.offset) return false;
    return true;
}

std::vector<int> LatticePolytope::tight_facets(const LatticePoint& z) const {
    std::vector<int> t;
    for (size_t i = 0; i < facets_.size(); ++i)
        if (detail::dot(facets_[i].normal, z) == facets_[i].offset)
            t.push_back(static_cast<int>(i));
    return t;
}

LatticePolytope polar_dual(const LatticePolytope& P) {
    for (const auto& f : P.facets())
        if (f.offset <= 0)
            throw OriginNotInterior("origin is not strictly interior");

    std::vector<LatticePoint> dual_points;
    std::vector<std::vector<Rational>> witnesses;
    for (const auto& f : P.facets()) {
        if (f.offset == 1) {
            dual_points.push_back(f.normal);
            continue;
        }
        bool integral = true;
        for (Int x : f.normal)
            if (x % f.offset != 0) integral = false;
        if (integral) {
            LatticePoint v = f.normal;
            for (Int& x : v) x /= f.offset;
            dual_points.push_back(std::move(v));
        } else {
            std::vector<Rational> w;
            w.reserve(f.normal.size());
            for (Int x : f.normal) w.emplace_back(x, f.offset);
            witnesses.push_back(std::move(w));
        }
    }
    if (!witnesses.empty())
        throw NonIntegralDual("polar dual has non-integral vertices", std::move(witnesses));

    LatticePolytope D = LatticePolytope::hull(dual_points, P.dim());
    if (D.vertices().size() != P.facets().size())
        throw Error("internal: polar dual vertex/facet mismatch");
    return D;
}

namespace {

// Greedy unimodular reduction of the coordinate basis: repeated integer row
// shears that shrink the vertex bounding box, with coordinates shifted to
// start at 0. Sheared inputs would otherwise make the box scan intractable;
// the reduced polytope is scanned instead and its points are mapped back
// exactly. Works with tv = W v - shift and returns (tv, winv, shift).
struct ReducedCoords {
    std::vector<LatticePoint> tv;
    IntMatrix winv;
    LatticePoint shift;
};

ReducedCoords reduce_basis(const std::vector<LatticePoint>& verts, int n) {
    ReducedCoords rc;
    rc.tv = verts;
    rc.winv.assign(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) rc.winv[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    rc.shift.assign(static_cast<size_t>(n), 0);

    auto extent = [&](int i) {
        Int mn = rc.tv[0][static_cast<size_t>(i)], mx = mn;
        for (const auto& v : rc.tv) {
            mn = std::min(mn, v[static_cast<size_t>(i)]);
            mx = std::max(mx, v[static_cast<size_t>(i)]);
        }
        return std::pair<Int, Int>(mn, mx);
    };
    auto rebase = [&](int i) {
        auto [mn, mx] = extent(i);
        (void)mx;
        if (mn == 0) return;
        for (auto& v : rc.tv) v[static_cast<size_t>(i)] -= mn;
        rc.shift[static_cast<size_t>(i)] += mn;
    };
    for (int i = 0; i < n; ++i) rebase(i);

    // Spread form of the current coordinates: G[i][j] = sum over vertex
    // pairs of the product of their differences in coordinates i and j.
    // G[i][i] measures the squared spread of coordinate i; greedy pairwise
    // reduction with the rounded Gram coefficient is near-optimal in
    // dimension <= 4.
    auto gram = [&](int i, int j) {
        Wide s = 0;
        for (size_t v = 0; v < rc.tv.size(); ++v)
            for (size_t w = v + 1; w < rc.tv.size(); ++w)
                s += (Wide(rc.tv[v][static_cast<size_t>(i)]) - rc.tv[w][static_cast<size_t>(i)]) *
                     (Wide(rc.tv[v][static_cast<size_t>(j)]) - rc.tv[w][static_cast<size_t>(j)]);
        return s;
    };
    auto nearest = [](Wide p, Wide q) {  // round(p / q) for q > 0
        Wide two_p = 2 * p + q;
        Wide k = two_p / (2 * q);
        if (two_p % (2 * q) < 0) --k;
        return detail::narrow(k);
    };
    auto shear = [&](int i, int j, Int k) {  // row_i -= k row_j
        for (auto& v : rc.tv)
            v[static_cast<size_t>(i)] = detail::narrow(
                Wide(v[static_cast<size_t>(i)]) - Wide(k) * v[static_cast<size_t>(j)]);
        // winv <- winv * E^{-1} with E: row_i -= k row_j
        for (int r = 0; r < n; ++r)
            rc.winv[static_cast<size_t>(r)][static_cast<size_t>(j)] = detail::narrow(
                Wide(rc.winv[static_cast<size_t>(r)][static_cast<size_t>(j)]) +
                Wide(k) * rc.winv[static_cast<size_t>(r)][static_cast<size_t>(i)]);
        // the shift transforms with the same row operation
        rc.shift[static_cast<size_t>(i)] = detail::narrow(
            Wide(rc.shift[static_cast<size_t>(i)]) -
            Wide(k) * rc.shift[static_cast<size_t>(j)]);
        rebase(i);
    };

    for (int pass = 0; pass < 200; ++pass) {
        bool improved = false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                Wide gjj = gram(j, j);
                if (gjj == 0) continue;
                Int k = nearest(gram(i, j), gjj);
                if (k == 0) continue;
                Wide gii = gram(i, i), gij = gram(i, j);
                Wide after = gii - 2 * Wide(k) * gij + Wide(k) * k * gjj;
                if (after < gii) {
                    shear(i, j, k);
                    improved = true;
                }
            }
        if (!improved) break;
    }
    return rc;
}

}  // namespace

std::vector<LatticePoint> enumerate_lattice_points(const LatticePolytope& P) {
    const int n = P.dim();
    ReducedCoords rc = reduce_basis(P.vertices(), n);

    // facets in reduced coordinates: a_Q = a_P winv, c_Q = c - a_Q . shift
    std::vector<LatticePoint> qnormals;
    std::vector<Int> qoffsets;
    for (const auto& f : P.facets()) {
        LatticePoint a(static_cast<size_t>(n), 0);
        for (int c = 0; c < n; ++c) {
            Wide s = 0;
            for (int r = 0; r < n; ++r)
                s += Wide(f.normal[static_cast<size_t>(r)]) *
                     rc.winv[static_cast<size_t>(r)][static_cast<size_t>(c)];
            a[static_cast<size_t>(c)] = detail::narrow(s);
        }
        Wide off = f.offset;
        for (int c = 0; c < n; ++c) off -= Wide(a[static_cast<size_t>(c)]) * rc.shift[static_cast<size_t>(c)];
        qnormals.push_back(std::move(a));
        qoffsets.push_back(detail::narrow(off));
    }

    LatticePoint lo(static_cast<size_t>(n)), hi(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        Int mn = rc.tv[0][static_cast<size_t>(j)], mx = mn;
        for (const auto& v : rc.tv) {
            mn = std::min(mn, v[static_cast<size_t>(j)]);
            mx = std::max(mx, v[static_cast<size_t>(j)]);
        }
        lo[static_cast<size_t>(j)] = mn;
        hi[static_cast<size_t>(j)] = mx;
    }

    std::vector<LatticePoint> out;
    LatticePoint y(static_cast<size_t>(n));
    auto emit = [&]() {
        for (size_t i = 0; i < qnormals.size(); ++i) {
            Wide s = 0;
            for (int c = 0; c < n; ++c) s += Wide(qnormals[i][static_cast<size_t>(c)]) * y[static_cast<size_t>(c)];
            if (s > qoffsets[i]) return;
        }
        LatticePoint x(static_cast<size_t>(n), 0);
        for (int r = 0; r < n; ++r) {
            Wide s = 0;
            for (int c = 0; c < n; ++c)
                s += Wide(rc.winv[static_cast<size_t>(r)][static_cast<size_t>(c)]) *
                     (Wide(y[static_cast<size_t>(c)]) + rc.shift[static_cast<size_t>(c)]);
            x[static_cast<size_t>(r)] = detail::narrow(s);
        }
        out.push_back(std::move(x));
    };
    auto scan = [&](auto&& self, int coord) -> void {
        if (coord == n) {
            emit();
            return;
        }
        for (Int v = lo[static_cast<size_t>(coord)]; v <= hi[static_cast<size_t>(coord)]; ++v) {
            y[static_cast<size_t>(coord)] = v;
            self(self, coord + 1);
        }
    };
    scan(scan, 0);

    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Face> face_lattice(const LatticePolytope& P) {
    const auto& V = P.vertices();
    const auto& F = P.facets();

    // Vertex sets of the facets.
    std::vector<std::vector<int>> facet_verts(F.size());
    for (size_t i = 0; i < F.size(); ++i)
        for (size_t j = 0; j < V.size(); ++j)
            if (detail::dot(F[i].normal, V[j]) == F[i].offset)
                facet_verts[i].push_back(static_cast<int>(j));

    // Every face is an intersection of facets; close the facet vertex sets
    // under pairwise intersection, seeded with the top face.
    std::set<std::vector<int>> known;
    std::vector<int> top(V.size());
    for (size_t j = 0; j < V.size(); ++j) top[j] = static_cast<int>(j);
    known.insert(top);
    for (const auto& fv : facet_verts) known.insert(fv);
    std::vector<std::vector<int>> work(known.begin(), known.end());
    while (!work.empty()) {
        std::vector<int> cur = std::move(work.back());
        work.pop_back();
        for (const auto& fv : facet_verts) {
            std::vector<int> inter;
            std::set_intersection(cur.begin(), cur.end(), fv.begin(), fv.end(),
                                  std::back_inserter(inter));
            if (inter.empty()) continue;
            if (known.insert(inter).second) work.push_back(std::move(inter));
        }
    }

    // Tight-facet masks of all lattice points, for the l / l* counts.
    const size_t words = (F.size() + 63) / 64;
    auto points = enumerate_lattice_points(P);
    std::vector<std::vector<std::uint64_t>> point_mask(points.size(),
                                                       std::vector<std::uint64_t>(words, 0));
    for (size_t p = 0; p < points.size(); ++p)
        for (size_t i = 0; i < F.size(); ++i)
            if (detail::dot(F[i].normal, points[p]) == F[i].offset)
                point_mask[p][i / 64] |= (std::uint64_t{1} << (i % 64));

    std::vector<Face> faces;
    for (const auto& vs : known) {
        Face face;
        face.vertices = vs;
        std::vector<std::uint64_t> mask(words, 0);
        for (size_t i = 0; i < F.size(); ++i) {
            bool contains_all = std::includes(facet_verts[i].begin(), facet_verts[i].end(),
                                              vs.begin(), vs.end());
            if (contains_all) {
                face.facets.push_back(static_cast<int>(i));
                mask[i / 64] |= (std::uint64_t{1} << (i % 64));
            }
        }
        std::vector<LatticePoint> coords;
        for (int id : vs) coords.push_back(V[static_cast<size_t>(id)]);
        face.dim = detail::affine_rank(coords);
        for (const auto& pm : point_mask) {
            bool superset = true, equal = true;
            for (size_t w = 0; w < words; ++w) {
                if ((pm[w] & mask[w]) != mask[w]) superset = false;
                if (pm[w] != mask[w]) equal = false;
            }
            if (superset) {
                ++face.l;
                if (equal) ++face.l_star;
            }
        }
        faces.push_back(std::move(face));
    }

    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.vertices < b.vertices;
    });
    return faces;
}

}  // namespace cy3
