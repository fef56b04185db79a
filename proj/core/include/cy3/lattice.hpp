#pragma once

#include <compare>
#include <iosfwd>
#include <vector>

#include "cy3/types.hpp"

namespace cy3 {

/// A facet inequality normal . x <= offset with primitive integer normal.
struct Facet {
    LatticePoint normal;
    Int offset = 0;

    friend bool operator==(const Facet&, const Facet&) = default;
    friend auto operator<=>(const Facet& a, const Facet& b) {
        if (auto c = a.normal <=> b.normal; c != 0) return c;
        return a.offset <=> b.offset;
    }
};

/**
 * A full-dimensional lattice polytope in ambient dimension 2..4, stored by
 * its extreme vertices (lexicographically sorted) together with its
 * irredundant facet inequalities (primitive outward normals, sorted).
 *
 * Instances are only created through hull_from_points and are immutable, so
 * the invariants (full dimension, extreme vertices, primitive normals, every
 * vertex tight on >= dim facets) hold for every live object. Values are
 * freely shareable across threads.
 */
class LatticePolytope {
public:
    static LatticePolytope hull(std::vector<LatticePoint> points, int dim);

    int dim() const { return dim_; }
    const std::vector<LatticePoint>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }

    bool contains(const LatticePoint& z) const;
    /// Indices of the facets satisfied with equality by z.
    std::vector<int> tight_facets(const LatticePoint& z) const;

    friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;

private:
    LatticePolytope() = default;

    int dim_ = 0;
    std::vector<LatticePoint> vertices_;
    std::vector<Facet> facets_;
};

/// Convex hull of an integer point set. Throws NotFullDimensional if the
/// affine hull of the points is a proper subspace.
LatticePolytope hull_from_points(const std::vector<LatticePoint>& points, int dim);

/// P* = { y : y.x <= 1 for all x in P }. Requires the origin strictly
/// interior (OriginNotInterior) and an integral dual (NonIntegralDual,
/// carrying the rational vertices as witnesses).
LatticePolytope polar_dual(const LatticePolytope& P);

/// All lattice points of P, lexicographically sorted.
std::vector<LatticePoint> enumerate_lattice_points(const LatticePolytope& P);

/// A face of a polytope, identified by the vertices and facets through it.
struct Face {
    int dim = 0;
    std::vector<int> vertices;  // indices into the owning polytope's vertex list
    std::vector<int> facets;    // indices of all facets containing the face
    long long l = 0;            // lattice points on the face
    long long l_star = 0;       // lattice points in the relative interior
};

/// The full face lattice (dimensions 0..n, the polytope itself included as
/// the unique top face), each face with its l and l* counts. Sorted by
/// (dim, vertex set).
std::vector<Face> face_lattice(const LatticePolytope& P);

/**
 * Canonical representative of the GL(n,Z)-orbit of P: the vertex-facet
 * pairing matrix is minimized lexicographically over all facet orderings
 * (columns then sort uniquely), and each minimizing vertex order is reduced
 * to Hermite normal form by unimodular row operations; the smallest result
 * is returned. Two polytopes are unimodularly equivalent iff their normal
 * forms are equal.
 *
 * Throws TooLarge when the vertex count exceeds vertex_bound.
 */
IntMatrix normal_form(const LatticePolytope& P, int vertex_bound = 36);

bool are_equivalent(const LatticePolytope& P, const LatticePolytope& Q,
                    int vertex_bound = 36);

/// All reflexive polygons up to unimodular equivalence, found by exhaustive
/// search over vertex sets in the box [-4,4]^2 with the origin as unique
/// interior lattice point, deduplicated by normal form. Deterministic order:
/// (vertex count, lattice point count, normal form).
std::vector<LatticePolytope> enumerate_reflexive_polygons();

// ---- polytope text format ----
// line 1: "n k" (ambient dimension, point count); next k lines: n integers
// each; lines starting with '#' and blank lines are ignored. Files written
// by write_polytope round-trip bit-exactly through read -> write.

LatticePolytope read_polytope(std::istream& in);
LatticePolytope read_polytope_file(const std::string& path);
/// Reads consecutive polytope blocks until end of stream (batch input).
std::vector<LatticePolytope> read_polytopes(std::istream& in);
void write_polytope(std::ostream& out, const LatticePolytope& P);
std::string polytope_to_string(const LatticePolytope& P);

}  // namespace cy3
