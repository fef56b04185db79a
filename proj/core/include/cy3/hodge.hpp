#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cy3/lattice.hpp"

namespace cy3 {

/// (a, b) = (h^{1,1}, h^{1,2}) of a Calabi-Yau threefold.
struct HodgePair {
    long long a = 0;
    long long b = 0;

    /// a = 0 cannot occur for a projective CY threefold (no ample class);
    /// formatting operations still accept such pairs but flag them.
    bool degenerate() const { return a <= 0; }

    friend bool operator==(const HodgePair&, const HodgePair&) = default;
};

/// h^{p,q} for 0 <= p,q <= 3.
struct HodgeDiamond {
    std::array<std::array<long long, 4>, 4> h{};

    friend bool operator==(const HodgeDiamond&, const HodgeDiamond&) = default;
};

/// Intermediate counts entering the face-counting Hodge formulas; useful for
/// reporting and for testing the formula term by term. The "dual" fields are
/// counts on the polar polytope, which determine a; the plain fields are
/// counts on the input polytope, which determine b.
struct HodgeBreakdown {
    long long l_delta = 0;       // lattice points of the input polytope
    long long l_dual = 0;        // lattice points of the polar dual
    long long facet_interior_sum_delta = 0;  // sum of l* over facets of the input
    long long facet_interior_sum_dual = 0;   // sum of l* over facets of the dual
    long long correction_delta = 0;  // sum of l*(F) l*(F dual) over 2-faces of the input
    long long correction_dual = 0;   // same over 2-faces of the dual
    HodgePair pair;
};

/**
 * Face-counting Hodge numbers of the anticanonical Calabi-Yau threefold of a
 * reflexive 4-polytope D with dual D*:
 *
 *   a = l(D*) - 5 - sum over facets G of D* of l*(G)
 *              + sum over 2-faces G of D* of l*(G) l*(G^) ,
 *   b = the same expression with D and D* exchanged,
 *
 * where G^ is the dual face (dim G + dim G^ = 3). Throws NotReflexive or
 * WrongDimension.
 */
HodgePair hodge_numbers(const LatticePolytope& delta);
HodgeBreakdown hodge_breakdown(const LatticePolytope& delta);

/// The mirror partner polytope, i.e. the polar dual; hodge_numbers of the
/// mirror is the swap of hodge_numbers. Throws NotReflexive.
LatticePolytope mirror(const LatticePolytope& delta);

HodgeDiamond diamond(const HodgePair& p);

/// 2 (a - b); the signed sum of the diamond.
long long euler_characteristic(const HodgePair& p);

/// Fixed-width text triangle (seven rows, h^{3,0} row in the middle).
std::string render_diamond(const HodgeDiamond& d);

/// Machine-readable key-value form: ("h00", 1), ..., ("h33", 1), row-major.
std::vector<std::pair<std::string, long long>> diamond_entries(const HodgeDiamond& d);

}  // namespace cy3
