#pragma once

#include "cy3/lattice.hpp"

namespace cy3 {

/// Combinatorial summary of the ambient toric variety attached to a Newton
/// polytope: the face fan of the polar dual. For a reflexive 4-polytope the
/// generic anticanonical hypersurface of a smooth ambient is a Calabi-Yau
/// threefold, which is what cy_dim reports.
struct AmbientReport {
    bool reflexive = false;
    bool smooth_fano = false;  // implies reflexive
    int ambient_dim = 0;
    int cy_dim = 0;  // ambient_dim - 1
    int facet_count = 0;

    friend bool operator==(const AmbientReport&, const AmbientReport&) = default;
};

/// True iff the origin is strictly interior and every facet offset is 1
/// (equivalently, the polar dual is again a lattice polytope).
bool is_reflexive(const LatticePolytope& P);

/// True iff every facet of Q is a simplex whose vertices form a lattice
/// basis (|det| = 1). Q is the polytope spanning the face fan; for a
/// hypersurface with Newton polytope D pass Q = polar_dual(D).
/// Throws NotReflexive when Q is not reflexive.
bool is_smooth_fano(const LatticePolytope& Q);

AmbientReport ambient_report(const LatticePolytope& delta);

}  // namespace cy3
