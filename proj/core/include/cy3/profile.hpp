#pragma once

#include "cy3/chern.hpp"
#include "cy3/hodge.hpp"
#include "cy3/toric.hpp"
#include "cy3/wall.hpp"

namespace cy3 {

/// The topological fingerprint of a polarized Calabi-Yau threefold.
struct CYTopologicalProfile {
    HodgePair hodge;
    long long euler = 0;
    Int m = 0;  // H^3
    Int c = 0;  // c2(X) . H

    MmcKey key() const { return {m, c}; }
};

/// Everything the end-to-end pipeline derives from a reflexive 4-polytope
/// and a chosen polarization (m, c); the mirror profile shares (m, c).
struct PipelineReport {
    AmbientReport ambient;
    long long l_delta = 0;
    long long l_dual = 0;

    CYTopologicalProfile profile;
    HodgeDiamond dia;
    ChiResult chi_H;

    CongruenceResult wall;
    IntInterval window;
    bool kw_pass = false;

    CYTopologicalProfile mirror_profile;
    bool hodge_exchanged = false;     // mirror Hodge pair is the swap
    bool wall_ranks_differ = false;   // rank H^2 differs from the mirror's,
                                      // so the Wall systems cannot agree
    bool demo_defaults = false;       // (m, c) came from the demo default
};

/// Runs the full invariant pipeline. Throws WrongDimension unless the input
/// is 4-dimensional and NotReflexive unless it is reflexive.
PipelineReport run_pipeline(const LatticePolytope& delta, Int m, Int c,
                            bool demo_defaults = false);

}  // namespace cy3
