#pragma once

#include "cy3/types.hpp"

namespace cy3 {

/// The stratum key (m, c) = (H^3, c2(X).H) of a polarized Calabi-Yau
/// threefold (X, H).
struct MmcKey {
    Int m = 0;
    Int c = 0;

    friend bool operator==(const MmcKey&, const MmcKey&) = default;
};

/// Numerical data of a surface section H of the polarization: K_H^2, the
/// topological Euler characteristic e = c2(H), and the second Betti number.
struct SurfaceSectionData {
    Int K2 = 0;
    Int e = 0;
    Int b2 = 0;

    /// For a simply connected surface with b1 = 0, e = 2 + b2.
    static SurfaceSectionData from_b2(Int K2, Int b2) { return {K2, 2 + b2, b2}; }
};

struct ChiResult {
    Rational value;
    bool integral = false;

    friend bool operator==(const ChiResult&, const ChiResult&) = default;
};

/// chi(H) = m/6 + c/12 exactly; the flag records integrality, which is the
/// informative diagnostic for inadmissible (m, c).
ChiResult chi_of_polarization(const MmcKey& k);

/// Inverts the chi relation: c = 12 chi - 2m.
Int c2H_from_chi(Int m, Int chi);

/// Noether: chi(O_H(H)) = (K_H^2 + e) / 12 exactly, with integrality flag.
ChiResult noether_chi(const SurfaceSectionData& d);

bool same_stratum(const MmcKey& k1, const MmcKey& k2);

}  // namespace cy3
