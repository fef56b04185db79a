#include "cy3/chern.hpp"

namespace cy3 {

ChiResult chi_of_polarization(const MmcKey& k) {
    Rational v = Rational(k.m, 6) + Rational(k.c, 12);
    return {v, v.denominator() == 1};
}

Int c2H_from_chi(Int m, Int chi) { return 12 * chi - 2 * m; }

ChiResult noether_chi(const SurfaceSectionData& d) {
    Rational v(d.K2 + d.e, 12);
    return {v, v.denominator() == 1};
}

bool same_stratum(const MmcKey& k1, const MmcKey& k2) { return k1 == k2; }

}  // namespace cy3
