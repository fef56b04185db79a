#include <doctest.h>

#include <cy3/chern.hpp>
#include <cy3/wall.hpp>

using namespace cy3;

TEST_CASE("chi of a polarization") {
    auto r = chi_of_polarization(MmcKey{5, 50});
    CHECK(r.value == Rational(5));
    CHECK(r.integral);

    r = chi_of_polarization(MmcKey{0, 0});
    CHECK(r.value == Rational(0));
    CHECK(r.integral);

    r = chi_of_polarization(MmcKey{5, 49});
    CHECK(r.value == Rational(59, 12));
    CHECK_FALSE(r.integral);
}

TEST_CASE("c2.H from chi") {
    CHECK(c2H_from_chi(5, 5) == 50);
    CHECK(c2H_from_chi(0, 0) == 0);
    CHECK(c2H_from_chi(6, 5) == 48);
}

TEST_CASE("chi round-trips through c2H_from_chi") {
    for (Int m = -20; m <= 20; ++m)
        for (Int chi = -20; chi <= 20; ++chi) {
            auto r = chi_of_polarization(MmcKey{m, c2H_from_chi(m, chi)});
            CHECK(r.integral);
            CHECK(r.value == Rational(chi));
        }
}

TEST_CASE("Noether arithmetic for surface sections") {
    auto quintic_surface = SurfaceSectionData::from_b2(5, 53);
    CHECK(quintic_surface.e == 55);
    auto r = noether_chi(quintic_surface);
    CHECK(r.value == Rational(5));
    CHECK(r.integral);

    r = noether_chi(SurfaceSectionData{0, 24, 22});  // K3 arithmetic check
    CHECK(r.value == Rational(2));
    CHECK(r.integral);

    r = noether_chi(SurfaceSectionData{1, 1, 0});
    CHECK(r.value == Rational(1, 6));
    CHECK_FALSE(r.integral);
}

TEST_CASE("the surface-section bootstrap lands on the threefold chi") {
    // chi(O_X) = 0 on a Calabi-Yau, so chi(H) = chi(O_H(H))
    auto threefold = chi_of_polarization(MmcKey{5, 50});
    auto section = noether_chi(SurfaceSectionData::from_b2(5, 53));
    CHECK(threefold.value == section.value);
}

TEST_CASE("stratum keys") {
    CHECK(same_stratum(MmcKey{5, 50}, MmcKey{5, 50}));
    CHECK_FALSE(same_stratum(MmcKey{5, 50}, MmcKey{5, 49}));
    CHECK_FALSE(same_stratum(MmcKey{5, 50}, MmcKey{6, 50}));
}

TEST_CASE("chi integrality is the rank-1 Wall congruence") {
    for (Int m = -30; m <= 30; ++m)
        for (Int c = -30; c <= 30; ++c) {
            bool integral = chi_of_polarization(MmcKey{m, c}).integral;
            bool mod12 = ((2 * m + c) % 12 + 12) % 12 == 0;
            WallInvariantSystem s(1, 2);
            s.set_mu(0, 0, 0, m);
            s.set_p1(0, -2 * c);
            CHECK(integral == mod12);
            CHECK(integral == check_congruences(s).pass);
        }
}
