#include <doctest.h>

#include <random>

#include <cy3/toric.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cy3;

TEST_CASE("reflexivity predicate") {
    CHECK(is_reflexive(fixtures::square()));
    CHECK_FALSE(is_reflexive(fixtures::square2x()));
    CHECK(is_reflexive(fixtures::quintic()));
    CHECK(is_reflexive(polar_dual(fixtures::quintic())));
    // origin not interior: false, not an error
    CHECK_FALSE(is_reflexive(hull_from_points({{0, 0}, {3, 0}, {0, 3}}, 2)));
}

TEST_CASE("smooth Fano test on the quintic ambient") {
    auto Q = fixtures::quintic_dual();
    // oracle: all 5 facet vertex determinants are +-1
    // (each facet omits one vertex of the simplex)
    CHECK(is_smooth_fano(Q));
    CHECK(is_smooth_fano(polar_dual(fixtures::quintic())));
}

TEST_CASE("smooth Fano test in the plane") {
    CHECK(is_smooth_fano(hull_from_points({{1, 0}, {0, 1}, {-1, -1}}, 2)));
    // reflexive triangle with a singular cone: |det| = 2 on one edge
    auto P = hull_from_points({{1, 0}, {0, 1}, {-1, -2}}, 2);
    REQUIRE(is_reflexive(P));
    CHECK_FALSE(is_smooth_fano(P));
    CHECK_THROWS_AS(is_smooth_fano(fixtures::square2x()), NotReflexive);
}

TEST_CASE("smooth Fano implies reflexive across the census") {
    for (const auto& P : enumerate_reflexive_polygons()) {
        bool smooth = is_smooth_fano(P);  // precondition holds: census is reflexive
        if (smooth) CHECK(is_reflexive(P));
    }
}

TEST_CASE("ambient report for the quintic") {
    auto r = ambient_report(fixtures::quintic());
    CHECK(r.reflexive);
    CHECK(r.smooth_fano);
    CHECK(r.ambient_dim == 4);
    CHECK(r.cy_dim == 3);
    CHECK(r.facet_count == 5);
}

TEST_CASE("ambient report for non-reflexive input") {
    auto r = ambient_report(fixtures::square2x());
    CHECK_FALSE(r.reflexive);
    CHECK_FALSE(r.smooth_fano);
    CHECK(r.ambient_dim == 2);
    CHECK(r.cy_dim == 1);
}

TEST_CASE("ambient report across the polygon census") {
    for (const auto& P : enumerate_reflexive_polygons()) {
        auto r = ambient_report(P);
        CHECK(r.reflexive);
        CHECK(r.cy_dim == 1);
        CHECK(r.facet_count == static_cast<int>(P.facets().size()));
    }
}

TEST_CASE("ambient report is unimodularly invariant") {
    std::mt19937_64 rng(7);
    auto quintic = fixtures::quintic();
    auto base = ambient_report(quintic);
    for (int t = 0; t < 10; ++t) {
        auto u = oracle::random_unimodular(4, rng);
        std::vector<LatticePoint> img;
        for (const auto& v : quintic.vertices()) img.push_back(oracle::apply(u, v));
        CHECK(ambient_report(hull_from_points(img, 4)) == base);
    }
}
