#pragma once

#include <vector>

#include <cy3/lattice.hpp>

namespace fixtures {

using cy3::Int;
using cy3::LatticePoint;

/// The 126 degree-5 exponent vectors in 5 variables, shifted by
/// (-1,-1,-1,-1) into Z^4 (drop the redundant exponent).
inline std::vector<LatticePoint> quintic_points() {
    std::vector<LatticePoint> pts;
    for (Int a0 = 0; a0 <= 5; ++a0)
        for (Int a1 = 0; a0 + a1 <= 5; ++a1)
            for (Int a2 = 0; a0 + a1 + a2 <= 5; ++a2)
                for (Int a3 = 0; a0 + a1 + a2 + a3 <= 5; ++a3) {
                    Int a4 = 5 - a0 - a1 - a2 - a3;
                    pts.push_back({a1 - 1, a2 - 1, a3 - 1, a4 - 1});
                }
    return pts;
}

inline cy3::LatticePolytope quintic() {
    return cy3::hull_from_points(quintic_points(), 4);
}

inline cy3::LatticePolytope quintic_dual() {
    return cy3::hull_from_points(
        {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, -1, -1, -1}}, 4);
}

inline cy3::LatticePolytope square() {
    return cy3::hull_from_points({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}, 2);
}

inline cy3::LatticePolytope diamond2d() {
    return cy3::hull_from_points({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, 2);
}

inline cy3::LatticePolytope square2x() {
    return cy3::hull_from_points({{2, 2}, {2, -2}, {-2, 2}, {-2, -2}}, 2);
}

/// Newton polytope of the octic hypersurface in P(1,1,2,2,2).
inline cy3::LatticePolytope octic() {
    return cy3::hull_from_points(
        {{1, 1, 1, 1}, {-7, 1, 1, 1}, {1, -3, 1, 1}, {1, 1, -3, 1}, {1, 1, 1, -3}}, 4);
}

/// The 4-cube, Newton polytope of the (2,2,2,2) hypersurface in (P^1)^4.
inline cy3::LatticePolytope cube4() {
    std::vector<LatticePoint> pts;
    for (Int a = -1; a <= 1; a += 2)
        for (Int b = -1; b <= 1; b += 2)
            for (Int c = -1; c <= 1; c += 2)
                for (Int d = -1; d <= 1; d += 2) pts.push_back({a, b, c, d});
    return cy3::hull_from_points(pts, 4);
}

}  // namespace fixtures
