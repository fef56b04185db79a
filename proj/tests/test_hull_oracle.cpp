// Randomized cross-validation of the incremental hull against a
// brute-force oracle: facet hyperplanes found by enumerating point
// subsets, extremality decided by Caratheodory over simplices.

#include <doctest.h>

#include <numeric>
#include <optional>
#include <random>
#include <set>

#include <cy3/lattice.hpp>

using namespace cy3;

namespace {

using Wide = __int128;

Wide det_of(const std::vector<std::vector<Wide>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    Wide acc = 0;
    for (size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        std::vector<std::vector<Wide>> minor(n - 1, std::vector<Wide>(n - 1));
        for (size_t i = 1; i < n; ++i) {
            size_t jj = 0;
            for (size_t j = 0; j < n; ++j)
                if (j != c) minor[i - 1][jj++] = m[i][j];
        }
        Wide t = m[0][c] * det_of(minor);
        acc += (c % 2 == 0) ? t : -t;
    }
    return acc;
}

// normal of the hyperplane through pts (n points in n-space), zero if
// affinely dependent
LatticePoint hyperplane_normal(const std::vector<LatticePoint>& pts, int n) {
    LatticePoint normal(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        std::vector<std::vector<Wide>> minor(static_cast<size_t>(n - 1),
                                             std::vector<Wide>(static_cast<size_t>(n - 1)));
        for (int r = 1; r < n; ++r) {
            int jj = 0;
            for (int c = 0; c < n; ++c) {
                if (c == i) continue;
                minor[static_cast<size_t>(r - 1)][static_cast<size_t>(jj++)] =
                    Wide(pts[static_cast<size_t>(r)][static_cast<size_t>(c)]) -
                    pts[0][static_cast<size_t>(c)];
            }
        }
        Wide d = det_of(minor);
        normal[static_cast<size_t>(i)] = static_cast<Int>(((n - 1 + i) % 2 == 0) ? d : -d);
    }
    return normal;
}

std::set<std::pair<LatticePoint, Int>> oracle_facets(const std::vector<LatticePoint>& pts,
                                                     int n) {
    std::set<std::pair<LatticePoint, Int>> found;
    // iterate all n-subsets via the permutation trick
    std::vector<bool> mask(pts.size(), false);
    std::fill(mask.begin(), mask.begin() + n, true);
    do {
        std::vector<LatticePoint> sub;
        for (size_t i = 0; i < pts.size(); ++i)
            if (mask[i]) sub.push_back(pts[i]);
        LatticePoint normal = hyperplane_normal(sub, n);
        bool zero = true;
        for (Int x : normal) zero = zero && (x == 0);
        if (zero) continue;
        Int offset = 0;
        for (int c = 0; c < n; ++c) offset += normal[static_cast<size_t>(c)] * sub[0][static_cast<size_t>(c)];
        int above = 0, below = 0;
        for (const auto& p : pts) {
            Wide s = -Wide(offset);
            for (int c = 0; c < n; ++c) s += Wide(normal[static_cast<size_t>(c)]) * p[static_cast<size_t>(c)];
            if (s > 0) ++above;
            if (s < 0) ++below;
        }
        if (above > 0 && below > 0) continue;  // not supporting
        if (above > 0) {
            for (Int& x : normal) x = -x;
            offset = -offset;
        }
        Int g = 0;
        for (Int x : normal) g = std::gcd(g, x < 0 ? -x : x);
        for (Int& x : normal) x /= g;
        found.insert({normal, offset / g});
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return found;
}

int oracle_affine_rank(const std::vector<LatticePoint>& pts, int n) {
    if (pts.empty()) return -1;
    std::vector<std::vector<Wide>> m;
    for (size_t i = 1; i < pts.size(); ++i) {
        std::vector<Wide> row(static_cast<size_t>(n));
        for (int c = 0; c < n; ++c)
            row[static_cast<size_t>(c)] = Wide(pts[i][static_cast<size_t>(c)]) - pts[0][static_cast<size_t>(c)];
        m.push_back(std::move(row));
    }
    size_t r = 0;
    for (int c = 0; c < n && r < m.size(); ++c) {
        size_t piv = r;
        while (piv < m.size() && m[piv][static_cast<size_t>(c)] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        for (size_t i = r + 1; i < m.size(); ++i) {
            Wide a = m[r][static_cast<size_t>(c)], b = m[i][static_cast<size_t>(c)];
            if (b == 0) continue;
            for (int j = c; j < n; ++j)
                m[i][static_cast<size_t>(j)] =
                    m[i][static_cast<size_t>(j)] * a - m[r][static_cast<size_t>(j)] * b;
        }
        ++r;
    }
    return static_cast<int>(r);
}

// membership via the oracle's own facet system; if the remaining points do
// not span the space, p lies outside their affine hull (the full set is
// full-dimensional), hence outside their hull
bool oracle_in_hull(const LatticePoint& p, const std::vector<LatticePoint>& pts, int n) {
    if (oracle_affine_rank(pts, n) < n) return false;
    for (const auto& [normal, offset] : oracle_facets(pts, n)) {
        Wide s = -Wide(offset);
        for (int c = 0; c < n; ++c) s += Wide(normal[static_cast<size_t>(c)]) * p[static_cast<size_t>(c)];
        if (s > 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("hull agrees with the brute-force oracle on random point sets") {
    std::mt19937_64 rng(0xfeedbeef);
    std::uniform_int_distribution<Int> coord(-3, 3);
    for (int n = 2; n <= 4; ++n) {
        std::uniform_int_distribution<int> count(n + 1, n == 4 ? 8 : 10);
        int built = 0;
        while (built < (n == 4 ? 25 : 60)) {
            std::vector<LatticePoint> pts;
            int k = count(rng);
            for (int i = 0; i < k; ++i) {
                LatticePoint p(static_cast<size_t>(n));
                for (auto& x : p) x = coord(rng);
                pts.push_back(std::move(p));
            }
            std::sort(pts.begin(), pts.end());
            pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

            std::optional<LatticePolytope> hull;
            try {
                hull = hull_from_points(pts, n);
            } catch (const NotFullDimensional&) {
                continue;  // degenerate draw
            }
            const LatticePolytope& P = *hull;
            ++built;

            // facet systems agree
            std::set<std::pair<LatticePoint, Int>> got;
            for (const auto& f : P.facets()) got.insert({f.normal, f.offset});
            CHECK(got == oracle_facets(pts, n));

            // vertex set = extreme points of the input
            std::set<LatticePoint> vset(P.vertices().begin(), P.vertices().end());
            for (const auto& p : pts) {
                std::vector<LatticePoint> others;
                for (const auto& q : pts)
                    if (q != p) others.push_back(q);
                bool extreme = !oracle_in_hull(p, others, n);
                CHECK(vset.count(p) == (extreme ? 1u : 0u));
            }
        }
    }
}
