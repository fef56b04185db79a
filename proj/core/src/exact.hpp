#pragma once

// Internal exact integer linear algebra shared by the geometry sources.
// Intermediate products run through __int128 and are narrowed with an
// overflow check, so desk-scale inputs can never silently wrap.

#include <cstdlib>
#include <numeric>
#include <vector>

#include "cy3/types.hpp"

namespace cy3::detail {

using Wide = __int128;

inline Int narrow(Wide v) {
    if (v > Wide(INT64_MAX) || v < Wide(INT64_MIN))
        throw Error("integer overflow in exact arithmetic");
    return static_cast<Int>(v);
}

inline Int dot(const LatticePoint& a, const LatticePoint& b) {
    Wide s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += Wide(a[i]) * b[i];
    return narrow(s);
}

inline LatticePoint sub(const LatticePoint& a, const LatticePoint& b) {
    LatticePoint r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Int gcd_of(const LatticePoint& v) {
    Int g = 0;
    for (Int x : v) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

/// Determinant by Laplace expansion; fine for n <= 5.
inline Wide det_wide(const std::vector<std::vector<Wide>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Wide acc = 0;
    for (size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        std::vector<std::vector<Wide>> minor(n - 1, std::vector<Wide>(n - 1));
        for (size_t i = 1; i < n; ++i) {
            size_t jj = 0;
            for (size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                minor[i - 1][jj++] = m[i][j];
            }
        }
        Wide term = m[0][c] * det_wide(minor);
        acc += (c % 2 == 0) ? term : -term;
    }
    return acc;
}

inline Int det(const std::vector<LatticePoint>& rows) {
    std::vector<std::vector<Wide>> m(rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
        m[i].assign(rows[i].begin(), rows[i].end());
    return narrow(det_wide(m));
}

inline Wide wide_gcd(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Rank over Q of an integer matrix (rows), by fraction-free elimination.
inline int linear_rank(std::vector<std::vector<Wide>> m) {
    if (m.empty()) return 0;
    size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < m.size(); ++c) {
        size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        for (size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            Wide g = wide_gcd(m[r][c], m[i][c]);
            Wide fa = m[i][c] / g, fb = m[r][c] / g;
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] * fb - m[r][j] * fa;
        }
        ++r;
    }
    return static_cast<int>(r);
}

inline int linear_rank_points(const std::vector<LatticePoint>& rows) {
    std::vector<std::vector<Wide>> m(rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
        m[i].assign(rows[i].begin(), rows[i].end());
    return linear_rank(std::move(m));
}

/// Dimension of the affine hull of a point set.
inline int affine_rank(const std::vector<LatticePoint>& pts) {
    if (pts.empty()) return -1;
    std::vector<LatticePoint> diffs;
    for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
    return linear_rank_points(diffs);
}

/// The vector N with det(d_1; ...; d_{n-1}; x) = N . x for all x, for n-1
/// given vectors in Z^n.
inline LatticePoint cross_normal(const std::vector<LatticePoint>& d, int n) {
    LatticePoint normal(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<std::vector<Wide>> minor(static_cast<size_t>(n - 1),
                                             std::vector<Wide>(static_cast<size_t>(n - 1)));
        for (int r = 0; r < n - 1; ++r) {
            int jj = 0;
            for (int c = 0; c < n; ++c) {
                if (c == i) continue;
                minor[static_cast<size_t>(r)][static_cast<size_t>(jj++)] =
                    d[static_cast<size_t>(r)][static_cast<size_t>(c)];
            }
        }
        Wide m = det_wide(minor);
        normal[static_cast<size_t>(i)] = narrow(((n - 1 + i) % 2 == 0) ? m : -m);
    }
    return normal;
}

/// Hermite normal form under unimodular row operations: pivots positive and
/// descending left to right, entries above each pivot reduced into
/// [0, pivot). Unique canonical representative of the left-GL(n,Z) orbit.
inline IntMatrix hermite_rows(IntMatrix m) {
    if (m.empty()) return m;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // gcd the column below r into a single pivot
        while (true) {
            size_t best = rows;
            for (size_t i = r; i < rows; ++i) {
                if (m[i][c] == 0) continue;
                if (best == rows || std::llabs(m[i][c]) < std::llabs(m[best][c])) best = i;
            }
            if (best == rows) break;  // zero column
            std::swap(m[r], m[best]);
            bool clean = true;
            for (size_t i = r + 1; i < rows; ++i) {
                if (m[i][c] == 0) continue;
                Int q = m[i][c] / m[r][c];
                if (q != 0)
                    for (size_t j = 0; j < cols; ++j)
                        m[i][j] = narrow(Wide(m[i][j]) - Wide(q) * m[r][j]);
                if (m[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (m[r][c] == 0) continue;
        if (m[r][c] < 0)
            for (size_t j = 0; j < cols; ++j) m[r][j] = -m[r][j];
        for (size_t i = 0; i < r; ++i) {
            Int q = m[i][c] / m[r][c];
            if (m[i][c] % m[r][c] < 0) --q;  // floor division
            if (q != 0)
                for (size_t j = 0; j < cols; ++j)
                    m[i][j] = narrow(Wide(m[i][j]) - Wide(q) * m[r][j]);
        }
        ++r;
    }
    return m;
}

}  // namespace cy3::detail
