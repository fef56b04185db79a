#include <algorithm>
#include <limits>

#include "cy3/lattice.hpp"
#include "exact.hpp"

namespace cy3 {

namespace {

// Vertex-facet pairing matrix PM[i][j] = normal_i . vertex_j. It is a
// GL(n,Z) invariant of the polytope up to independent row and column
// permutations, which is what the lexicographic minimization fixes.
IntMatrix pairing_matrix(const LatticePolytope& P) {
    IntMatrix pm(P.facets().size(), std::vector<Int>(P.vertices().size()));
    for (size_t i = 0; i < P.facets().size(); ++i)
        for (size_t j = 0; j < P.vertices().size(); ++j)
            pm[i][j] = detail::dot(P.facets()[i].normal, P.vertices()[j]);
    return pm;
}

// For a fixed row order, the row-major reading of PM is minimized by sorting
// columns as vectors read top-down. Returns the column order.
std::vector<int> sorted_columns(const IntMatrix& pm, const std::vector<int>& rows) {
    size_t k = pm[0].size();
    std::vector<int> cols(k);
    for (size_t j = 0; j < k; ++j) cols[j] = static_cast<int>(j);
    std::sort(cols.begin(), cols.end(), [&](int a, int b) {
        for (int r : rows) {
            Int va = pm[static_cast<size_t>(r)][static_cast<size_t>(a)];
            Int vb = pm[static_cast<size_t>(r)][static_cast<size_t>(b)];
            if (va != vb) return va < vb;
        }
        return a < b;  // unreachable for polytopes: columns are distinct
    });
    return cols;
}

std::vector<Int> prefix_key(const IntMatrix& pm, const std::vector<int>& rows) {
    std::vector<int> cols = sorted_columns(pm, rows);
    std::vector<Int> key;
    key.reserve(rows.size() * cols.size());
    for (int r : rows)
        for (int c : cols) key.push_back(pm[static_cast<size_t>(r)][static_cast<size_t>(c)]);
    return key;
}

}  // namespace

IntMatrix normal_form(const LatticePolytope& P, int vertex_bound) {
    if (vertex_bound < 1) throw PreconditionError("vertex bound must be positive");
    if (static_cast<int>(P.vertices().size()) > vertex_bound)
        throw TooLarge("vertex count " + std::to_string(P.vertices().size()) +
                       " exceeds the normal-form bound " + std::to_string(vertex_bound));

    const IntMatrix pm = pairing_matrix(P);
    const int f = static_cast<int>(pm.size());

    // Branch-and-bound over facet orders: keep every partial row order that
    // achieves the minimal matrix prefix so ties (PM automorphisms) survive
    // to the end.
    std::vector<std::vector<int>> candidates{{}};
    for (int level = 0; level < f; ++level) {
        std::vector<std::vector<int>> next;
        std::vector<Int> best;
        for (const auto& cand : candidates) {
            std::vector<bool> used(static_cast<size_t>(f), false);
            for (int r : cand) used[static_cast<size_t>(r)] = true;
            for (int r = 0; r < f; ++r) {
                if (used[static_cast<size_t>(r)]) continue;
                std::vector<int> order = cand;
                order.push_back(r);
                std::vector<Int> key = prefix_key(pm, order);
                if (next.empty() || key < best) {
                    best = std::move(key);
                    next.clear();
                    next.push_back(std::move(order));
                } else if (key == best) {
                    next.push_back(std::move(order));
                }
            }
        }
        candidates = std::move(next);
    }

    // Each surviving facet order fixes a unique vertex order; reduce that
    // vertex matrix by unimodular row operations and keep the smallest.
    IntMatrix result;
    for (const auto& rows : candidates) {
        std::vector<int> cols = sorted_columns(pm, rows);
        IntMatrix vm(static_cast<size_t>(P.dim()), std::vector<Int>(cols.size()));
        for (size_t j = 0; j < cols.size(); ++j) {
            const auto& v = P.vertices()[static_cast<size_t>(cols[j])];
            for (int i = 0; i < P.dim(); ++i) vm[static_cast<size_t>(i)][j] = v[static_cast<size_t>(i)];
        }
        IntMatrix h = detail::hermite_rows(std::move(vm));
        if (result.empty() || h < result) result = std::move(h);
    }
    return result;
}

bool are_equivalent(const LatticePolytope& P, const LatticePolytope& Q, int vertex_bound) {
    if (P.dim() != Q.dim()) throw PreconditionError("ambient dimensions differ");
    if (P.vertices().size() != Q.vertices().size()) return false;
    if (P.facets().size() != Q.facets().size()) return false;
    return normal_form(P, vertex_bound) == normal_form(Q, vertex_bound);
}

}  // namespace cy3
