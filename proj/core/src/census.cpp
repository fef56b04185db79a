#include <algorithm>
#include <map>

#include "cy3/lattice.hpp"
#include "cy3/toric.hpp"
#include "exact.hpp"

namespace cy3 {

namespace {

constexpr Int kBox = 4;  // search box [-4,4]^2

struct P2 {
    Int x, y;
};

Int cross(P2 a, P2 b) { return a.x * b.y - a.y * b.x; }

// Exact counterclockwise angular order starting at the positive x-axis.
bool angle_less(P2 a, P2 b) {
    auto half = [](P2 p) { return (p.y > 0 || (p.y == 0 && p.x > 0)) ? 0 : 1; };
    if (half(a) != half(b)) return half(a) < half(b);
    Int c = cross(a, b);
    if (c != 0) return c > 0;
    return false;
}

}  // namespace

std::vector<LatticePolytope> enumerate_reflexive_polygons() {
    // Vertices of a polygon whose only interior lattice point is the origin
    // are primitive: each lies on a facet a.x = 1 with integral a.
    std::vector<P2> cand;
    for (Int x = -kBox; x <= kBox; ++x)
        for (Int y = -kBox; y <= kBox; ++y) {
            if (x == 0 && y == 0) continue;
            if (std::gcd(x < 0 ? -x : x, y < 0 ? -y : y) != 1) continue;
            cand.push_back({x, y});
        }
    std::sort(cand.begin(), cand.end(), angle_less);
    const int m = static_cast<int>(cand.size());

    // slice_ok(u,v): the triangle (0,u,v) turns counterclockwise and has no
    // lattice point in its interior. A closed fan of such slices is exactly
    // a polygon whose unique interior lattice point is the origin.
    std::vector<std::vector<bool>> slice_ok(static_cast<size_t>(m),
                                            std::vector<bool>(static_cast<size_t>(m), false));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Int d = cross(cand[static_cast<size_t>(i)], cand[static_cast<size_t>(j)]);
            if (d <= 0) continue;
            bool ok = true;
            for (Int x = -kBox; ok && x <= kBox; ++x)
                for (Int y = -kBox; y <= kBox; ++y) {
                    P2 z{x, y};
                    Int alpha = cross(z, cand[static_cast<size_t>(j)]);
                    Int beta = cross(cand[static_cast<size_t>(i)], z);
                    if (alpha > 0 && beta > 0 && alpha + beta < d) {
                        ok = false;
                        break;
                    }
                }
            slice_ok[static_cast<size_t>(i)][static_cast<size_t>(j)] = ok;
        }

    std::map<IntMatrix, LatticePolytope> classes;
    std::vector<int> seq;

    auto emit = [&]() {
        std::vector<LatticePoint> pts;
        pts.reserve(seq.size());
        for (int id : seq)
            pts.push_back({cand[static_cast<size_t>(id)].x, cand[static_cast<size_t>(id)].y});
        LatticePolytope P = LatticePolytope::hull(pts, 2);
        if (P.vertices().size() != seq.size()) return;  // a chosen point was not extreme
        if (!is_reflexive(P)) return;
        classes.try_emplace(normal_form(P), std::move(P));
    };

    auto dfs = [&](auto&& self, int last) -> void {
        const int start = seq.front();
        for (int nxt = last + 1; nxt < m; ++nxt) {
            if (!slice_ok[static_cast<size_t>(last)][static_cast<size_t>(nxt)]) continue;
            if (seq.size() >= 2) {
                P2 prev = cand[static_cast<size_t>(seq[seq.size() - 2])];
                P2 cur = cand[static_cast<size_t>(last)];
                P2 n = cand[static_cast<size_t>(nxt)];
                P2 e1{cur.x - prev.x, cur.y - prev.y};
                P2 e2{n.x - cur.x, n.y - cur.y};
                if (cross(e1, e2) <= 0) continue;  // must turn strictly left
            }
            seq.push_back(nxt);
            if (seq.size() >= 3 && slice_ok[static_cast<size_t>(nxt)][static_cast<size_t>(start)]) {
                // closing edge: convexity at the last and the first vertex
                P2 prev = cand[static_cast<size_t>(seq[seq.size() - 2])];
                P2 cur = cand[static_cast<size_t>(nxt)];
                P2 s = cand[static_cast<size_t>(start)];
                P2 after = cand[static_cast<size_t>(seq[1])];
                P2 e1{cur.x - prev.x, cur.y - prev.y};
                P2 e2{s.x - cur.x, s.y - cur.y};
                P2 e3{after.x - s.x, after.y - s.y};
                if (cross(e1, e2) > 0 && cross(e2, e3) > 0) emit();
            }
            self(self, nxt);
            seq.pop_back();
        }
    };

    // The first vertex is the angular minimum of its polygon, so every
    // polygon instance in the box is visited exactly once.
    for (int s = 0; s < m; ++s) {
        seq.assign(1, s);
        dfs(dfs, s);
    }

    // deterministic order: (vertex count, lattice point count, normal form);
    // each class is returned by its normal-form representative, whose vertex
    // matrix is the normal form itself
    std::vector<std::pair<std::tuple<size_t, size_t, IntMatrix>, LatticePolytope>> keyed;
    keyed.reserve(classes.size());
    for (auto& [nf, P] : classes) {
        std::vector<LatticePoint> columns(nf[0].size(), LatticePoint(2));
        for (size_t r = 0; r < 2; ++r)
            for (size_t c = 0; c < nf[r].size(); ++c) columns[c][r] = nf[r][c];
        LatticePolytope canon = LatticePolytope::hull(columns, 2);
        auto key = std::make_tuple(P.vertices().size(), enumerate_lattice_points(P).size(), nf);
        keyed.emplace_back(std::move(key), std::move(canon));
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<LatticePolytope> out;
    out.reserve(keyed.size());
    for (auto& [key, P] : keyed) out.push_back(std::move(P));
    return out;
}

}  // namespace cy3
