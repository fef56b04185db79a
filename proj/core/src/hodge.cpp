#include "cy3/hodge.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cy3/toric.hpp"
#include "exact.hpp"

namespace cy3 {

namespace {

// One side of the face-counting formula, evaluated on a reflexive pair
// (P, Q = P*):
//
//   l(P) - 5 - sum_{facets F of P} l*(F)
//            + sum_{2-faces F of P} l*(F) l*(F^)
//
// where F^ is the face of Q dual to F, cut out by pairing to 1 against all
// vertices of F. Lattice points interior to a facet of P name divisors that
// miss the hypersurface; points interior to a 2-face name exceptional
// divisors that restrict to l* of the dual edge extra components.
long long formula_side(const LatticePolytope& P, const LatticePolytope& Q) {
    auto faces_P = face_lattice(P);
    auto faces_Q = face_lattice(Q);

    std::map<std::vector<int>, const Face*> q_by_vertices;
    for (const auto& g : faces_Q) q_by_vertices[g.vertices] = &g;

    long long total = static_cast<long long>(enumerate_lattice_points(P).size());
    long long result = total - 5;
    for (const auto& f : faces_P) {
        if (f.dim == 3) result -= f.l_star;
        if (f.dim == 2 && f.l_star > 0) {
            // dual face: vertices of Q pairing to 1 with every vertex of f
            std::vector<int> dual_verts;
            for (size_t j = 0; j < Q.vertices().size(); ++j) {
                bool tight = true;
                for (int vid : f.vertices)
                    if (detail::dot(Q.vertices()[j], P.vertices()[static_cast<size_t>(vid)]) != 1)
                        tight = false;
                if (tight) dual_verts.push_back(static_cast<int>(j));
            }
            auto it = q_by_vertices.find(dual_verts);
            if (it == q_by_vertices.end() || it->second->dim != 1)
                throw Error("internal: face duality pairing failed");
            result += f.l_star * it->second->l_star;
        }
    }
    return result;
}

}  // namespace

HodgeBreakdown hodge_breakdown(const LatticePolytope& delta) {
    if (delta.dim() != 4) throw WrongDimension("Hodge numbers need a 4-dimensional polytope");
    if (!is_reflexive(delta)) throw NotReflexive("Hodge numbers need a reflexive polytope");

    LatticePolytope dual = polar_dual(delta);

    HodgeBreakdown br;
    br.l_delta = static_cast<long long>(enumerate_lattice_points(delta).size());
    br.l_dual = static_cast<long long>(enumerate_lattice_points(dual).size());
    for (const auto& f : face_lattice(delta)) {
        if (f.dim == 3) br.facet_interior_sum_delta += f.l_star;
    }
    for (const auto& f : face_lattice(dual)) {
        if (f.dim == 3) br.facet_interior_sum_dual += f.l_star;
    }

    long long a = formula_side(dual, delta);
    long long b = formula_side(delta, dual);
    br.correction_dual = a - (br.l_dual - 5 - br.facet_interior_sum_dual);
    br.correction_delta = b - (br.l_delta - 5 - br.facet_interior_sum_delta);
    br.pair = HodgePair{a, b};
    return br;
}

HodgePair hodge_numbers(const LatticePolytope& delta) {
    return hodge_breakdown(delta).pair;
}

LatticePolytope mirror(const LatticePolytope& delta) {
    if (!is_reflexive(delta)) throw NotReflexive("mirror needs a reflexive polytope");
    return polar_dual(delta);
}

HodgeDiamond diamond(const HodgePair& p) {
    HodgeDiamond d;
    d.h[0][0] = d.h[3][3] = d.h[3][0] = d.h[0][3] = 1;
    d.h[1][1] = d.h[2][2] = p.a;
    d.h[1][2] = d.h[2][1] = p.b;
    return d;
}

long long euler_characteristic(const HodgePair& p) { return 2 * (p.a - p.b); }

std::string render_diamond(const HodgeDiamond& d) {
    size_t width = 1;
    for (const auto& row : d.h)
        for (long long v : row) width = std::max(width, std::to_string(v).size());

    std::ostringstream os;
    for (int r = 0; r <= 6; ++r) {
        // row r holds h^{p,q} with p + q = r, p descending
        std::vector<long long> entries;
        for (int p = 3; p >= 0; --p) {
            int q = r - p;
            if (q < 0 || q > 3) continue;
            entries.push_back(d.h[static_cast<size_t>(p)][static_cast<size_t>(q)]);
        }
        os << std::string((4 - entries.size()) * width, ' ');
        for (size_t i = 0; i < entries.size(); ++i) {
            std::string s = std::to_string(entries[i]);
            if (i) os << std::string(width, ' ');
            os << std::string(width - s.size(), ' ') << s;
        }
        os << '\n';
    }
    return os.str();
}

std::vector<std::pair<std::string, long long>> diamond_entries(const HodgeDiamond& d) {
    std::vector<std::pair<std::string, long long>> out;
    out.reserve(16);
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q)
            out.emplace_back("h" + std::to_string(p) + std::to_string(q),
                             d.h[static_cast<size_t>(p)][static_cast<size_t>(q)]);
    return out;
}

}  // namespace cy3
