#include "cy3/toric.hpp"

#include "exact.hpp"

namespace cy3 {

bool is_reflexive(const LatticePolytope& P) {
    // Primitive normals are a construction invariant, so "all offsets 1" is
    // exactly integrality of the polar dual.
    for (const auto& f : P.facets())
        if (f.offset != 1) return false;
    return true;
}

bool is_smooth_fano(const LatticePolytope& Q) {
    if (!is_reflexive(Q)) throw NotReflexive("smoothness test requires a reflexive polytope");
    const int n = Q.dim();
    for (const auto& f : Q.facets()) {
        std::vector<LatticePoint> on_facet;
        for (const auto& v : Q.vertices())
            if (detail::dot(f.normal, v) == f.offset) on_facet.push_back(v);
        if (static_cast<int>(on_facet.size()) != n) return false;  // not a simplex
        Int d = detail::det(on_facet);
        if (d != 1 && d != -1) return false;
    }
    return true;
}

AmbientReport ambient_report(const LatticePolytope& delta) {
    AmbientReport r;
    r.ambient_dim = delta.dim();
    r.cy_dim = delta.dim() - 1;
    r.facet_count = static_cast<int>(delta.facets().size());
    r.reflexive = is_reflexive(delta);
    r.smooth_fano = r.reflexive && is_smooth_fano(polar_dual(delta));
    return r;
}

}  // namespace cy3
