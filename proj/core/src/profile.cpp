#include "cy3/profile.hpp"

namespace cy3 {

PipelineReport run_pipeline(const LatticePolytope& delta, Int m, Int c, bool demo_defaults) {
    if (delta.dim() != 4) throw WrongDimension("pipeline needs a 4-dimensional polytope");

    PipelineReport r;
    r.ambient = ambient_report(delta);
    if (!r.ambient.reflexive) throw NotReflexive("pipeline needs a reflexive polytope");

    LatticePolytope dual = mirror(delta);
    r.l_delta = static_cast<long long>(enumerate_lattice_points(delta).size());
    r.l_dual = static_cast<long long>(enumerate_lattice_points(dual).size());

    HodgePair h = hodge_numbers(delta);
    r.profile = CYTopologicalProfile{h, euler_characteristic(h), m, c};
    r.dia = diamond(h);
    r.chi_H = chi_of_polarization(MmcKey{m, c});

    r.wall = check_congruences(rank1_system(Rank1Data{m, c, h.b}));
    r.window = kw_window(m);
    r.kw_pass = kw_check(h, m);

    HodgePair hm = hodge_numbers(dual);
    r.mirror_profile = CYTopologicalProfile{hm, euler_characteristic(hm), m, c};
    r.hodge_exchanged = (hm.a == h.b && hm.b == h.a);
    r.wall_ranks_differ = (hm.a != h.a);
    r.demo_defaults = demo_defaults;
    return r;
}

}  // namespace cy3
