// cy3: topological invariants of Calabi-Yau threefolds cut out of toric
// Fano manifolds, computed exactly from reflexive lattice polytopes.
//
// Exit codes: 0 success, 2 parse/IO error, 3 precondition violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <cy3/chern.hpp>
#include <cy3/hodge.hpp>
#include <cy3/lattice.hpp>
#include <cy3/profile.hpp>
#include <cy3/toric.hpp>
#include <cy3/wall.hpp>

using json = nlohmann::ordered_json;
using namespace cy3;

namespace {

struct Options {
    std::string format = "text";
    std::string input;
    Int m = 5;
    Int c = 50;
    bool m_given = false;
    bool c_given = false;
    long long b = 0;
    bool b_given = false;
    std::string c_range;
    int vertex_bound = 36;
};

bool json_mode(const Options& o) { return o.format == "json-lines"; }

unsigned worker_count() {
    if (const char* env = std::getenv("CY3_THREADS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    return 1;
}

// Runs fn over every index, on at most CY3_THREADS workers; output strings
// are buffered and emitted in input order regardless of scheduling.
void process_in_order(size_t count, const std::function<std::string(size_t)>& fn) {
    unsigned workers = worker_count();
    if (workers <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) std::cout << fn(i);
        return;
    }
    std::vector<std::string> results(count);
    std::atomic<size_t> next{0};
    auto drain = [&] {
        for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
            results[i] = fn(i);
    };
    std::vector<std::future<void>> pool;
    for (unsigned w = 0; w + 1 < workers && w + 1 < count; ++w)
        pool.push_back(std::async(std::launch::async, drain));
    drain();
    for (auto& p : pool) p.get();
    for (const auto& r : results) std::cout << r;
}

std::vector<LatticePolytope> load_polytopes(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_polytopes(in);
}

json vertices_json(const LatticePolytope& P) {
    json vs = json::array();
    for (const auto& v : P.vertices()) vs.push_back(v);
    return vs;
}

std::string vertices_line(const LatticePolytope& P) {
    std::ostringstream os;
    for (size_t i = 0; i < P.vertices().size(); ++i) {
        if (i) os << "; ";
        for (size_t j = 0; j < P.vertices()[i].size(); ++j) {
            if (j) os << ' ';
            os << P.vertices()[i][j];
        }
    }
    return os.str();
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << '/' << r.denominator();
    return os.str();
}

// ---- analyze ----

std::string analyze_one(const LatticePolytope& P, size_t index, bool as_json) {
    auto r = ambient_report(P);
    long long l = static_cast<long long>(enumerate_lattice_points(P).size());
    long long l_dual = r.reflexive
                           ? static_cast<long long>(enumerate_lattice_points(polar_dual(P)).size())
                           : -1;
    std::ostringstream os;
    if (as_json) {
        json j{{"record", "analyze"},
               {"index", index},
               {"ambient_dim", r.ambient_dim},
               {"cy_dim", r.cy_dim},
               {"vertices", P.vertices().size()},
               {"facet_count", r.facet_count},
               {"reflexive", r.reflexive},
               {"smooth_fano", r.smooth_fano},
               {"lattice_points", l}};
        if (r.reflexive) j["dual_lattice_points"] = l_dual;
        j["calabi_yau_hypersurface"] = r.reflexive && r.smooth_fano;
        os << j.dump() << '\n';
        return os.str();
    }
    os << "polytope: " << index << '\n';
    os << "ambient_dim: " << r.ambient_dim << '\n';
    os << "vertices: " << P.vertices().size() << '\n';
    os << "facet_count: " << r.facet_count << '\n';
    os << "reflexive: " << (r.reflexive ? "true" : "false") << '\n';
    os << "smooth_fano: " << (r.smooth_fano ? "true" : "false") << '\n';
    os << "lattice_points: " << l << '\n';
    if (r.reflexive) os << "dual_lattice_points: " << l_dual << '\n';
    if (r.reflexive && r.smooth_fano)
        os << "calabi_yau_hypersurface: smooth anticanonical member of dimension " << r.cy_dim
           << '\n';
    return os.str();
}

int cmd_analyze(const Options& o) {
    auto ps = load_polytopes(o.input);
    process_in_order(ps.size(),
                     [&](size_t i) { return analyze_one(ps[i], i, json_mode(o)); });
    return 0;
}

// ---- dual ----

int cmd_dual(const Options& o) {
    auto ps = load_polytopes(o.input);
    process_in_order(ps.size(), [&](size_t i) {
        auto D = polar_dual(ps[i]);
        if (json_mode(o)) {
            json j{{"record", "dual"},
                   {"index", i},
                   {"ambient_dim", D.dim()},
                   {"vertices", vertices_json(D)}};
            return j.dump() + "\n";
        }
        return polytope_to_string(D);
    });
    return 0;
}

// ---- hodge ----

std::string hodge_one(const LatticePolytope& P, size_t index, bool as_json) {
    auto h = hodge_numbers(P);
    auto d = diamond(h);
    std::ostringstream os;
    if (as_json) {
        json j{{"record", "hodge"},
               {"index", index},
               {"a", h.a},
               {"b", h.b},
               {"euler", euler_characteristic(h)}};
        for (const auto& [key, value] : diamond_entries(d)) j[key] = value;
        os << j.dump() << '\n';
        return os.str();
    }
    os << "polytope: " << index << '\n';
    os << "hodge: a=" << h.a << " b=" << h.b << '\n';
    os << "euler: " << euler_characteristic(h) << '\n';
    os << "diamond:\n" << render_diamond(d);
    return os.str();
}

int cmd_hodge(const Options& o) {
    auto ps = load_polytopes(o.input);
    process_in_order(ps.size(), [&](size_t i) { return hodge_one(ps[i], i, json_mode(o)); });
    return 0;
}

// ---- census2d ----

int cmd_census(const Options& o) {
    auto census = enumerate_reflexive_polygons();
    if (!json_mode(o)) std::cout << "reflexive_polygons: " << census.size() << '\n';
    size_t index = 0;
    for (const auto& P : census) {
        bool smooth = is_smooth_fano(P);
        long long l = static_cast<long long>(enumerate_lattice_points(P).size());
        if (json_mode(o)) {
            json j{{"record", "polygon"},
                   {"index", index},
                   {"vertices", vertices_json(P)},
                   {"lattice_points", l},
                   {"smooth_fano", smooth}};
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "polygon " << index << ": " << vertices_line(P)
                      << " | lattice_points=" << l
                      << " smooth_fano=" << (smooth ? "true" : "false") << '\n';
        }
        ++index;
    }
    return 0;
}

// ---- wall-check ----

int cmd_wall_check(const Options& o) {
    WallInvariantSystem s = !o.input.empty()
                                ? read_system_file(o.input)
                                : rank1_system(Rank1Data{o.m, o.c, o.b});
    auto r = check_congruences(s);
    if (json_mode(o)) {
        json j{{"record", "wall"}, {"rank2", s.rank2()}, {"rank3", s.rank3()}, {"pass", r.pass}};
        if (!r.pass) {
            j["violated"] = r.witness->congruence;
            j["witness_x"] = r.witness->x;
            j["witness_y"] = r.witness->y;
        }
        std::cout << j.dump() << '\n';
        return 0;
    }
    std::cout << "rank2: " << s.rank2() << '\n' << "rank3: " << s.rank3() << '\n';
    std::cout << "wall_congruences: " << (r.pass ? "pass" : "fail") << '\n';
    if (!r.pass) {
        std::cout << "violated: " << r.witness->congruence << '\n' << "witness_x:";
        for (Int v : r.witness->x) std::cout << ' ' << v;
        std::cout << '\n' << "witness_y:";
        for (Int v : r.witness->y) std::cout << ' ' << v;
        std::cout << '\n';
    }
    return 0;
}

// ---- rank1-search ----

std::pair<Int, Int> parse_range(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("--c-range expects LO:HI");
    try {
        Int lo = std::stoll(text.substr(0, colon));
        Int hi = std::stoll(text.substr(colon + 1));
        return {lo, hi};
    } catch (const std::exception&) {
        throw ParseError("--c-range expects integers LO:HI");
    }
}

int cmd_rank1_search(const Options& o) {
    if (o.b_given == o.m_given)
        throw PreconditionError("rank1-search needs exactly one of --m or --b");
    if (o.b_given) {
        auto r = rank1_min_m(o.b);
        Int clamped = r.m < 0 ? 0 : r.m;
        if (json_mode(o)) {
            json j{{"record", "rank1-min-m"},
                   {"b", o.b},
                   {"min_m", clamped},
                   {"exact_bound", r.m},
                   {"discarded_lower", r.discarded_lower}};
            if (r.m < 0) j["note"] = "clamped to 0: m is nonnegative for an ample class";
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "b: " << o.b << '\n' << "min_m: " << clamped << '\n';
            if (r.m < 0)
                std::cout << "note: exact bound " << r.m
                          << " clamped to 0 (m nonnegative for an ample class)\n";
            std::cout << "discarded_lower_bound: " << r.discarded_lower << '\n';
        }
        return 0;
    }
    if (o.m < 0) throw PreconditionError("--m must be nonnegative");
    Int bmax = rank1_max_b(o.m);
    Int residue = ((-2 * o.m) % 12 + 12) % 12;
    std::vector<Int> cs;
    bool have_range = !o.c_range.empty();
    if (have_range) {
        auto [lo, hi] = parse_range(o.c_range);
        if (lo > hi) throw EmptyRange("empty c range");
        if (o.m >= 1) {
            cs = rank1_admissible(o.m, 0, lo, hi);
        } else {
            for (Int c = lo; c <= hi; ++c)
                if (((2 * o.m + c) % 12 + 12) % 12 == 0) cs.push_back(c);
        }
    }
    if (json_mode(o)) {
        json j{{"record", "rank1-search"},
               {"m", o.m},
               {"b_max", bmax},
               {"c_residue_mod_12", residue}};
        if (have_range) j["admissible_c"] = cs;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "m: " << o.m << '\n'
                  << "b_max: " << bmax << '\n'
                  << "c_residue_mod_12: " << residue << '\n';
        if (have_range) {
            std::cout << "admissible_c:";
            for (Int c : cs) std::cout << ' ' << c;
            std::cout << '\n';
        }
    }
    return 0;
}

// ---- stratum ----

int cmd_stratum(const Options& o, bool second_given, Int m2, Int c2) {
    MmcKey k1{o.m, o.c};
    auto chi1 = chi_of_polarization(k1);
    if (json_mode(o)) {
        json j{{"record", "stratum"},
               {"m", k1.m},
               {"c", k1.c},
               {"chi_H", rational_str(chi1.value)},
               {"chi_integral", chi1.integral}};
        if (second_given) {
            j["m2"] = m2;
            j["c2"] = c2;
            j["same_stratum"] = same_stratum(k1, MmcKey{m2, c2});
        }
        std::cout << j.dump() << '\n';
        return 0;
    }
    std::cout << "stratum: M_{" << k1.m << ',' << k1.c << "}\n";
    std::cout << "chi_H: " << rational_str(chi1.value)
              << (chi1.integral ? " (integral)" : " (non-integral)") << '\n';
    if (second_given)
        std::cout << "same_stratum: "
                  << (same_stratum(k1, MmcKey{m2, c2}) ? "true" : "false") << '\n';
    return 0;
}

// ---- pipeline ----

std::string pipeline_one(const LatticePolytope& P, size_t index, const Options& o) {
    bool demo = !(o.m_given && o.c_given);
    auto r = run_pipeline(P, o.m, o.c, demo);

    // normal-form sanity on the mirror pair, gated by the vertex bound
    int involution = -1;  // -1 skipped, else boolean
    if (static_cast<int>(P.vertices().size()) <= o.vertex_bound &&
        static_cast<int>(P.facets().size()) <= o.vertex_bound)
        involution = are_equivalent(polar_dual(polar_dual(P)), P, o.vertex_bound) ? 1 : 0;

    std::ostringstream os;
    if (json_mode(o)) {
        os << json{{"record", "ambient"},
                   {"index", index},
                   {"reflexive", r.ambient.reflexive},
                   {"smooth_fano", r.ambient.smooth_fano},
                   {"ambient_dim", r.ambient.ambient_dim},
                   {"cy_dim", r.ambient.cy_dim},
                   {"facet_count", r.ambient.facet_count},
                   {"lattice_points", r.l_delta},
                   {"dual_lattice_points", r.l_dual}}
                  .dump()
           << '\n';
        json hj{{"record", "hodge"}, {"index", index}, {"a", r.profile.hodge.a},
                {"b", r.profile.hodge.b}, {"euler", r.profile.euler}};
        for (const auto& [key, value] : diamond_entries(r.dia)) hj[key] = value;
        os << hj.dump() << '\n';
        os << json{{"record", "polarization"},
                   {"index", index},
                   {"m", r.profile.m},
                   {"c", r.profile.c},
                   {"demo_defaults", r.demo_defaults},
                   {"chi_H", rational_str(r.chi_H.value)},
                   {"chi_integral", r.chi_H.integral}}
                  .dump()
           << '\n';
        json wj{{"record", "wall"}, {"index", index}, {"pass", r.wall.pass}};
        if (!r.wall.pass) {
            wj["violated"] = r.wall.witness->congruence;
            wj["witness_x"] = r.wall.witness->x;
        }
        os << wj.dump() << '\n';
        os << json{{"record", "kw"},
                   {"index", index},
                   {"m", r.profile.m},
                   {"a_minus_b", r.profile.hodge.a - r.profile.hodge.b},
                   {"window", {r.window.lo, r.window.hi}},
                   {"pass", r.kw_pass}}
                  .dump()
           << '\n';
        os << json{{"record", "stratum"}, {"index", index}, {"m", r.profile.m}, {"c", r.profile.c}}
                  .dump()
           << '\n';
        json mj{{"record", "mirror"},
                {"index", index},
                {"a", r.mirror_profile.hodge.a},
                {"b", r.mirror_profile.hodge.b},
                {"euler", r.mirror_profile.euler},
                {"m", r.mirror_profile.m},
                {"c", r.mirror_profile.c},
                {"hodge_exchanged", r.hodge_exchanged},
                {"wall_ranks_differ", r.wall_ranks_differ}};
        if (involution >= 0)
            mj["mirror_involution"] = (involution == 1);
        else
            mj["mirror_involution"] = "skipped";
        os << mj.dump() << '\n';
        return os.str();
    }
    os << "polytope: " << index << '\n';
    os << "reflexive: " << (r.ambient.reflexive ? "true" : "false") << '\n';
    os << "smooth_fano: " << (r.ambient.smooth_fano ? "true" : "false") << '\n';
    os << "lattice_points: " << r.l_delta << '\n';
    os << "dual_lattice_points: " << r.l_dual << '\n';
    os << "hodge: a=" << r.profile.hodge.a << " b=" << r.profile.hodge.b << '\n';
    os << "euler: " << r.profile.euler << '\n';
    os << "diamond:\n" << render_diamond(r.dia);
    os << "polarization: m=" << r.profile.m << " c=" << r.profile.c
       << (r.demo_defaults ? " (demo defaults)" : "") << '\n';
    os << "chi_H: " << rational_str(r.chi_H.value)
       << (r.chi_H.integral ? " (integral)" : " (non-integral)") << '\n';
    os << "wall_congruences: " << (r.wall.pass ? "pass" : "fail") << '\n';
    if (!r.wall.pass) os << "violated: " << r.wall.witness->congruence << '\n';
    os << "kw_window: [" << r.window.lo << ", " << r.window.hi << "]\n";
    os << "kw_a_minus_b: " << (r.profile.hodge.a - r.profile.hodge.b) << '\n';
    os << "kw: " << (r.kw_pass ? "pass" : "fail") << '\n';
    os << "stratum: M_{" << r.profile.m << ',' << r.profile.c << "}\n";
    os << "mirror_hodge: a=" << r.mirror_profile.hodge.a << " b=" << r.mirror_profile.hodge.b
       << '\n';
    os << "mirror_euler: " << r.mirror_profile.euler << '\n';
    os << "mirror_stratum: M_{" << r.mirror_profile.m << ',' << r.mirror_profile.c << "}\n";
    os << "hodge_exchanged: " << (r.hodge_exchanged ? "true" : "false") << '\n';
    os << "wall_rank2: " << r.profile.hodge.a << " vs " << r.mirror_profile.hodge.a
       << (r.wall_ranks_differ ? " (differ: not diffeomorphic)" : " (equal)") << '\n';
    os << "mirror_involution: "
       << (involution < 0 ? "skipped (vertex bound)" : involution == 1 ? "verified" : "FAILED")
       << '\n';
    return os.str();
}

int cmd_pipeline(const Options& o) {
    auto ps = load_polytopes(o.input);
    process_in_order(ps.size(), [&](size_t i) { return pipeline_one(ps[i], i, o); });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of Calabi-Yau threefolds from reflexive polytopes"};
    app.require_subcommand(1);

    Options o;
    Int m2 = 0, c2 = 0;
    bool m2_given = false, c2_given = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"text", "json-lines"}))
            ->capture_default_str();
    };

    auto* analyze = app.add_subcommand("analyze", "reflexivity and ambient report");
    analyze->add_option("input", o.input, "polytope file")->required();
    add_format(analyze);

    auto* dual = app.add_subcommand("dual", "polar dual polytope");
    dual->add_option("input", o.input, "polytope file")->required();
    add_format(dual);

    auto* census = app.add_subcommand("census2d", "all reflexive polygons up to equivalence");
    add_format(census);

    auto* hodge = app.add_subcommand("hodge", "Hodge numbers and diamond");
    hodge->add_option("input", o.input, "polytope file")->required();
    add_format(hodge);

    auto* wall = app.add_subcommand("wall-check", "diffeomorphism-invariant congruences");
    wall->add_option("input", o.input, "invariant-system file");
    wall->add_option("--m", o.m, "mu(H,H,H) for a rank-1 system");
    wall->add_option("--c", o.c, "c2(X).H for a rank-1 system");
    wall->add_option("--b", o.b, "h^{1,2} for a rank-1 system");
    add_format(wall);

    auto* search = app.add_subcommand("rank1-search", "rank-1 admissibility bounds");
    search->add_option("--m", o.m, "polarization cube m = H^3");
    search->add_option("--b", o.b, "Hodge number h^{1,2}");
    search->add_option("--c-range", o.c_range, "inclusive c range LO:HI");
    add_format(search);

    auto* stratum = app.add_subcommand("stratum", "moduli stratum keys M_{m,c}");
    stratum->add_option("--m", o.m, "H^3")->required();
    stratum->add_option("--c", o.c, "c2(X).H")->required();
    stratum->add_option("--m2", m2, "second key H^3");
    stratum->add_option("--c2", c2, "second key c2(X).H");
    add_format(stratum);

    auto* pipeline = app.add_subcommand("pipeline", "full invariant report with mirror");
    pipeline->add_option("input", o.input, "polytope file")->required();
    pipeline->add_option("--m", o.m, "H^3 (defaults to the quintic demo value 5)");
    pipeline->add_option("--c", o.c, "c2(X).H (defaults to the quintic demo value 50)");
    pipeline->add_option("--vertex-bound", o.vertex_bound, "normal-form vertex bound");
    add_format(pipeline);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    o.m_given = (wall->count("--m") || search->count("--m") || stratum->count("--m") ||
                 pipeline->count("--m")) > 0;
    o.c_given = (wall->count("--c") || stratum->count("--c") || pipeline->count("--c")) > 0;
    o.b_given = (wall->count("--b") || search->count("--b")) > 0;
    m2_given = stratum->count("--m2") > 0;
    c2_given = stratum->count("--c2") > 0;

    try {
        if (analyze->parsed()) return cmd_analyze(o);
        if (dual->parsed()) return cmd_dual(o);
        if (census->parsed()) return cmd_census(o);
        if (hodge->parsed()) return cmd_hodge(o);
        if (wall->parsed()) return cmd_wall_check(o);
        if (search->parsed()) return cmd_rank1_search(o);
        if (stratum->parsed()) return cmd_stratum(o, m2_given && c2_given, m2, c2);
        if (pipeline->parsed()) return cmd_pipeline(o);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
