#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include <cy3/lattice.hpp>
#include <cy3/toric.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cy3;

TEST_CASE("hull of the coordinate box") {
    auto P = hull_from_points({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}, 2);
    CHECK(P.vertices().size() == 4);
    REQUIRE(P.facets().size() == 4);
    std::set<std::pair<LatticePoint, Int>> fs;
    for (const auto& f : P.facets()) fs.insert({f.normal, f.offset});
    CHECK(fs.count({{1, 0}, 1}));
    CHECK(fs.count({{-1, 0}, 1}));
    CHECK(fs.count({{0, 1}, 1}));
    CHECK(fs.count({{0, -1}, 1}));
}

TEST_CASE("hull drops collinear and interior points") {
    auto P = hull_from_points({{0, 0}, {1, 0}, {2, 0}, {0, 1}}, 2);
    CHECK(P.vertices() == std::vector<LatticePoint>{{0, 0}, {0, 1}, {2, 0}});
}

TEST_CASE("hull of the 126 quintic exponent points is a 4-simplex") {
    auto pts = fixtures::quintic_points();
    REQUIRE(static_cast<long long>(pts.size()) == oracle::binomial(9, 4));

    // oracle: the five scaled unit-simplex vertices dominate all 126 points
    std::vector<LatticePoint> expected = {
        {-1, -1, -1, -1}, {-1, -1, -1, 4}, {-1, -1, 4, -1}, {-1, 4, -1, -1}, {4, -1, -1, -1}};
    for (const auto& p : pts) {
        bool inside = true;
        for (size_t j = 0; j < 4; ++j)
            if (p[j] < -1) inside = false;
        if (p[0] + p[1] + p[2] + p[3] > 1) inside = false;
        CHECK(inside);
    }

    auto P = fixtures::quintic();
    CHECK(P.vertices() == expected);
    CHECK(P.facets().size() == 5);
}

TEST_CASE("hull rejects degenerate input") {
    CHECK_THROWS_AS(hull_from_points({{0, 0}, {1, 0}, {2, 0}}, 2), NotFullDimensional);
    CHECK_THROWS_AS(hull_from_points({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, 3), NotFullDimensional);
}

TEST_CASE("hull is idempotent on vertex lists") {
    for (const auto& P : {fixtures::quintic(), fixtures::square(), fixtures::diamond2d()}) {
        auto Q = hull_from_points(P.vertices(), P.dim());
        CHECK(Q == P);
    }
}

TEST_CASE("polar dual of the square is the diamond") {
    auto D = polar_dual(fixtures::square());
    CHECK(D == fixtures::diamond2d());
}

TEST_CASE("polar dual of the quintic simplex") {
    auto D = polar_dual(fixtures::quintic());
    // glossary convention y.x <= 1: the dual vertices are the facet normals
    std::vector<LatticePoint> expected = {
        {-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}, {1, 1, 1, 1}};
    CHECK(D.vertices() == expected);
    // and it is unimodularly the standard simplex conv(e1..e4, -1)
    CHECK(are_equivalent(D, fixtures::quintic_dual()));
}

TEST_CASE("polar dual is an involution on reflexive polytopes") {
    for (const auto& P : {fixtures::square(), fixtures::quintic()}) {
        CHECK(polar_dual(polar_dual(P)) == P);
    }
}

TEST_CASE("polar dual error cases") {
    auto shifted = hull_from_points({{0, 0}, {3, 0}, {0, 3}}, 2);  // origin on boundary
    CHECK_THROWS_AS(polar_dual(shifted), OriginNotInterior);

    try {
        polar_dual(fixtures::square2x());
        FAIL("expected NonIntegralDual");
    } catch (const NonIntegralDual& e) {
        REQUIRE(e.witnesses().size() == 4);  // all four vertices are half-integral
        for (const auto& w : e.witnesses()) {
            Rational nonzero(0);
            for (const auto& c : w)
                if (c != 0) nonzero = c;
            CHECK(abs(nonzero) == Rational(1, 2));
        }
    }
}

TEST_CASE("lattice point enumeration") {
    CHECK(enumerate_lattice_points(fixtures::square()).size() == 9);
    CHECK(static_cast<long long>(enumerate_lattice_points(fixtures::quintic()).size()) ==
          oracle::binomial(9, 4));

    // oracle: exhaustive scan of the box [-1,1]^4 against the vertex pairing
    auto quintic = fixtures::quintic();
    auto dual = polar_dual(quintic);
    auto dual_pts = enumerate_lattice_points(dual);
    std::set<LatticePoint> expect;
    for (Int a = -1; a <= 1; ++a)
        for (Int b = -1; b <= 1; ++b)
            for (Int c = -1; c <= 1; ++c)
                for (Int d = -1; d <= 1; ++d) {
                    LatticePoint y{a, b, c, d};
                    bool in = true;
                    for (const auto& v : quintic.vertices()) {
                        Int s = 0;
                        for (size_t i = 0; i < 4; ++i) s += y[i] * v[i];
                        if (s > 1) in = false;
                    }
                    if (in) expect.insert(y);
                }
    CHECK(dual_pts.size() == 6);
    CHECK(std::set<LatticePoint>(dual_pts.begin(), dual_pts.end()) == expect);

    // sorted lexicographically
    CHECK(std::is_sorted(dual_pts.begin(), dual_pts.end()));
}

TEST_CASE("face lattice of the 2-simplex") {
    auto P = hull_from_points({{0, 0}, {1, 0}, {0, 1}}, 2);
    auto faces = face_lattice(P);
    int by_dim[3] = {0, 0, 0};
    for (const auto& f : faces) ++by_dim[f.dim];
    CHECK(by_dim[0] == 3);
    CHECK(by_dim[1] == 3);
    CHECK(by_dim[2] == 1);
}

TEST_CASE("face lattice of the quintic simplex") {
    auto faces = face_lattice(fixtures::quintic());
    int facet_count = 0, two_face_count = 0;
    for (const auto& f : faces) {
        if (f.dim == 3) {
            ++facet_count;
            // oracle: degree-5 monomials in 4 variables, all exponents >= 1
            CHECK(f.l_star == oracle::monomial_count(4, 5, 1));
        }
        if (f.dim == 2) {
            ++two_face_count;
            CHECK(f.l_star == oracle::monomial_count(3, 5, 1));
        }
        CHECK(f.l >= f.l_star);
        CHECK(f.l >= f.dim + 1);
    }
    CHECK(facet_count == 5);
    CHECK(two_face_count == 10);
    CHECK(oracle::monomial_count(4, 5, 1) == 4);
    CHECK(oracle::monomial_count(3, 5, 1) == 6);
}

TEST_CASE("face lattice of the quintic dual: no interior points on proper faces") {
    auto faces = face_lattice(polar_dual(fixtures::quintic()));
    for (const auto& f : faces) {
        if (f.dim < 4) {
            if (f.dim == 0)
                CHECK(f.l_star == 1);
            else
                CHECK(f.l_star == 0);
        } else {
            CHECK(f.l_star == 1);  // the origin
        }
    }
}

TEST_CASE("face count of top dimension equals facet count") {
    for (const auto& P :
         {fixtures::square(), fixtures::diamond2d(), fixtures::quintic(), fixtures::octic()}) {
        auto faces = face_lattice(P);
        size_t top_minus_one = 0, top = 0;
        for (const auto& f : faces) {
            if (f.dim == P.dim() - 1) ++top_minus_one;
            if (f.dim == P.dim()) ++top;
        }
        CHECK(top == 1);
        CHECK(top_minus_one == P.facets().size());
    }
}

TEST_CASE("normal form separates and identifies") {
    auto square = fixtures::square();
    CHECK(normal_form(square) == normal_form(square));

    // sheared square: image under ((1,1),(0,1))
    std::vector<LatticePoint> sheared;
    for (const auto& v : square.vertices()) sheared.push_back({v[0] + v[1], v[1]});
    auto S = hull_from_points(sheared, 2);
    CHECK(are_equivalent(square, S));
    CHECK(oracle::equivalent2d({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}},
                               {{2, 1}, {0, -1}, {0, 1}, {-2, -1}}));

    // square vs diamond: 9 vs 5 lattice points, never equivalent
    CHECK(enumerate_lattice_points(square).size() == 9);
    CHECK(enumerate_lattice_points(fixtures::diamond2d()).size() == 5);
    CHECK_FALSE(are_equivalent(square, fixtures::diamond2d()));
}

TEST_CASE("normal form enforces the vertex bound") {
    CHECK_THROWS_AS(normal_form(fixtures::square(), 3), TooLarge);
    CHECK_NOTHROW(normal_form(fixtures::square(), 4));
}

TEST_CASE("normal form survives large automorphism groups") {
    // the 4-cube and its dual cross-polytope have 384 symmetries each, the
    // worst tie cascade for the ordering search
    std::vector<LatticePoint> cross;
    for (int i = 0; i < 4; ++i) {
        LatticePoint p(4, 0), m(4, 0);
        p[static_cast<size_t>(i)] = 1;
        m[static_cast<size_t>(i)] = -1;
        cross.push_back(p);
        cross.push_back(m);
    }
    std::mt19937_64 rng(0xcafe);
    for (const auto& P : {fixtures::cube4(), hull_from_points(cross, 4), fixtures::octic()}) {
        auto nf = normal_form(P);
        for (int t = 0; t < 5; ++t) {
            auto u = oracle::random_unimodular(4, rng);
            std::vector<LatticePoint> img;
            for (const auto& v : P.vertices()) img.push_back(oracle::apply(u, v));
            CHECK(normal_form(hull_from_points(img, 4)) == nf);
        }
    }
    CHECK_FALSE(are_equivalent(fixtures::cube4(), hull_from_points(cross, 4)));
}

TEST_CASE("unimodular invariance of counts and forms") {
    std::mt19937_64 rng(20240817);
    for (const auto& P : {fixtures::square(), fixtures::diamond2d(), fixtures::quintic()}) {
        auto nf = normal_form(P);
        auto pts = enumerate_lattice_points(P).size();
        auto faces = face_lattice(P);
        std::multiset<std::pair<int, std::pair<long long, long long>>> shape;
        for (const auto& f : faces) shape.insert({f.dim, {f.l, f.l_star}});
        for (int t = 0; t < 12; ++t) {
            auto u = oracle::random_unimodular(P.dim(), rng);
            std::vector<LatticePoint> img;
            for (const auto& v : P.vertices()) img.push_back(oracle::apply(u, v));
            auto Q = hull_from_points(img, P.dim());
            CHECK(normal_form(Q) == nf);
            CHECK(enumerate_lattice_points(Q).size() == pts);
            std::multiset<std::pair<int, std::pair<long long, long long>>> shape2;
            for (const auto& f : face_lattice(Q)) shape2.insert({f.dim, {f.l, f.l_star}});
            CHECK(shape2 == shape);
        }
    }
}

TEST_CASE("polytope text format round-trips bit-exactly") {
    auto P = fixtures::quintic();
    std::string once = polytope_to_string(P);
    std::istringstream in(once);
    auto Q = read_polytope(in);
    CHECK(Q == P);
    CHECK(polytope_to_string(Q) == once);
}

TEST_CASE("polytope reader accepts comments and point lists") {
    std::istringstream in("# a square, as its 4 corner points plus center\n2 5\n1 1\n1 -1\n-1 1\n-1 -1\n0 0\n");
    auto P = read_polytope(in);
    CHECK(P == fixtures::square());
}

TEST_CASE("polytope reader reports malformed input") {
    auto parse = [](const std::string& s) {
        std::istringstream in(s);
        return read_polytope(in);
    };
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("# only a comment\n"), ParseError);
    CHECK_THROWS_AS(parse("2\n"), ParseError);
    CHECK_THROWS_AS(parse("5 3\n0 0 0 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse("2 3\n1 1\n1 -1\n"), ParseError);       // missing point
    CHECK_THROWS_AS(parse("2 2\n1 1 7\n1 -1\n"), ParseError);    // extra coordinate
    CHECK_THROWS_AS(parse("2 2\n1 x\n1 -1\n"), ParseError);      // non-integer
}

TEST_CASE("batch reader consumes consecutive blocks") {
    std::ostringstream os;
    write_polytope(os, fixtures::square());
    os << "# next\n";
    write_polytope(os, fixtures::diamond2d());
    std::istringstream in(os.str());
    auto all = read_polytopes(in);
    REQUIRE(all.size() == 2);
    CHECK(all[0] == fixtures::square());
    CHECK(all[1] == fixtures::diamond2d());
}
