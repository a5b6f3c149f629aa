#include <doctest.h>

#include "distset/atlas.hpp"
#include "distset/dissolve.hpp"
#include "distset/literal.hpp"
#include "distset/realize.hpp"

using namespace distset;

TEST_CASE("16-cell class solves to (0,-1) with rank 4") {
    Graph g = decode("aaaaaaaaabaabaaabaaaabaaaaaa", 8);
    SphericalVerdict v = solve_spherical(g, 4);
    CHECK(v.survived);
    REQUIRE(v.solutions.size() == 1);
    const auto& s = v.solutions[0];
    CHECK(alg_equal(s.a, RealAlg(Rat(0))));
    CHECK(alg_equal(s.b, RealAlg(Rat(-1))));
    CHECK(s.psd);
    CHECK(*s.rank == 4);
    CHECK(s.jspherical);
    CHECK(s.attribution == Attribution::Graph);
    CHECK(count_sets(v) == 1);
}

TEST_CASE("Paley class is self-complementary with mirrored solutions") {
    Graph g = decode("aaaabbabbabababbabbaabbaababbbababaa", 9);
    SphericalVerdict v = solve_spherical(g, 4);
    CHECK(v.survived);
    REQUIRE(v.solutions.size() == 2);  // (1/4,-1/2) and its mirror
    bool found = false;
    for (const auto& s : v.solutions)
        found |= alg_equal(s.a, RealAlg(Rat(1, 4))) && alg_equal(s.b, RealAlg(Rat(-1, 2)));
    CHECK(found);
    CHECK(count_sets(v) == 1);
}

TEST_CASE("two golden-ratio solutions split orientations") {
    Graph g = decode("aaaaaaaaabaabababaabbbaaabbb", 8);
    SphericalVerdict v = solve_spherical(g, 4);
    REQUIRE(v.solutions.size() == 2);
    RealAlg plus = parse_literal("(1 + 1*sqrt(5))/4");
    RealAlg minus = parse_literal("(1 + -1*sqrt(5))/4");
    int to_graph = 0, to_complement = 0;
    for (const auto& s : v.solutions) {
        CHECK(alg_equal(s.b, RealAlg(Rat(1, 2))));
        if (alg_equal(s.a, plus)) {
            CHECK(s.attribution == Attribution::Graph);
            ++to_graph;
        }
        if (alg_equal(s.a, minus)) {
            CHECK(s.attribution == Attribution::Complement);
            ++to_complement;
        }
    }
    CHECK(to_graph == 1);
    CHECK(to_complement == 1);
    CHECK(count_sets(v) == 2);
}

TEST_CASE("triangular-graph class solves to (1/6,-2/3)") {
    Graph g = decode("aaaaaaaabbababaabbaaabaabaabbabaabaabbaabaaaa", 10);
    SphericalVerdict v = solve_spherical(g, 4);
    REQUIRE(v.solutions.size() == 1);
    CHECK(alg_equal(v.solutions[0].a, RealAlg(Rat(1, 6))));
    CHECK(alg_equal(v.solutions[0].b, RealAlg(Rat(-2, 3))));
    CHECK(*v.solutions[0].rank == 4);
}

TEST_CASE("complete and empty graphs are rejected by the solvers") {
    CHECK_THROWS_AS(solve_spherical(Graph::complete(6), 4), NotTwoDistanceGraph);
    CHECK_THROWS_AS(solve_general(Graph::empty_graph(6), 4), NotTwoDistanceGraph);
    CHECK_THROWS_AS(mydim(Graph::complete(5)), NotTwoDistanceGraph);
}

TEST_CASE("verify_point accepts correct parameters and rejects wrong ones") {
    Graph oct = decode("aaaaababaabaaaa", 6);
    ValidityReport ok = verify_point(oct, RealAlg(Rat(0)), RealAlg(Rat(-1)), 4,
                                     SolveMode::Spherical);
    CHECK(ok.valid);
    CHECK(*ok.rank == 3);
    CHECK(ok.jspherical);

    ValidityReport bad = verify_point(oct, RealAlg(Rat(1, 6)), RealAlg(Rat(-2, 3)), 4,
                                      SolveMode::Spherical);
    CHECK(!bad.minors_vanish);
    CHECK(!bad.valid);

    Graph g6f = decode("aaaaaaaabbbbaaa", 6);
    ValidityReport f = verify_point(g6f, RealAlg(Rat(0)), parse_literal("(0 + 1*sqrt(2))/2"),
                                    4, SolveMode::Spherical);
    CHECK(f.valid);
    CHECK(*f.rank <= 4);

    // Single-distance row: the regular 4-simplex.
    ValidityReport k5 = verify_point(Graph::complete(5), RealAlg(Rat(-1, 4)),
                                     RealAlg(Rat(0)), 4, SolveMode::Spherical);
    CHECK(k5.valid);
    CHECK(*k5.rank == 4);
}

TEST_CASE("general pipeline on the nine-vertex rows") {
    Graph g9d = decode("aaaaaaaaabaababaabbaaabbbbbbbabbbbbb", 9);
    GeneralVerdict v = solve_general(g9d, 4);
    CHECK(v.survived);
    REQUIRE(v.solutions.size() == 2);
    RealAlg hi = parse_literal("(3 + 1*sqrt(5))/2");
    RealAlg lo = parse_literal("(3 + -1*sqrt(5))/2");
    CHECK(alg_equal(v.solutions[0].b, lo));
    CHECK(alg_equal(v.solutions[1].b, hi));
    CHECK(v.solutions[1].attribution == Attribution::Graph);
    CHECK(v.solutions[0].attribution == Attribution::Complement);
    CHECK(count_sets(v) == 1);  // self-complementary: b and 1/b identified
    CHECK(count_nonspherical_sets(v) == 1);

    Graph g9c = decode("aaaaaaaaaaaabbbababbbabbabbbabbbabbb", 9);
    GeneralVerdict vc = solve_general(g9c, 4);
    REQUIRE(vc.solutions.size() == 2);
    CHECK(count_sets(vc) == 2);
    CHECK(count_nonspherical_sets(vc) == 2);
    for (const auto& s : vc.solutions) CHECK(!s.spherical_flag);
}

TEST_CASE("five-vertex general systems are a continuum") {
    Graph c5 = decode("ababbaabba", 5);
    GeneralVerdict v = solve_general(c5, 4);
    CHECK(v.continuum);
    CHECK(v.survived);
}

TEST_CASE("spherical configurations are recognized in the general pipeline") {
    // Octahedron as a general solution: alpha1 = 1, alpha2^2 = 2.
    Graph oct = decode("aaaaababaabaaaa", 6);
    GeneralVerdict v = solve_general(oct, 4);
    bool found = false;
    for (const auto& s : v.solutions) {
        if (alg_equal(s.b, RealAlg(Rat(2)))) {
            found = true;
            CHECK(s.spherical_flag);
            CHECK(*s.rank == 3);
        }
    }
    CHECK(found);
}

TEST_CASE("mydim values") {
    CHECK(mydim(decode("aba", 3)) == 1);
    CHECK(mydim(decode("ababbaabba", 5)) == 2);  // pentagon
    CHECK(mydim(decode("aaaaaaaabbaabba", 6)) == 4);
    // Octahedron fits in dimension 3.
    CHECK(mydim(decode("aaaaababaabaaaa", 6)) == 3);
}

TEST_CASE("cross-pipeline consistency for the 16-cell") {
    Graph g = decode("aaaaaaaaabaabaaabaaaabaaaaaa", 8);
    // Spherical (0,-1) converts to squared distances (2, 4).
    ValidityReport rep = verify_point(g, RealAlg(Rat(2)), RealAlg(Rat(4)), 4,
                                      SolveMode::General);
    CHECK(rep.valid);
    CHECK(*rep.rank == 4);
    CHECK(rep.attribution == Attribution::Graph);
    CHECK(rep.spherical_flag);
}

TEST_CASE("realization reproduces the two distances") {
    Graph g = decode("aaaaaaaaabaabaaabaaaabaaaaaa", 8);
    Realization r = realize_spherical(g, RealAlg(Rat(0)), RealAlg(Rat(-1)), 4, 4);
    CHECK(r.max_relative_residual(g) < 1e-9);

    Realization k5 = realize_spherical(Graph::complete(5), RealAlg(Rat(-1, 4)),
                                       RealAlg(Rat(0)), 4, 4);
    CHECK(k5.max_relative_residual(Graph::complete(5)) < 1e-9);

    Graph g9d = decode("aaaaaaaaabaababaabbaaabbbbbbbabbbbbb", 9);
    Realization rg = realize_general(g9d, parse_literal("(3 + 1*sqrt(5))/2"), 4, 4);
    CHECK(rg.max_relative_residual(g9d) < 1e-9);
}
