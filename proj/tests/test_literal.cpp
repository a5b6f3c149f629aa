#include <doctest.h>

#include "distset/literal.hpp"

using namespace distset;

TEST_CASE("rational literals") {
    CHECK(render_literal(RealAlg(Rat(1, 6))) == "1/6");
    CHECK(render_literal(RealAlg(Rat(-2, 3))) == "-2/3");
    CHECK(render_literal(RealAlg(Rat(0))) == "0");
    CHECK(render_literal(RealAlg(Rat(-1))) == "-1");
    CHECK(alg_equal(parse_literal("-2/3"), RealAlg(Rat(-2, 3))));
    CHECK(alg_equal(parse_literal("7"), RealAlg(Rat(7))));
}

TEST_CASE("quadratic literals render canonically") {
    UniPoly p(std::vector<Rat>{Rat(1), Rat(-3), Rat(1)});  // roots (3±sqrt5)/2
    auto roots = RealAlg::roots_of(p);
    REQUIRE(roots.size() == 2);
    CHECK(render_literal(roots[1]) == "(3 + 1*sqrt(5))/2");
    CHECK(render_literal(roots[0]) == "(3 + -1*sqrt(5))/2");

    // 16 x^2 - 8 x - 4 reduces to 4x^2-2x-1 with roots (1±sqrt5)/4.
    UniPoly q(std::vector<Rat>{Rat(-4), Rat(-8), Rat(16)});
    auto r2 = RealAlg::roots_of(q);
    CHECK(render_literal(r2[1]) == "(1 + 1*sqrt(5))/4");
    CHECK(render_literal(r2[0]) == "(1 + -1*sqrt(5))/4");

    // 5x^2 - 1: roots ±1/sqrt5 = ±sqrt5/5.
    UniPoly f(std::vector<Rat>{Rat(-1), Rat(0), Rat(5)});
    auto r3 = RealAlg::roots_of(f);
    CHECK(render_literal(r3[1]) == "(0 + 1*sqrt(5))/5");
}

TEST_CASE("literal round trips") {
    for (const char* text :
         {"(3 + 1*sqrt(5))/2", "(1 + -1*sqrt(5))/4", "(0 + -1*sqrt(2))/3",
          "(-1 + 3*sqrt(3))/13", "(-7 + -5*sqrt(3))/26", "1/2", "-5/12", "0"}) {
        RealAlg x = parse_literal(text);
        CHECK(render_literal(x) == text);
        CHECK(alg_equal(parse_literal(render_literal(x)), x));
    }
    // ROOT form round trip (intervals may differ; values must agree).
    RealAlg r = parse_literal("root([-1,10,32,8]; 0, 1)");
    RealAlg r2 = parse_literal(render_literal(r));
    CHECK(alg_equal(r, r2));
    CHECK(r.defining().degree() == 3);
}

TEST_CASE("literal parse errors") {
    CHECK_THROWS_AS(parse_literal(""), ParseError);
    CHECK_THROWS_AS(parse_literal("abc"), ParseError);
    CHECK_THROWS_AS(parse_literal("(1 + 2*sqrt(-5))/3"), ParseError);
    CHECK_THROWS_AS(parse_literal("1/"), ParseError);
}

TEST_CASE("quadratic literal with square discriminant collapses to rational") {
    CHECK(alg_equal(parse_literal("(3 + 1*sqrt(9))/2"), RealAlg(Rat(3))));
    CHECK(render_literal(parse_literal("(3 + 1*sqrt(9))/2")) == "3");
}
