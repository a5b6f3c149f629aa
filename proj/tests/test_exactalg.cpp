#include <doctest.h>

#include <cmath>
#include <random>

#include "distset/literal.hpp"
#include "distset/realalg.hpp"
#include "distset/unipoly.hpp"

using namespace distset;

namespace {

UniPoly poly(std::vector<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly(std::move(c));
}

} // namespace

TEST_CASE("sturm isolation of simple quadratics") {
    // x^2 - 5
    auto iv = sturm_isolate(poly({-5, 0, 1}));
    REQUIRE(iv.size() == 2);
    CHECK(iv[0].second <= iv[1].first);  // disjoint open intervals may touch
    auto roots = RealAlg::roots_of(poly({-5, 0, 1}));
    REQUIRE(roots.size() == 2);
    CHECK(compare_rat(roots[0], Rat(0)) < 0);
    CHECK(compare_rat(roots[1], Rat(0)) > 0);
    CHECK(alg_sign(poly({-5, 0, 1}), roots[1]) == 0);
}

TEST_CASE("sturm isolation of the table cubic") {
    // 8x^3 + 32x^2 + 10x - 1: three real roots, exactly two with |x| <= 1.
    UniPoly cubic = poly({-1, 10, 32, 8});
    auto roots = RealAlg::roots_of(cubic);
    REQUIRE(roots.size() == 3);
    int inside = 0;
    for (const auto& r : roots)
        if (compare_rat(r, Rat(-1)) >= 0 && compare_rat(r, Rat(1)) <= 0) ++inside;
    CHECK(inside == 2);
}

TEST_CASE("roots of x^2-3x+1 are (3 +- sqrt5)/2") {
    UniPoly p = poly({1, -3, 1});
    auto roots = RealAlg::roots_of(p);
    REQUIRE(roots.size() == 2);
    RealAlg hi = parse_literal("(3 + 1*sqrt(5))/2");
    RealAlg lo = parse_literal("(3 + -1*sqrt(5))/2");
    CHECK(alg_equal(roots[0], lo));
    CHECK(alg_equal(roots[1], hi));
    CHECK(alg_equal(alg_recip(hi), lo));  // the two roots multiply to 1
}

TEST_CASE("root counts on random products of linear factors") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> num(-6, 6);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rat> roots;
        UniPoly p = UniPoly::constant(Rat(1));
        int nf = 1 + trial % 4;
        for (int i = 0; i < nf; ++i) {
            Rat r(num(rng), 1 + (trial + i) % 3);
            r.canonicalize();
            bool dup = false;
            for (const auto& q : roots) dup |= (q == r);
            if (dup) continue;
            roots.push_back(r);
            p = p * (poly({0, 1}) - UniPoly::constant(r));
        }
        auto intervals = sturm_isolate(p);
        CHECK(intervals.size() == roots.size());
        UniPoly sf = squarefree_part(p);
        for (auto& [lo, hi] : intervals)
            CHECK(sign_of(sf.eval(lo)) * sign_of(sf.eval(hi)) < 0);
    }
}

TEST_CASE("alg_sign exact decisions") {
    RealAlg sqrt5 = RealAlg::roots_of(poly({-5, 0, 1}))[1];
    CHECK(alg_sign(poly({-5, 0, 1}), sqrt5) == 0);

    RealAlg golden = parse_literal("(3 + 1*sqrt(5))/2");
    CHECK(alg_sign(poly({-1, 1}), golden) == 1);  // x - 1 > 0

    RealAlg neg = parse_literal("(1 + -1*sqrt(5))/4");
    CHECK(alg_sign(poly({0, 1}), neg) == -1);  // x < 0
}

TEST_CASE("alg_sign is stable under prior refinement") {
    RealAlg x = parse_literal("(1 + -1*sqrt(5))/4");
    UniPoly f = poly({1, 3, -2});
    int s0 = alg_sign(f, x);
    RealAlg y = x;
    for (int i = 0; i < 40; ++i) refine_once(y);
    CHECK(alg_sign(f, y) == s0);
    CHECK(compare(x, y) == 0);
}

TEST_CASE("comparisons across representations") {
    RealAlg a = parse_literal("(0 + 1*sqrt(2))/2");  // ~0.707
    RealAlg b = parse_literal("(0 + 1*sqrt(5))/5");  // ~0.447
    CHECK(compare(a, b) > 0);
    CHECK(compare(b, a) < 0);
    // Same value via a bigger defining polynomial: (2x^2-1)(x-3).
    RealAlg c = RealAlg::make(poly({-1, 0, 2}) * poly({-3, 1}), Rat(1, 2), Rat(9, 10));
    CHECK(compare(a, c) == 0);
}

TEST_CASE("compose, reciprocal and quotient") {
    RealAlg r = parse_literal("root([-1,10,32,8]; 0, 1)");
    RealAlg b = compose_poly(UniPoly(std::vector<Rat>{Rat(-1, 2), Rat(-2)}), r);
    double expect = -0.5 - 2 * r.to_double();
    CHECK(std::abs(b.to_double() - expect) < 1e-12);

    RealAlg phi2 = parse_literal("(3 + 1*sqrt(5))/2");
    CHECK(alg_equal(alg_recip(phi2), parse_literal("(3 + -1*sqrt(5))/2")));

    RealAlg q =
        alg_div(parse_literal("(0 + 1*sqrt(2))/2"), parse_literal("(0 + 1*sqrt(2))/1"));
    CHECK(alg_equal(q, RealAlg(Rat(1, 2))));
}

TEST_CASE("rational root extraction and factoring") {
    UniPoly p = poly({-2, 1}) * poly({-5, 0, 1});  // (x-2)(x^2-5)
    auto factors = factor_squarefree(p);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].degree() == 1);
    CHECK(factors[1].degree() == 2);
    auto f2 = factor_squarefree(poly({-2, 0, 1}) * poly({-3, 0, 1}));
    REQUIRE(f2.size() == 2);
    CHECK(f2[0].degree() == 2);
    CHECK(f2[1].degree() == 2);
    // RealAlg normalization picks the right factor: sqrt(3) from the quartic.
    RealAlg s3 = RealAlg::make(poly({-2, 0, 1}) * poly({-3, 0, 1}), Rat(17, 10), Rat(9, 5));
    CHECK(s3.defining().degree() == 2);
    CHECK(alg_equal(s3, parse_literal("(0 + 1*sqrt(3))/1")));
}

TEST_CASE("bivariate sign at irrational pairs") {
    RealAlg s2 = parse_literal("(0 + 1*sqrt(2))/1");
    RealAlg s3 = parse_literal("(0 + 1*sqrt(3))/1");
    BiPoly f = BiPoly::term(2, 2, Rat(1)) - BiPoly::constant(Rat(6));
    CHECK(sign2(f, s2, s3) == 0);  // (sqrt2 * sqrt3)^2 = 6
    BiPoly g = BiPoly::term(2, 2, Rat(1)) - BiPoly::constant(Rat(7));
    CHECK(sign2(g, s2, s3) == -1);
    BiPoly h = BiPoly::term(1, 1, Rat(1)) - BiPoly::constant(Rat(2));
    CHECK(sign2(h, s2, s3) == 1);  // sqrt(6) > 2
    RealAlg s2b = RealAlg::make(poly({-2, 0, 1}) * poly({-7, 1}), Rat(7, 5), Rat(3, 2));
    BiPoly diff = BiPoly::var_a() - BiPoly::var_b();
    CHECK(sign2(diff, s2, s2b) == 0);
}

TEST_CASE("resultants eliminate variables") {
    BiPoly f = BiPoly::var_a() - BiPoly::var_b();
    BiPoly g = BiPoly::var_a() + BiPoly::var_b() - BiPoly::constant(Rat(1));
    UniPoly r = resultant_eliminate_a(f, g);
    UniPoly want = poly({-1, 2});  // 2b - 1 up to sign
    CHECK((r == want || r == -want));

    BiPoly circle = BiPoly::term(2, 0, Rat(1)) + BiPoly::term(0, 2, Rat(1)) -
                    BiPoly::constant(Rat(1));
    UniPoly r2 = resultant_eliminate_a(circle, f);
    UniPoly want2 = poly({-1, 0, 2});  // 2b^2 - 1
    CHECK((r2 == want2 || r2 == -want2));

    // Specialization: Res_a(a - 1, m) = m(1, b) for m with unit lead in a.
    BiPoly m = BiPoly::term(1, 1, Rat(1)) + BiPoly::term(0, 2, Rat(3)) -
               BiPoly::constant(Rat(4));
    BiPoly lin = BiPoly::var_a() - BiPoly::constant(Rat(1));
    UniPoly spec = resultant_eliminate_a(lin, m);
    UniPoly direct = m.subst_a(Rat(1));
    CHECK((spec == direct || spec == -direct));
}

TEST_CASE("resultant vanishes exactly at common-root specializations") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> coeff(-4, 4);
    auto random_bipoly = [&](int da, int db) {
        BiPoly p;
        for (int i = 0; i <= da; ++i)
            for (int j = 0; j <= db; ++j) p.add_term(i, j, Rat(coeff(rng)));
        return p;
    };
    int checked = 0;
    for (int trial = 0; trial < 40 && checked < 50; ++trial) {
        BiPoly f = random_bipoly(2, 1);
        BiPoly g = random_bipoly(2, 2);
        if (f.deg_a() < 2 || g.deg_a() < 2) continue;
        UniPoly res = resultant_eliminate_a(f, g);
        if (res.is_zero()) continue;
        for (int bi = -3; bi <= 3 && checked < 50; ++bi) {
            Rat b0(bi);
            // Skip specializations that drop the leading a-degree.
            if (sign_of(f.coeffs_in_a_as_unipoly_b().back().eval(b0)) == 0) continue;
            if (sign_of(g.coeffs_in_a_as_unipoly_b().back().eval(b0)) == 0) continue;
            UniPoly fb = f.swap_vars().subst_a(b0);
            UniPoly gb = g.swap_vars().subst_a(b0);
            if (fb.is_zero() || gb.is_zero()) continue;
            UniPoly common = gcd(fb, gb);
            bool res_zero = sign_of(res.eval(b0)) == 0;
            CHECK(res_zero == (common.degree() >= 1));
            ++checked;
        }
    }
    CHECK(checked >= 30);
}

TEST_CASE("interval arithmetic basics") {
    RatInterval x{Rat(-2), Rat(3)};
    RatInterval y{Rat(1), Rat(2)};
    RatInterval p = x * y;
    CHECK(p.lo == Rat(-4));
    CHECK(p.hi == Rat(6));
    CHECK(p.contains_zero());
    CHECK((y * y).definite_sign() == 1);
}
