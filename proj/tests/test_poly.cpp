#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pdeform/parse.hpp"
#include "support/gen.hpp"

using namespace pdeform;
using testgen::Rng;

TEST_CASE("parse literal examples") {
    Poly p = parse_poly("x^2 + y^2 + z^2");
    CHECK(p.term_count() == 3);
    for (const auto& [m, c] : p.terms()) CHECK(c == 1);

    Poly q = parse_poly("-1/2*z^4 + 3*x*y");
    CHECK(q.term_count() == 2);
    Monomial z4;
    z4.e = {0, 0, 4};
    Monomial xy;
    xy.e = {1, 1, 0};
    CHECK(*q.coeff(z4) == make_rational(-1, 2));
    CHECK(*q.coeff(xy) == 3);

    CHECK(parse_poly("x - x").is_zero());
    CHECK(parse_poly("x - x").term_count() == 0);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_poly(""), ParseError);
    CHECK_THROWS_AS(parse_poly("x +"), ParseError);
    CHECK_THROWS_AS(parse_poly("x*3"), ParseError);
    CHECK_THROWS_AS(parse_poly("w^2"), ParseError);
    CHECK_THROWS_AS(parse_poly("z", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0"), ParseError);
    CHECK_THROWS_AS(parse_poly("x y"), ParseError);
}

TEST_CASE("print parse round trip on random polynomials") {
    Rng rng(20240701);
    WeightSystem ws(1, 1, 1);
    for (int t = 0; t < 200; ++t) {
        Poly p = testgen::random_poly(rng, 3, 5, 6);
        CHECK(parse_poly(p.to_string(ws)) == p);
    }
    for (int t = 0; t < 50; ++t) {
        Poly p = testgen::random_poly(rng, 2, 5, 4);
        CHECK(parse_poly(p.to_string(), 2) == p);
    }
}

TEST_CASE("printing uses weighted degree then lex order") {
    WeightSystem ws(5, 5, 2);
    CHECK(parse_poly("z^5 + y^2 + x^2").to_string(ws) == "x^2 + y^2 + z^5");
    CHECK(parse_poly("2*x - 3").to_string() == "-3 + 2*x");
    CHECK(Poly(3).to_string() == "0");
    CHECK(parse_poly("x - y").to_string() == "x - y");
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(7);
    for (int t = 0; t < 100; ++t) {
        Poly a = testgen::random_poly(rng), b = testgen::random_poly(rng),
             c = testgen::random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Poly(3));
        CHECK(a * Poly::constant(Rational(1)) == a);
    }
}

TEST_CASE("leibniz rule for partials") {
    Rng rng(11);
    for (int t = 0; t < 100; ++t) {
        Poly p = testgen::random_poly(rng), q = testgen::random_poly(rng);
        for (int v = 0; v < 3; ++v)
            CHECK((p * q).partial(v) == p * q.partial(v) + q * p.partial(v));
    }
}

TEST_CASE("weighted degree and homogeneity") {
    WeightSystem ws(5, 5, 2);
    Poly p = parse_poly("x^2 + y^2 + z^5");
    long d = 0;
    CHECK(p.is_weight_homogeneous(ws, &d));
    CHECK(d == 10);
    CHECK(*p.weighted_degree(ws) == 10);

    WeightSystem unit(1, 1, 1);
    CHECK_FALSE(parse_poly("x^2 + y^3").is_weight_homogeneous(unit));
    CHECK(Poly(3).is_weight_homogeneous(unit));
    CHECK(!Poly(3).weighted_degree(unit).has_value());
}

TEST_CASE("weighted degree is additive for homogeneous factors") {
    Rng rng(13);
    WeightSystem ws(3, 2, 1);
    for (int t = 0; t < 60; ++t) {
        Poly p = testgen::random_weight_homogeneous(rng, ws, 1 + int(t % 5));
        Poly q = testgen::random_weight_homogeneous(rng, ws, 2 + int(t % 4));
        if (p.is_zero() || q.is_zero()) continue;
        CHECK(*(p * q).weighted_degree(ws) ==
              *p.weighted_degree(ws) + *q.weighted_degree(ws));
    }
}

TEST_CASE("euler identity") {
    WeightSystem unit(1, 1, 1);
    CHECK(euler_check(parse_poly("x^2 + y^2 + z^2"), unit));
    WeightSystem ws(5, 5, 2);
    CHECK(euler_check(parse_poly("x^2 + y^2 + z^5"), ws));
    CHECK_THROWS_AS(euler_check(parse_poly("x^2 + y^3"), unit), NotHomogeneous);

    Rng rng(17);
    for (int t = 0; t < 100; ++t) {
        WeightSystem w = t % 2 ? WeightSystem(1, 1, 1) : WeightSystem(3, 2, 1);
        Poly p = testgen::random_weight_homogeneous(rng, w, 2 + int(t % 7));
        CHECK(euler_check(p, w));
    }
}

TEST_CASE("gradients") {
    Vec3 g = grad(parse_poly("x^2 + y^2 + z^2"));
    CHECK(g[0] == parse_poly("2*x"));
    CHECK(g[1] == parse_poly("2*y"));
    CHECK(g[2] == parse_poly("2*z"));
    CHECK(grad(Poly::constant(Rational(5))).is_zero());
    CHECK(parse_poly("x*y*z").partial(1) == parse_poly("x*z"));
}

TEST_CASE("weight system validation") {
    CHECK_THROWS_AS(WeightSystem(2, 2, 2), PreconditionError);
    CHECK_THROWS_AS(WeightSystem(0, 1, 1), PreconditionError);
    CHECK(WeightSystem(5, 5, 2).weight_sum() == 12);
}

TEST_CASE("exponent overflow is an error") {
    Monomial big;
    big.e = {60000, 0, 0};
    CHECK_THROWS_AS(big.times(big), OverflowError);
    CHECK_THROWS_AS(parse_poly("x^70000"), ParseError);
}
