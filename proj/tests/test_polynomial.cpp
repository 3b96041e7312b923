#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace testsupport;

TEST_CASE("construction and basic queries") {
    Ring r = ring2();
    QPoly z = QPoly::zero(r);
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(z.str() == "0");

    QPoly x = QPoly::variable(r, 0);
    QPoly y = QPoly::variable(r, 1);
    QPoly p = x * x + Rational(2) * x * y + y * y;
    CHECK(p.degree() == 2);
    CHECK(p.nterms() == 3);
    CHECK(p.constant_term().is_zero());
    CHECK((p + QPoly::constant(r, Rational(5))).constant_term() == Rational(5));
    CHECK_FALSE(p.is_constant());
    CHECK(QPoly::constant(r, Rational(3)).is_constant());
}

TEST_CASE("parse and print round-trip on handwritten inputs") {
    Ring r = ring3();
    for (const char* s : {"x", "x + y", "x^2 - 2*x*y + y^2", "1/2*x^3 - 7", "x*y*z",
                          "-x + 3/4", "(x + y)*(x - y)", "2x(x+1)", "x^4 + z^4"}) {
        QPoly p = P(r, s);
        CHECK(P(r, p.str()) == p);
    }
}

TEST_CASE("parse errors carry positions") {
    Ring r = ring2();
    CHECK_THROWS_AS(P(r, "x + w"), germ::ParseError);
    CHECK_THROWS_AS(P(r, "x +"), germ::ParseError);
    CHECK_THROWS_AS(P(r, "(x"), germ::ParseError);
    CHECK_THROWS_AS(P(r, "x) y"), germ::ParseError);
    CHECK_THROWS_AS(P(r, "1/0"), germ::ParseError);
}

TEST_CASE("print then parse is the identity on random polynomials") {
    Ring r = ring3();
    std::mt19937 rng(11);
    for (int i = 0; i < 120; ++i) {
        QPoly p = random_poly(r, rng, 5, 6, 9);
        CHECK(P(r, p.str()) == p);
    }
}

TEST_CASE("ring axioms hold on random triples") {
    Ring r = ring3();
    std::mt19937 rng(23);
    for (int i = 0; i < 120; ++i) {
        QPoly a = random_poly(r, rng, 4, 4);
        QPoly b = random_poly(r, rng, 4, 4);
        QPoly c = random_poly(r, rng, 4, 4);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a + QPoly::zero(r) == a);
        CHECK(a * QPoly::constant(r, Rational(1)) == a);
    }
}

TEST_CASE("derivative satisfies the Leibniz rule") {
    Ring r = ring3();
    std::mt19937 rng(37);
    for (int i = 0; i < 120; ++i) {
        QPoly f = random_poly(r, rng, 4, 4);
        QPoly g = random_poly(r, rng, 4, 4);
        for (int v = 0; v < 3; ++v) {
            QPoly lhs = (f * g).partial_derivative(v);
            QPoly rhs = f.partial_derivative(v) * g + f * g.partial_derivative(v);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    Ring r = ring2();
    std::mt19937 rng(41);
    std::uniform_int_distribution<long> num(-5, 5);
    for (int i = 0; i < 60; ++i) {
        QPoly f = random_poly(r, rng, 4, 4);
        QPoly g = random_poly(r, rng, 4, 4);
        std::vector<Rational> pt{Rational(num(rng), 3), Rational(num(rng), 2)};
        CHECK((f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt));
        CHECK((f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt));
    }
}

TEST_CASE("substitution agrees with evaluation after the fact") {
    Ring r = ring2();
    std::mt19937 rng(43);
    std::uniform_int_distribution<long> num(-4, 4);
    for (int i = 0; i < 40; ++i) {
        QPoly f = random_poly(r, rng, 3, 4);
        QPoly g0 = random_poly(r, rng, 2, 3);
        QPoly g1 = random_poly(r, rng, 2, 3);
        std::vector<Rational> pt{Rational(num(rng)), Rational(num(rng))};
        Rational direct = f.substitute({g0, g1}, r).evaluate(pt);
        Rational chained = f.evaluate({g0.evaluate(pt), g1.evaluate(pt)});
        CHECK(direct == chained);
    }
}

TEST_CASE("reordering into another ring and back is lossless") {
    Ring dr = ring3();
    Ring lex = make_ring({"x", "y", "z"}, MonomialOrder::lex_order());
    std::mt19937 rng(47);
    for (int i = 0; i < 40; ++i) {
        QPoly p = random_poly(dr, rng, 4, 5);
        CHECK(p.in_ring(lex).in_ring(dr) == p);
    }
    QPoly q = P(dr, "x + y^2");
    CHECK(q.leading_monomial().e == std::vector<int>{0, 2, 0});
    CHECK(q.in_ring(lex).leading_monomial().e == std::vector<int>{1, 0, 0});
}

TEST_CASE("local order puts the lowest degree in front") {
    Ring loc = make_ring({"x", "y"}, MonomialOrder::local_order());
    QPoly p = P(loc, "x^2 + x");
    CHECK(p.leading_monomial().e == std::vector<int>{1, 0});
    CHECK(p.ecart() == 1);
}

TEST_CASE("monomial order sanity") {
    MonomialOrder dr = MonomialOrder::degrevlex_order();
    Monomial x({1, 0}), y({0, 1}), xy({1, 1}), x2({2, 0});
    CHECK(dr.greater(x, y));
    CHECK(dr.greater(x2, xy));
    CHECK(dr.compare(x, x) == 0);
    MonomialOrder lex = MonomialOrder::lex_order();
    CHECK(lex.greater(x, y));
    CHECK(lex.greater(x, Monomial({0, 5})));
    MonomialOrder loc = MonomialOrder::local_order();
    CHECK(loc.greater(x, x2));
}

TEST_CASE("mixed-ring arithmetic is rejected") {
    QPoly a = QPoly::variable(ring2(), 0);
    QPoly b = QPoly::variable(ring3(), 0);
    CHECK_THROWS_AS(a + b, germ::RingMismatch);
    CHECK_THROWS_AS(a * b, germ::RingMismatch);
    CHECK(a != b);
}
