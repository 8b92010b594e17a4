#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "genocchi/bivar_poly.hpp"
#include "oracle.hpp"

using genocchi::BivarPoly;
using genocchi::binomial;
using genocchi::PolyAccum;
using genocchi::Rational;
using genocchi::Var;

namespace {

BivarPoly random_poly(std::mt19937& rng, unsigned max_deg = 8, unsigned max_terms = 6) {
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::uniform_int_distribution<unsigned> count(0, max_terms);
    BivarPoly p;
    const unsigned terms = count(rng);
    for (unsigned i = 0; i < terms; ++i) {
        p += BivarPoly::monomial(deg(rng), deg(rng), Rational(num(rng), den(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("canonical form: sorted terms, no zero coefficients") {
    BivarPoly p = BivarPoly::monomial(0, 1, Rational(2)) +
                  BivarPoly::monomial(2, 0, Rational(1)) +
                  BivarPoly::monomial(1, 1, Rational(3));
    REQUIRE(p.term_count() == 3);
    for (std::size_t i = 1; i < p.terms().size(); ++i) {
        CHECK(BivarPoly::term_before(p.terms()[i - 1].degx, p.terms()[i - 1].degy,
                                     p.terms()[i].degx, p.terms()[i].degy));
    }
    BivarPoly diff = (BivarPoly::x() + BivarPoly::y()) - (BivarPoly::x() + BivarPoly::y());
    CHECK(diff.is_zero());
    CHECK(diff.term_count() == 0);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        BivarPoly q = random_poly(rng);
        for (const auto& term : q.terms()) CHECK(!term.coeff.is_zero());
        for (std::size_t i = 1; i < q.terms().size(); ++i) {
            CHECK(BivarPoly::term_before(q.terms()[i - 1].degx, q.terms()[i - 1].degy,
                                         q.terms()[i].degx, q.terms()[i].degy));
        }
    }
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(20240812);
    for (int trial = 0; trial < 60; ++trial) {
        BivarPoly a = random_poly(rng);
        BivarPoly b = random_poly(rng);
        BivarPoly c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + BivarPoly() == a);
        CHECK(a * BivarPoly(1L) == a);
        CHECK(a * BivarPoly() == BivarPoly());
        CHECK(a - a == BivarPoly());
        CHECK(-(-a) == a);
    }
}

TEST_CASE("accessors") {
    BivarPoly p = BivarPoly::monomial(2, 0, Rational(1)) +
                  BivarPoly::monomial(0, 1, Rational(2));  // x^2 + 2y
    CHECK(p.degree(Var::x) == 2);
    CHECK(p.degree(Var::y) == 1);
    CHECK(p.coeff(2, 0) == Rational(1));
    CHECK(p.coeff(0, 1) == Rational(2));
    CHECK(p.coeff(1, 1) == Rational(0));
    CHECK(!p.is_constant());
    CHECK(p.constant_value() == Rational(0));

    BivarPoly zero;
    CHECK(zero.degree(Var::x) == -1);
    CHECK(zero.degree(Var::y) == -1);
    CHECK(zero.is_constant());
    CHECK(zero.constant_value() == Rational(0));
    CHECK(BivarPoly(Rational(5, 2)).is_constant());
    CHECK(BivarPoly(Rational(5, 2)).constant_value() == Rational(5, 2));
}

TEST_CASE("pow: repeated multiplication and edge cases") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        BivarPoly p = random_poly(rng, 3, 3);
        BivarPoly by_mul(1L);
        for (unsigned e = 0; e <= 4; ++e) {
            CHECK(p.pow(e) == by_mul);
            by_mul = by_mul * p;
        }
    }
    CHECK(BivarPoly().pow(0) == BivarPoly(1L));  // 0^0 = 1 for substitution
    CHECK(BivarPoly().pow(3) == BivarPoly());
}

TEST_CASE("binomial theorem") {
    BivarPoly xy = BivarPoly::x() + BivarPoly::y();
    for (unsigned n = 0; n <= 8; ++n) {
        BivarPoly p = xy.pow(n);
        CHECK(p.term_count() == n + 1);
        for (unsigned k = 0; k <= n; ++k) {
            CHECK(p.coeff(k, n - k) == Rational(binomial(n, k)));
        }
    }
}

TEST_CASE("substitution") {
    // 2x - 1 at x <- (x+1)/2 gives x.
    BivarPoly g2 = BivarPoly::monomial(1, 0, Rational(2)) + BivarPoly(-1L);
    BivarPoly shift = (BivarPoly::x() + BivarPoly(1L)) * Rational(1, 2);
    CHECK(g2.substitute(shift, BivarPoly::y()) == BivarPoly::x());

    // x^2 + 2y at y <- 0 gives x^2.
    BivarPoly h2 = BivarPoly::monomial(2, 0, Rational(1)) +
                   BivarPoly::monomial(0, 1, Rational(2));
    CHECK(h2.substitute(BivarPoly::x(), BivarPoly()) ==
          BivarPoly::monomial(2, 0, Rational(1)));

    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        BivarPoly p = random_poly(rng, 5, 5);
        // Identity substitution.
        CHECK(p.substitute(BivarPoly::x(), BivarPoly::y()) == p);
        // Constant substitution agrees with evaluation.
        Rational cx(rng() % 7 - 3L, 1 + long(rng() % 3));
        Rational cy(rng() % 7 - 3L, 1 + long(rng() % 3));
        BivarPoly substituted = p.substitute(BivarPoly(cx), BivarPoly(cy));
        CHECK(substituted.is_constant());
        CHECK(substituted.constant_value() == p.evaluate(cx, cy));
    }

    // Substitution is a ring homomorphism.
    std::mt19937 rng2(17);
    BivarPoly sx = random_poly(rng2, 2, 3);
    BivarPoly sy = random_poly(rng2, 2, 3);
    for (int trial = 0; trial < 15; ++trial) {
        BivarPoly a = random_poly(rng2, 3, 4);
        BivarPoly b = random_poly(rng2, 3, 4);
        CHECK((a + b).substitute(sx, sy) == a.substitute(sx, sy) + b.substitute(sx, sy));
        CHECK((a * b).substitute(sx, sy) == a.substitute(sx, sy) * b.substitute(sx, sy));
    }
}

TEST_CASE("partial derivatives match the term-by-term oracle") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        BivarPoly p = random_poly(rng);
        for (unsigned times = 0; times <= 3; ++times) {
            CHECK(p.partial(Var::x, times) == oracle::partial_iterated(p, Var::x, times));
            CHECK(p.partial(Var::y, times) == oracle::partial_iterated(p, Var::y, times));
        }
        CHECK(p.partial(Var::x).partial(Var::y) == p.partial(Var::y).partial(Var::x));
        CHECK(p.partial(Var::x, 0) == p);
    }
    // d/dx (x^3 y) = 3 x^2 y; second derivative 6 x y.
    BivarPoly p = BivarPoly::monomial(3, 1, Rational(1));
    CHECK(p.partial(Var::x, 2) == BivarPoly::monomial(1, 1, Rational(6)));
}

TEST_CASE("evaluate") {
    // 3x^2 + 6y - 3 at (1, 1) is 6.
    BivarPoly p = BivarPoly::monomial(2, 0, Rational(3)) +
                  BivarPoly::monomial(0, 1, Rational(6)) + BivarPoly(-3L);
    CHECK(p.evaluate(Rational(1), Rational(1)) == Rational(6));
    CHECK(p.evaluate(Rational(0), Rational(1, 2)) == Rational(0));

    std::mt19937 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        BivarPoly a = random_poly(rng, 4, 4);
        BivarPoly b = random_poly(rng, 4, 4);
        Rational cx(long(rng() % 9) - 4, 1 + long(rng() % 4));
        Rational cy(long(rng() % 9) - 4, 1 + long(rng() % 4));
        CHECK((a + b).evaluate(cx, cy) == a.evaluate(cx, cy) + b.evaluate(cx, cy));
        CHECK((a * b).evaluate(cx, cy) == a.evaluate(cx, cy) * b.evaluate(cx, cy));
    }
}

TEST_CASE("add_scaled is addition of a scaled copy") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        BivarPoly a = random_poly(rng);
        BivarPoly b = random_poly(rng);
        Rational c(long(rng() % 11) - 5, 1 + long(rng() % 4));
        BivarPoly via_add_scaled = a;
        via_add_scaled.add_scaled(b, c);
        CHECK(via_add_scaled == a + b * c);
    }
}

TEST_CASE("accumulator agrees with operator arithmetic") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 25; ++trial) {
        BivarPoly a = random_poly(rng, 4, 5);
        BivarPoly b = random_poly(rng, 4, 5);
        BivarPoly c = random_poly(rng, 4, 5);
        Rational s(long(rng() % 7) - 3, 1 + long(rng() % 3));

        PolyAccum accum(8, 8);
        accum.add_product(a, b);
        accum.add_scaled(c, s);
        accum.add_term(2, 3, Rational(5, 7));
        BivarPoly expect = a * b + c * s + BivarPoly::monomial(2, 3, Rational(5, 7));
        CHECK(accum.to_poly() == expect);

        accum.clear();
        CHECK(accum.to_poly() == BivarPoly());
        accum.add_scaled(a, Rational(1));
        CHECK(accum.to_poly() == a);
    }
}

TEST_CASE("human-readable form") {
    BivarPoly p = BivarPoly::monomial(2, 0, Rational(3)) +
                  BivarPoly::monomial(0, 1, Rational(6)) + BivarPoly(-3L);
    CHECK(p.str() == "3*x^2 + 6*y - 3");
    CHECK(BivarPoly().str() == "0");
    BivarPoly h2 = BivarPoly::monomial(2, 0, Rational(1)) +
                   BivarPoly::monomial(0, 1, Rational(2));
    CHECK(h2.str() == "x^2 + 2*y");
    CHECK(BivarPoly::monomial(1, 2, Rational(-1, 2)).str() == "-1/2*x*y^2");
}
