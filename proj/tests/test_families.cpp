#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "genocchi/families.hpp"
#include "oracle.hpp"

using genocchi::BivarPoly;
using genocchi::Family;
using genocchi::FamilySpec;
using genocchi::Rational;
using genocchi::Var;

namespace {

Rational number_at(const std::vector<BivarPoly>& table, unsigned n) {
    REQUIRE(table[n].is_constant());
    return table[n].constant_value();
}

}  // namespace

TEST_CASE("classical Genocchi numbers: frozen values and oracle") {
    // G_1..G_8 = 1, -1, 0, 1, 0, -3, 0, 17 (hand-checked against the
    // generating function before the implementation existed).
    const long frozen[] = {0, 1, -1, 0, 1, 0, -3, 0, 17};
    auto table = genocchi::classical_genocchi_table(16, false);
    for (unsigned n = 0; n <= 8; ++n) {
        CHECK(number_at(table, n) == Rational(frozen[n]));
    }
    auto want = oracle::genocchi_numbers(16);
    for (unsigned n = 0; n <= 16; ++n) {
        CHECK(number_at(table, n) == want[n]);
    }
    // Odd Genocchi numbers vanish from n = 3 on.
    for (unsigned n = 3; n <= 16; n += 2) {
        CHECK(number_at(table, n).is_zero());
    }
}

TEST_CASE("second-kind Genocchi numbers: frozen values, oracle, parity") {
    const long frozen[] = {0, 1, 0, -3, 0, 25};
    auto table = genocchi::second_kind_genocchi_table(24, 1, false);
    for (unsigned n = 0; n <= 5; ++n) {
        CHECK(number_at(table, n) == Rational(frozen[n]));
    }
    auto want = oracle::second_kind_genocchi_numbers(24);
    for (unsigned n = 0; n <= 24; ++n) {
        CHECK(number_at(table, n) == want[n]);
    }
    // The kernel is odd in t: even-index numbers vanish.
    for (unsigned n = 0; n <= 24; n += 2) {
        CHECK(number_at(table, n).is_zero());
    }
    // Higher order agrees with the convolution oracle too.
    for (unsigned a = 0; a <= 3; ++a) {
        auto got = genocchi::second_kind_genocchi_table(12, a, false);
        auto ref = oracle::second_kind_genocchi_numbers(12, a);
        for (unsigned n = 0; n <= 12; ++n) {
            CHECK(number_at(got, n) == ref[n]);
        }
    }
}

TEST_CASE("second-kind Euler numbers: frozen values and oracle") {
    auto table = genocchi::second_kind_euler_table(16, 1, false);
    CHECK(number_at(table, 0) == Rational(1));
    CHECK(number_at(table, 2) == Rational(-1));
    CHECK(number_at(table, 4) == Rational(5));
    auto want = oracle::euler_numbers(16);
    for (unsigned n = 0; n <= 16; ++n) {
        CHECK(number_at(table, n) == want[n]);
        if (n % 2 == 1) CHECK(number_at(table, n).is_zero());
    }
}

TEST_CASE("dual routes agree for n <= 32") {
    auto genocchi_polys = genocchi::classical_genocchi_table(32, true);
    auto skg_polys = genocchi::second_kind_genocchi_table(32, 1, true);
    for (unsigned n = 0; n <= 32; ++n) {
        CHECK(genocchi_polys[n] == genocchi::classical_genocchi_binomial(n));
        CHECK(skg_polys[n] == genocchi::second_kind_genocchi_binomial(n));
    }
    for (unsigned j : {2u, 3u, 4u}) {
        auto gh = genocchi::gould_hopper_table(32, j);
        for (unsigned n = 0; n <= 32; ++n) {
            CHECK(gh[n] == genocchi::gould_hopper_floor_sum(n, j));
        }
    }
}

TEST_CASE("known small polynomials") {
    CHECK(genocchi::classical_genocchi(2).str() == "2*x - 1");
    CHECK(genocchi::second_kind_genocchi(2).str() == "2*x");
    CHECK(genocchi::second_kind_genocchi(3).str() == "3*x^2 - 3");
    CHECK(genocchi::gould_hopper(2, 2).str() == "x^2 + 2*y");
    CHECK(genocchi::gould_hopper(3, 2).str() == "x^3 + 6*x*y");
    CHECK(genocchi::hermite_genocchi(2, 2, 1).str() == "2*x");
    CHECK(genocchi::hermite_genocchi(3, 2, 1).str() == "3*x^2 + 6*y - 3");
    CHECK(genocchi::hermite_genocchi(1, 2, 1) == BivarPoly(1L));
    CHECK(genocchi::hermite_genocchi(0, 2, 1).is_zero());
}

TEST_CASE("degrees and leading structure") {
    auto g = genocchi::classical_genocchi_table(12, true);
    auto gh2 = genocchi::gould_hopper_table(12, 2);
    for (unsigned n = 1; n <= 12; ++n) {
        // G_n(x) has degree n-1 with leading coefficient n (G_1 = 1).
        CHECK(g[n].degree(Var::x) == int(n) - 1);
        CHECK(g[n].coeff(n - 1, 0) == Rational(long(n)));
        // H_n^(2) is monic of degree n in x, degree floor(n/2) in y.
        CHECK(gh2[n].degree(Var::x) == int(n));
        CHECK(gh2[n].coeff(n, 0) == Rational(1));
        CHECK(gh2[n].degree(Var::y) == int(n / 2));
    }
}

TEST_CASE("order zero collapses to the bare exponential") {
    auto skg0 = genocchi::second_kind_genocchi_table(10, 0, true);
    auto ske0 = genocchi::second_kind_euler_table(10, 0, true);
    for (unsigned n = 0; n <= 10; ++n) {
        CHECK(skg0[n] == BivarPoly::monomial(n, 0, Rational(1)));
        CHECK(ske0[n] == BivarPoly::monomial(n, 0, Rational(1)));
    }
    auto hg0 = genocchi::hermite_genocchi_table(10, 2, 0);
    auto gh = genocchi::gould_hopper_table(10, 2);
    for (unsigned n = 0; n <= 10; ++n) {
        CHECK(hg0[n] == gh[n]);
    }
}

TEST_CASE("specialization chain: y = 0 reduces Hermite to second kind") {
    for (unsigned j : {1u, 2u, 3u}) {
        auto hg = genocchi::hermite_genocchi_table(12, j, 1);
        auto skg = genocchi::second_kind_genocchi_table(12, 1, true);
        for (unsigned n = 0; n <= 12; ++n) {
            CHECK(hg[n].substitute(BivarPoly::x(), BivarPoly()) == skg[n]);
        }
    }
}

TEST_CASE("Gould-Hopper at y = 0 is x^n") {
    for (unsigned j : {2u, 3u, 4u}) {
        auto gh = genocchi::gould_hopper_table(10, j);
        for (unsigned n = 0; n <= 10; ++n) {
            CHECK(gh[n].substitute(BivarPoly::x(), BivarPoly()) ==
                  BivarPoly::monomial(n, 0, Rational(1)));
        }
    }
}

TEST_CASE("numbers path is not the x=0 substitution path yet agrees with it") {
    auto numbers = genocchi::second_kind_genocchi_table(12, 1, false);
    auto polys = genocchi::second_kind_genocchi_table(12, 1, true);
    for (unsigned n = 0; n <= 12; ++n) {
        CHECK(numbers[n] == polys[n].substitute(BivarPoly(), BivarPoly()));
    }
    auto e_numbers = genocchi::second_kind_euler_table(12, 1, false);
    auto e_polys = genocchi::second_kind_euler_table(12, 1, true);
    for (unsigned n = 0; n <= 12; ++n) {
        CHECK(e_numbers[n] == e_polys[n].substitute(BivarPoly(), BivarPoly()));
    }
}

TEST_CASE("evaluate") {
    genocchi::FamilyValue v{3, genocchi::hermite_genocchi(3, 2, 1)};
    CHECK(genocchi::evaluate(v, Rational(1), Rational(1)) == Rational(6));
    genocchi::FamilyValue g2{2, genocchi::classical_genocchi(2)};
    CHECK(genocchi::evaluate(g2, Rational(1, 2), Rational(0)) == Rational(0));
}

TEST_CASE("family names round-trip") {
    const Family all[] = {Family::ClassicalGenocchi, Family::SecondKindGenocchi,
                          Family::SecondKindEuler, Family::GouldHopper,
                          Family::HermiteGenocchi, Family::HermiteEuler};
    for (Family f : all) {
        CHECK(genocchi::family_from_name(genocchi::family_name(f)) == f);
    }
    CHECK(genocchi::family_name(Family::GouldHopper) == std::string("gould-hopper"));
    CHECK_THROWS_AS(genocchi::family_from_name("bernoulli"), std::invalid_argument);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(genocchi::gould_hopper(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(genocchi::gould_hopper(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(genocchi::hermite_genocchi(4, 0, 1), std::invalid_argument);
    FamilySpec bad{Family::GouldHopper, 1, 1};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    FamilySpec good{Family::HermiteGenocchi, 1, 1};
    CHECK_NOTHROW(good.validate());
    // Numbers mode only exists for the univariate kernels.
    FamilySpec gh{Family::GouldHopper, 2, 1};
    CHECK_THROWS_AS(genocchi::family_table(gh, 4, true), std::invalid_argument);
    CHECK(genocchi::family_has_numbers(Family::ClassicalGenocchi));
    CHECK(!genocchi::family_has_numbers(Family::HermiteEuler));
}

TEST_CASE("family_value dispatch") {
    FamilySpec spec{Family::HermiteGenocchi, 2, 1};
    genocchi::FamilyValue v = genocchi::family_value(spec, 3, false);
    CHECK(v.n == 3);
    CHECK(v.value == genocchi::hermite_genocchi(3, 2, 1));
    FamilySpec ske{Family::SecondKindEuler, 2, 2};
    genocchi::FamilyValue w = genocchi::family_value(ske, 4, true);
    CHECK(w.value == genocchi::second_kind_euler(4, 2, false));
}

TEST_CASE("kernel memo returns consistent series across orders") {
    auto small = genocchi::second_kind_denominator_inverse(6);
    auto large = genocchi::second_kind_denominator_inverse(14);
    for (unsigned n = 0; n <= 6; ++n) {
        CHECK(small.ordinary_coeff(n) == large.ordinary_coeff(n));
    }
    auto c_small = genocchi::classical_denominator_inverse(5);
    auto c_large = genocchi::classical_denominator_inverse(11);
    for (unsigned n = 0; n <= 5; ++n) {
        CHECK(c_small.ordinary_coeff(n) == c_large.ordinary_coeff(n));
    }
}
