#include <doctest.h>

#include <cmath>

#include "icdof/exact.hpp"
#include "icdof/rng.hpp"

using namespace icdof;

TEST_SUITE("exact") {

TEST_CASE("rational parsing and canonical string form") {
    CHECK(parse_rat("1/2") + parse_rat("1/3") == parse_rat("5/6"));
    CHECK(rat_to_string(parse_rat("2/4")) == "1/2");
    CHECK(rat_to_string(parse_rat("-3/6")) == "-1/2");
    CHECK(parse_rat("7") == Rat(7));
    CHECK(rat_to_string(Rat(7)) == "7");
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
}

TEST_CASE("rational arithmetic is a field on randomized triples") {
    SplitMix64 g(42);
    auto rnd = [&] {
        Rat r(g.range(-50, 50), g.range(1, 50));
        r.canonicalize();
        return r;
    };
    for (int i = 0; i < 200; ++i) {
        Rat a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        if (b != 0) CHECK((a / b) * b == a);
    }
}

TEST_CASE("rat_pow and floor_log2_abs") {
    CHECK(rat_pow(parse_rat("2/3"), 3) == parse_rat("8/27"));
    CHECK(rat_pow(parse_rat("-1/2"), 2) == parse_rat("1/4"));
    CHECK(rat_pow(Rat(5), 0) == 1);
    CHECK(floor_log2_abs(Int(1)) == 0);
    CHECK(floor_log2_abs(Int(2)) == 1);
    CHECK(floor_log2_abs(Int(3)) == 1);
    CHECK(floor_log2_abs(Int(-5)) == 2);
    CHECK(floor_log2_abs(Int(1024)) == 10);
    CHECK_THROWS_AS(floor_log2_abs(Int(0)), std::invalid_argument);
}

TEST_CASE("log2_bounded is exact on powers of two") {
    ApproxReal a = log2_bounded(Rat(1));
    CHECK(a.value == 0.0);
    CHECK(a.abs_error == 0.0);
    ApproxReal b = log2_bounded(parse_rat("1/2"));
    CHECK(b.value == -1.0);
    CHECK(b.abs_error == 0.0);
    ApproxReal c = log2_bounded(Rat(1024));
    CHECK(c.value == 10.0);
    CHECK(c.abs_error == 0.0);
    ApproxReal d = log2_bounded(parse_rat("4/64"));
    CHECK(d.value == -4.0);
    CHECK(d.abs_error == 0.0);
}

TEST_CASE("log2_bounded brackets the true value within 2^-40") {
    // log2(3) frozen from an independent high-precision evaluation
    ApproxReal a = log2_bounded(Rat(3));
    CHECK(std::fabs(a.value - 1.5849625007211562) <= a.abs_error);
    CHECK(a.abs_error <= std::ldexp(1.0, -40));
    // log2(10) = 3.3219280948873623...
    ApproxReal b = log2_bounded(Rat(10));
    CHECK(std::fabs(b.value - 3.3219280948873623) <= b.abs_error + 1e-15);
    CHECK_THROWS_AS(log2_bounded(Rat(0)), std::domain_error);
    CHECK_THROWS_AS(log2_bounded(Rat(-2)), std::domain_error);
}

TEST_CASE("ApproxReal error propagation stays conservative") {
    ApproxReal x{1.0, 1e-12}, y{2.0, 1e-12};
    ApproxReal s = x + y;
    CHECK(s.value == 3.0);
    CHECK(s.abs_error >= 2e-12);
    ApproxReal p = x * y;
    CHECK(p.abs_error >= 3e-12 - 1e-15);
    CHECK((x - x).certainly_nonnegative());
    CHECK(y.holds_geq(x));
    CHECK_FALSE(x.holds_geq(y));
    ApproxReal tiny{0.0, 1.0};
    CHECK_THROWS_AS(x / tiny, std::domain_error);
}

TEST_CASE("polynomial ring operations") {
    UniPoly one_plus_h({Int(1), Int(1)});
    UniPoly sq = one_plus_h * one_plus_h;
    CHECK(sq.coeffs() == std::vector<Int>{Int(1), Int(2), Int(1)});
    UniPoly p({Int(3), Int(-2), Int(5)});
    CHECK((p + (-p)).is_zero());
    UniPoly a({Int(1), Int(2)}), b({Int(1), Int(1)});
    CHECK((a - b) == UniPoly::monomial(Int(1), 1));
    CHECK(sq.degree() == 2);
    CHECK(UniPoly().degree() == -1);
    CHECK(p.scaled(Int(2)).coeff(2) == 10);
    // trailing zeros normalize away
    CHECK(UniPoly({Int(1), Int(0), Int(0)}).degree() == 0);
    CHECK(UniPoly::constant(Int(0)).is_zero());
}

TEST_CASE("polynomial evaluation and printing") {
    UniPoly p({Int(1), Int(2)});  // 1 + 2h
    CHECK(p.eval(Rat(2)) == 5);
    CHECK(p.eval(parse_rat("1/2")) == 2);
    CHECK(p.to_string() == "1 + 2*h");
    CHECK(UniPoly({Int(0), Int(-1), Int(0), Int(3)}).to_string() == "-h + 3*h^3");
    CHECK(UniPoly().to_string() == "0");
}

TEST_CASE("polynomial order is total and graded") {
    UniPoly z, c1 = UniPoly::constant(Int(1)), h = UniPoly::monomial(Int(1), 1);
    CHECK(z < c1);
    CHECK(c1 < h);
    CHECK_FALSE(h < c1);
    CHECK_FALSE(h < h);
    // degree dominates coefficient size
    CHECK(UniPoly::constant(Int(1000)) < h);
}

}  // TEST_SUITE
