#include "nullwave/algebra/rho_rational.hpp"

#include <catch_amalgamated.hpp>

using namespace nullwave;

namespace {
RhoRational rho_pow(std::int64_t e, Rational c = 1) { return RhoRational::monomial(c, e); }
}  // namespace

TEST_CASE("rational parsing and printing", "[algebra]") {
    CHECK(parse_rational("-6/8") == Rational(-3) / 4);
    CHECK(parse_rational("2.5") == Rational(5) / 2);
    CHECK(parse_rational("0.25") == Rational(1) / 4);
    CHECK(parse_rational("010/08") == Rational(5) / 4);
    CHECK(to_string(parse_rational("10/4")) == "5/2");
    CHECK(to_string(Rational(-7)) == "-7");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("laurent polynomials keep a unique sorted form", "[algebra]") {
    const auto p = LaurentPoly::from_terms({{0, Rational(-2)}, {10, Rational(1)}, {10, Rational(1)}, {-10, Rational(0)}});
    REQUIRE(p.size() == 2);
    CHECK(p.degree() == 10);
    CHECK(p.low_degree() == 0);
    CHECK(p.leading_coefficient() == 2);
    CHECK(p.to_string() == "2*rho^10 - 2");
    CHECK(p.exponent_stride() == 10);

    CHECK((p - p).is_zero());
    CHECK(LaurentPoly().degree() == kNegInfinity);
    const auto sq = p * p;
    CHECK(sq == LaurentPoly::from_terms({{20, Rational(4)}, {10, Rational(-8)}, {0, Rational(4)}}));
    CHECK(p.shifted(-10) == LaurentPoly::from_terms({{0, Rational(2)}, {-10, Rational(-2)}}));
    CHECK(sq.truncated_below(10) == LaurentPoly::from_terms({{20, Rational(4)}, {10, Rational(-8)}}));
    CHECK(p.evaluate(Rational(2)) == 2046);
    CHECK(p.evaluate(1.0) == 0.0);
}

TEST_CASE("rational functions canonicalize", "[algebra]") {
    const RhoRational a(LaurentPoly::from_terms({{20, Rational(1)}, {0, Rational(-1)}}),
                        LaurentPoly::from_terms({{10, Rational(2)}, {0, Rational(2)}}));
    // (rho^20 - 1) / (2 rho^10 + 2) = (rho^10 - 1) / 2
    CHECK(a == RhoRational(LaurentPoly::from_terms({{10, Rational(1, 2)}, {0, Rational(-1, 2)}})));
    CHECK(a.is_polynomial());
    CHECK(infinity_degree(a) == 10);

    const RhoRational half_inv = rho_pow(-10, Rational(-1, 2));
    CHECK(half_inv.to_string() == "-1/(2*rho^10)");
    CHECK(half_inv * rho_pow(10) == RhoRational(Rational(-1, 2)));
    CHECK(half_inv.inverse() == rho_pow(10, -2));
    CHECK(rho_pow(1).pow(3) == rho_pow(3));
    CHECK(rho_pow(2).pow(-1) == rho_pow(-2));
    CHECK(infinity_degree(RhoRational()) == kNegInfinity);
    CHECK_THROWS_AS(RhoRational(1) / RhoRational(), std::domain_error);
}

TEST_CASE("rational functions evaluate exactly and in floating point", "[algebra]") {
    const RhoRational f = RhoRational(1) / (rho_pow(10, 2) - RhoRational(2));
    CHECK(f.to_string() == "1/(2*rho^10 - 2)");
    CHECK(f.evaluate(Rational(2)) == Rational(1, 2046));
    CHECK(f.evaluate(2.0) == Catch::Approx(1.0 / 2046));
    CHECK_THROWS_AS(f.evaluate(Rational(1)), std::domain_error);
}

TEST_CASE("expansion at infinity", "[algebra]") {
    // 1 / (2 rho^10 - 2) = 1/2 rho^-10 + 1/2 rho^-20 + ...
    const RhoRational f = RhoRational(1) / (rho_pow(10, 2) - RhoRational(2));
    const LaurentTail t = expand_at_infinity(f, 3);
    REQUIRE(t.terms.size() == 3);
    CHECK(t.coefficient(-10) == Rational(1, 2));
    CHECK(t.coefficient(-20) == Rational(1, 2));
    CHECK(t.coefficient(-30) == Rational(1, 2));
    CHECK(t.coefficient(-15) == 0);
    CHECK(t.error_exponent == -40);
    CHECK_FALSE(t.exact());

    const LaurentTail exact = expand_at_infinity(rho_pow(10, 2) - RhoRational(2), 5);
    CHECK(exact.exact());
    CHECK(exact.sum() == LaurentPoly::from_terms({{10, Rational(2)}, {0, Rational(-2)}}));

    CHECK_THROWS_AS(expand_at_infinity(RhoRational(), 1), std::domain_error);
    CHECK_THROWS_AS(expand_at_infinity(f, 0), std::domain_error);
}

TEST_CASE("expression parser", "[algebra]") {
    CHECK(parse_rho_rational("1/2*rho^-10") == rho_pow(-10, Rational(1, 2)));
    CHECK(parse_rho_rational("-(1/2) * rho^(-10)") == rho_pow(-10, Rational(-1, 2)));
    CHECK(parse_rho_rational("(rho^10 - 1)^2") ==
          RhoRational(LaurentPoly::from_terms({{20, Rational(1)}, {10, Rational(-2)}, {0, Rational(1)}})));
    CHECK(parse_rho_rational("0.25") == RhoRational(Rational(1, 4)));
    CHECK(parse_rho_rational("1.5*rho").to_string() == "3*rho/2");
    CHECK(parse_rho_rational("2.5").to_string() == "5/2");
    CHECK(parse_rho_rational("1/(rho - 1)").to_string() == "1/(rho - 1)");
    for (const char* bad : {"", "rho^", "1/0", "(rho", "2**rho", "rho^x", "sin(rho)"})
        CHECK_THROWS_AS(parse_rho_rational(bad), std::invalid_argument);
}

TEST_CASE("to_string round-trips through the parser", "[algebra]") {
    const RhoRational samples[] = {
        rho_pow(-10, Rational(-1, 2)),
        RhoRational(1) / (rho_pow(10, 2) - RhoRational(2)),
        rho_pow(30, Rational(3, 8)) - rho_pow(20, Rational(1, 4)),
        RhoRational(Rational(-5, 3)),
    };
    for (const auto& s : samples) CHECK(parse_rho_rational(s.to_string()) == s);
}
