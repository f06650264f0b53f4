#include <doctest.h>

#include <sstream>

#include "eisen/exact.hpp"

using namespace eisen;

TEST_SUITE("exact") {

TEST_CASE("rationals are canonical") {
    CHECK(Rational(6, 4).to_string() == "3/2");
    CHECK(Rational(3, -6).to_string() == "-1/2");
    CHECK(Rational(0, 5).to_string() == "0/1");
    CHECK(Rational(Integer(0), Integer(-7)).den() == 1);
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK(Rational::parse("+3/9").to_short_string() == "1/3");
    CHECK(Rational(7).to_short_string() == "7");
    CHECK(Rational(7).to_string() == "7/1");
}

TEST_CASE("rational arithmetic") {
    const Rational a(3, 4), b(-5, 6);
    CHECK(a + b == Rational(-1, 12));
    CHECK(a - b == Rational(19, 12));
    CHECK(a * b == Rational(-5, 8));
    CHECK(a / b == Rational(-9, 10));
    CHECK(a * a.inverse() == Rational(1));
    CHECK(b.pow(-2) == Rational(36, 25));
    CHECK(Rational(2).pow(0) == Rational(1));
    CHECK(a > b);
    CHECK(-a == Rational(-3, 4));
}

TEST_CASE("rational errors") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), DomainError);
    CHECK_THROWS_AS(Rational(0).inverse(), DomainError);
    CHECK_THROWS_AS(Rational(0).pow(-1), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
}

TEST_CASE("valuations") {
    CHECK(valuation(Rational(0), 2).is_infinite());
    CHECK(valuation(Rational(9, 2), 3) == Valuation(2));
    CHECK(valuation(Rational(-432000, 691), 2) == Valuation(7));
    CHECK(valuation(Rational(1, 8), 2) == Valuation(-3));
    CHECK(valuation(Integer(0), 5).is_infinite());
    CHECK(valuation(Integer(250), 5) == Valuation(3));
    CHECK_THROWS_AS(valuation(Rational(4), 1), InvalidPrime);
    CHECK_THROWS_AS(valuation(Rational(4), -3), InvalidPrime);
    CHECK_THROWS_AS(valuation(Integer(4), 0), InvalidPrime);
    CHECK_THROWS_AS(valuation(Integer(4), 221), InvalidPrime); // 13 * 17
}

TEST_CASE("valuation ordering") {
    CHECK(Valuation(5) < Valuation::infinity());
    CHECK(Valuation(-3) < Valuation(2));
    CHECK(Valuation::infinity() == Valuation::infinity());
    CHECK_FALSE(Valuation::infinity() < Valuation(1000000));
    CHECK(Valuation::infinity().to_string() == "inf");
    CHECK(Valuation(-4).to_string() == "-4");
    CHECK_THROWS_AS(Valuation::infinity().value(), DomainError);
}

TEST_CASE("digit sums and factorial valuations") {
    CHECK(digit_sum_base2(12) == 2);
    CHECK(digit_sum_base2(0) == 0);
    for (unsigned l = 0; l < 64; ++l) CHECK(digit_sum_base2(std::uint64_t{1} << l) == 1);
    CHECK(factorial_valuation2(4) == 3);
    CHECK(factorial_valuation2(1) == 0);
    CHECK(factorial_valuation2(0) == 0);
    CHECK(factorial_valuation2(10) == 8);
}

TEST_CASE("binomials") {
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(24, 11) == 2496144);
    CHECK(binomial_mod2(6, 2) == 1);
    CHECK(binomial_mod2(6, 1) == 0);
    for (std::uint64_t n = 0; n < 40; ++n) CHECK(binomial_mod2(n, 0) == 1);
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == Rational(0));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    CHECK(bernoulli(20) == Rational(-174611, 330));
}

TEST_CASE("zeta ratio") {
    CHECK(zeta_ratio(2) == Rational(1, 3));
    CHECK(zeta_ratio(4) == Rational(1, 45));
    CHECK(zeta_ratio(6) == Rational(2, 945));
    CHECK_THROWS_AS(zeta_ratio(5), DomainError);
    CHECK_THROWS_AS(zeta_ratio(0), DomainError);
    // nu_2(zeta(k)/pi^k) = s_2(k) - 2: zero at k = 12 * 2^l, where the main theorem uses it.
    for (int k = 12; k <= 768; k *= 2) CHECK(valuation(zeta_ratio(k) / Rational(2), 2) == Valuation(0));
    CHECK(valuation(zeta_ratio(4) / Rational(2), 2) == Valuation(-1));
    CHECK(valuation(zeta_ratio(14) / Rational(2), 2) == Valuation(1));
}

TEST_CASE("divisor sums") {
    CHECK(divisor_sigma(4, 3) == 73);
    CHECK(divisor_sigma(2, 3) == 9);
    CHECK(divisor_sigma(1, 11) == 1);
    CHECK(divisor_sigma(12, 0) == 6);
}

TEST_CASE("primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK(is_prime(1000003));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK_NOTHROW(require_prime(101));
    CHECK_THROWS_AS(require_prime(1), InvalidPrime);
}

}
