#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bern/polynomial.hpp"
#include "oracles.hpp"

#include <random>

using bern::Rational;
using bern::RationalPolynomial;

namespace {

RationalPolynomial poly(std::initializer_list<Rational> ascending) {
    return RationalPolynomial(std::vector<Rational>(ascending));
}

}  // namespace

TEST_CASE("evaluation") {
    const RationalPolynomial b1 = poly({Rational(-1, 2), Rational(1)});  // u - 1/2
    CHECK(b1(Rational(0)) == Rational(-1, 2));
    CHECK(b1(Rational(1, 2)) == Rational(0));

    std::mt19937_64 gen(21);
    const RationalPolynomial zero;
    for (int i = 0; i < 10; ++i) CHECK(zero(oracle::random_rational(gen)) == Rational(0));
}

TEST_CASE("Horner evaluation matches the term-by-term sum") {
    const RationalPolynomial p =
        poly({Rational(-1, 30), Rational(0), Rational(1), Rational(-2), Rational(1)});  // u^4-2u^3+u^2-1/30
    std::mt19937_64 gen(22);
    for (int i = 0; i < 20; ++i) {
        const Rational x = i == 0 ? Rational(1, 2) : oracle::random_rational(gen);
        Rational direct;
        for (std::size_t j = 0; j < p.coefficients().size(); ++j)
            direct += p.coefficients()[j] * bern::pow(x, static_cast<unsigned long>(j));
        CHECK(p(x) == direct);
    }
}

TEST_CASE("addition and scaling") {
    const RationalPolynomial b1 = poly({Rational(-1, 2), Rational(1)});
    CHECK(b1 + RationalPolynomial(Rational(1, 2)) == RationalPolynomial::variable());

    const RationalPolynomial b2 = poly({Rational(1, 6), Rational(-1), Rational(1)});
    CHECK(b2 * Rational(6) == poly({Rational(1), Rational(-6), Rational(6)}));
    CHECK(Rational(0) * b2 == RationalPolynomial());
}

TEST_CASE("degree is additive under multiplication") {
    std::mt19937_64 gen(23);
    for (int i = 0; i < 30; ++i) {
        const RationalPolynomial p = oracle::random_nonzero_polynomial(gen, 6);
        const RationalPolynomial q = oracle::random_nonzero_polynomial(gen, 6);
        CHECK((p * q).degree() == p.degree() + q.degree());
    }
}

TEST_CASE("evaluation is multiplicative") {
    std::mt19937_64 gen(24);
    for (int i = 0; i < 30; ++i) {
        const RationalPolynomial p = oracle::random_polynomial(gen, 5);
        const RationalPolynomial q = oracle::random_polynomial(gen, 5);
        const Rational x = oracle::random_rational(gen);
        CHECK((p * q)(x) == p(x) * q(x));
        CHECK((p + q)(x) == p(x) + q(x));
    }
}

TEST_CASE("canonical storage") {
    const RationalPolynomial p = poly({Rational(1), Rational(2), Rational(0), Rational(0)});
    CHECK(p.degree() == 1);
    CHECK(p.coefficients().size() == 2);

    const RationalPolynomial zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == RationalPolynomial::kZeroDegree);
    CHECK(zero.coefficients().empty());
    CHECK(zero.leading_coefficient() == Rational(0));

    std::mt19937_64 gen(25);
    const RationalPolynomial q = oracle::random_polynomial(gen, 7);
    CHECK((q - q).is_zero());
    CHECK(q.coefficient(100) == Rational(0));
}

TEST_CASE("text form and parsing") {
    const RationalPolynomial b2 = poly({Rational(1, 6), Rational(-1), Rational(1)});
    CHECK(b2.str() == "[1/6, -1, 1]");
    CHECK(RationalPolynomial().str() == "[]");
    CHECK(RationalPolynomial::from_string("[1/6, -1, 1]") == b2);
    CHECK(RationalPolynomial::from_string("[]").is_zero());
    CHECK(RationalPolynomial::from_string("[0, 0]").is_zero());
    CHECK_THROWS_AS(RationalPolynomial::from_string("1, 2"), std::invalid_argument);
    CHECK_THROWS_AS(RationalPolynomial::from_string("[1, x]"), std::invalid_argument);
}

TEST_CASE("exact division") {
    std::mt19937_64 gen(26);
    for (int i = 0; i < 25; ++i) {
        const RationalPolynomial p = oracle::random_polynomial(gen, 5);
        const RationalPolynomial q = oracle::random_nonzero_polynomial(gen, 5);
        CHECK(exact_div(p * q, q) == p);
    }
    CHECK_THROWS_AS(exact_div(RationalPolynomial::variable(), RationalPolynomial()), std::domain_error);
    // u^2 + 1 is not divisible by u - 1
    const RationalPolynomial num = poly({Rational(1), Rational(0), Rational(1)});
    const RationalPolynomial den = poly({Rational(-1), Rational(1)});
    CHECK_THROWS_AS(exact_div(num, den), std::domain_error);
    CHECK_THROWS_AS(exact_div(den, num), std::domain_error);
}

TEST_CASE("power helper") {
    const RationalPolynomial v = RationalPolynomial::variable();
    const RationalPolynomial one_minus_u = poly({Rational(1), Rational(-1)});
    CHECK(pow(v, 0) == RationalPolynomial(1));
    CHECK(pow(one_minus_u, 2) == poly({Rational(1), Rational(-2), Rational(1)}));
}
