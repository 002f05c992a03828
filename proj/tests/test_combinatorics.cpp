#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bern/combinatorics.hpp"
#include "bern/verify.hpp"
#include "oracles.hpp"

#include <random>

using bern::Integer;
using bern::Rational;

TEST_CASE("binomial conventions") {
    CHECK(bern::binomial(0, 0) == 1);
    CHECK(bern::binomial(3, 5) == 0);
    CHECK(bern::binomial(4, -1) == 0);
    CHECK(bern::binomial(7, 0) == 1);
    CHECK_THROWS_AS(bern::binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("binomial against the Pascal-triangle oracle") {
    CHECK(bern::binomial(10, 4) == oracle::pascal_binomial(10, 4));
    for (int p = 0; p <= 12; ++p)
        for (int q = -1; q <= p + 1; ++q) CHECK(bern::binomial(p, q) == oracle::pascal_binomial(p, q));
}

TEST_CASE("stirling2 boundary rows") {
    for (long long n = 1; n <= 10; ++n) {
        CHECK(bern::stirling2(n, 1) == 1);
        CHECK(bern::stirling2(n, n) == 1);
    }
    CHECK(bern::stirling2(0, 0) == 1);
    CHECK(bern::stirling2(5, 0) == 0);
    CHECK(bern::stirling2(3, 7) == 0);
    CHECK_THROWS_AS(bern::stirling2(-2, 1), std::invalid_argument);
    CHECK_THROWS_AS(bern::stirling2(2, -1), std::invalid_argument);
}

TEST_CASE("stirling2 counts set partitions") {
    CHECK(bern::stirling2(4, 2) == oracle::count_partitions(4, 2));
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) CHECK(bern::stirling2(n, k) == oracle::count_partitions(n, k));
    CHECK(bern::detail::stirling2_uncached(4, 2) == oracle::count_partitions(4, 2));
}

TEST_CASE("stirling2 satisfies the two-term recurrence") {
    const bern::SuiteResult suite = bern::suite_stirling_recurrence(25);
    CHECK(suite.cases == 325);
    CHECK(suite.failures == 0);
}

TEST_CASE("bell_partial extremes") {
    std::mt19937_64 gen(31);
    const auto xs = oracle::random_sequence(gen, 8);
    for (long long n = 1; n <= 8; ++n) {
        CHECK(bern::bell_partial(n, 1, xs) == xs[static_cast<std::size_t>(n - 1)]);
        CHECK(bern::bell_partial(n, n, xs) == bern::pow(xs[0], static_cast<unsigned long>(n)));
    }
}

TEST_CASE("bell_partial on the unique (3,2) partition type") {
    // l_1 = l_2 = 1 is the only solution; its set-partition count is 3,
    // so the value is 3*x1*x2 = 3*2*3.
    const std::vector<Rational> xs{Rational(2), Rational(3)};
    CHECK(bern::bell_partial(3, 2, xs) == Rational(3) * xs[0] * xs[1]);
    CHECK(bern::bell_partial(3, 2, xs) == Rational(18));
}

TEST_CASE("bell_partial conventions and errors") {
    const std::vector<Rational> xs{Rational(1)};
    CHECK(bern::bell_partial(0, 0, {}) == Rational(1));
    CHECK(bern::bell_partial(3, 0, xs) == Rational(0));
    CHECK(bern::bell_partial(2, 5, {}) == Rational(0));
    CHECK_THROWS_AS(bern::bell_partial(4, 2, xs), std::invalid_argument);  // needs x_1..x_3
    CHECK_THROWS_AS(bern::bell_partial(-1, 0, xs), std::invalid_argument);
}

TEST_CASE("bell_fractions basics") {
    CHECK(bern::bell_fractions(1, 1) == Rational(1, 2));
    for (long long n = 1; n <= 8; ++n)
        CHECK(bern::bell_fractions(n, n) == bern::pow(Rational(1, 2), static_cast<unsigned long>(n)));
    CHECK_THROWS_AS(bern::bell_fractions(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(bern::bell_fractions(3, 0), std::invalid_argument);
}

TEST_CASE("bell_fractions equals the partition enumeration") {
    for (long long n = 1; n <= 9; ++n)
        for (long long k = 1; k <= n; ++k) {
            std::vector<Rational> xs(static_cast<std::size_t>(n - k + 1));
            for (long long i = 0; i < n - k + 1; ++i) xs[static_cast<std::size_t>(i)] = Rational(1, i + 2);
            CHECK(bern::bell_fractions(n, k) == bern::bell_partial(n, k, xs));
        }
}

TEST_CASE("bell convolution identity") {
    const bern::SuiteResult suite = bern::suite_bell_convolution(bern::kDefaultSeed, 7, 2);
    CHECK(suite.cases == 2 * 28);
    CHECK(suite.failures == 0);
    INFO(suite.first_failure);
    CHECK(suite.ok());
}

TEST_CASE("bell scaling identity") {
    const bern::SuiteResult suite = bern::suite_bell_scaling(bern::kDefaultSeed, 7, 2);
    CHECK(suite.cases == 2 * 28);
    CHECK(suite.failures == 0);
}

TEST_CASE("bell scaling identity with hand-picked scalars") {
    std::mt19937_64 gen(32);
    const auto xs = oracle::random_sequence(gen, 6);
    const Rational a(-3, 7);
    const Rational b(2, 5);
    for (long long n = 1; n <= 6; ++n)
        for (long long k = 1; k <= n; ++k) {
            std::vector<Rational> scaled(xs.size());
            Rational bp = b;
            for (std::size_t i = 0; i < xs.size(); ++i, bp *= b) scaled[i] = a * bp * xs[i];
            CHECK(bern::bell_partial(n, k, scaled) ==
                  bern::pow(a, static_cast<unsigned long>(k)) * bern::pow(b, static_cast<unsigned long>(n)) *
                      bern::bell_partial(n, k, xs));
        }
}

TEST_CASE("faa_di_bruno with the identity as inner function") {
    std::mt19937_64 gen(33);
    for (long long n = 1; n <= 6; ++n) {
        bern::DerivSeq fd = oracle::random_sequence(gen, static_cast<std::size_t>(n) + 1);
        bern::DerivSeq gd(static_cast<std::size_t>(n) + 1, Rational(0));
        gd[0] = oracle::random_rational(gen);
        gd[1] = Rational(1);
        CHECK(bern::faa_di_bruno(fd, gd, n) == fd[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("faa_di_bruno with the identity as outer function") {
    std::mt19937_64 gen(34);
    for (long long n = 1; n <= 6; ++n) {
        bern::DerivSeq gd = oracle::random_sequence(gen, static_cast<std::size_t>(n) + 1);
        bern::DerivSeq fd(static_cast<std::size_t>(n) + 1, Rational(0));
        fd[0] = gd[0];
        fd[1] = Rational(1);
        CHECK(bern::faa_di_bruno(fd, gd, n) == gd[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("faa_di_bruno matches truncated series composition") {
    // f and g both have every derivative 1 (the exponential's pattern, with
    // the outer values taken as plain 1s); compose the series directly.
    constexpr std::size_t kOrder = 8;
    bern::DerivSeq ones(kOrder + 1, Rational(1));

    std::vector<Rational> inner(kOrder + 1);  // g(x) - g(0) = sum_{j>=1} x^j/j!
    std::vector<Rational> outer(kOrder + 1);  // f about g(0), unit derivatives
    Integer fact(1);
    for (std::size_t j = 0; j <= kOrder; ++j) {
        if (j > 0) fact *= static_cast<long>(j);
        const Rational c = Rational(Integer(1), fact);
        outer[j] = c;
        if (j > 0) inner[j] = c;
    }
    const auto composed = oracle::series_compose(outer, inner, kOrder);

    Integer nfact(1);
    for (long long n = 1; n <= static_cast<long long>(kOrder); ++n) {
        nfact *= static_cast<long>(n);
        CHECK(bern::faa_di_bruno(ones, ones, n) == composed[static_cast<std::size_t>(n)] * Rational(nfact));
    }
    CHECK(bern::faa_di_bruno(ones, ones, 3) == Rational(5));
}

TEST_CASE("faa_di_bruno input validation") {
    bern::DerivSeq three(3, Rational(1));
    CHECK_THROWS_AS(bern::faa_di_bruno(three, three, 3), std::invalid_argument);
    CHECK_THROWS_AS(bern::faa_di_bruno(three, three, 0), std::invalid_argument);
}
