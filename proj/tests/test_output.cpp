#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bern/output.hpp"
#include "bern/verify.hpp"
#include "oracles.hpp"

#include <random>
#include <set>
#include <sstream>

using bern::Method;
using bern::OutputRecord;
using bern::Rational;
using bern::RationalPolynomial;

TEST_CASE("text forms round-trip") {
    std::mt19937_64 gen(61);
    for (int i = 0; i < 100; ++i) {
        const Rational r = oracle::random_rational(gen, 5000);
        CHECK(Rational::from_string(r.str()) == r);
        const RationalPolynomial p = oracle::random_polynomial(gen, 8, 500);
        CHECK(RationalPolynomial::from_string(p.str()) == p);
    }
}

TEST_CASE("json line schema is exact") {
    const OutputRecord rec{12, "number", "stirling", "-691/2730", 0};
    CHECK(bern::to_json_line(rec) ==
          R"({"n":12,"kind":"number","method":"stirling","value":"-691/2730","elapsed_ns":0})");
    CHECK(bern::to_text_line(rec) == "stirling -691/2730");
}

TEST_CASE("records built from results round-trip") {
    const auto number = bern::make_record(bern::bernoulli_result(16, Method::determinant, false), 42);
    CHECK(number.kind == "number");
    CHECK(number.method == "determinant");
    CHECK(number.elapsed_ns == 42);
    CHECK(Rational::from_string(number.value) == bern::bern_number_determinant(16));

    const auto poly = bern::make_record(bern::bernoulli_result(4, Method::stirling, true), 0);
    CHECK(poly.kind == "polynomial");
    CHECK(RationalPolynomial::from_string(poly.value) == bern::bern_poly_stirling(4));
}

TEST_CASE("json output is stable across runs except elapsed_ns") {
    auto a = bern::make_record(bern::bernoulli_result(10, Method::recurrence, false), 111);
    auto b = bern::make_record(bern::bernoulli_result(10, Method::recurrence, false), 999);
    a.elapsed_ns = 0;
    b.elapsed_ns = 0;
    CHECK(bern::to_json_line(a) == bern::to_json_line(b));
}

TEST_CASE("bench rows and csv") {
    const auto rows = bern::run_bench(6, 3);
    REQUIRE(rows.size() == 18);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].n == static_cast<long long>(i / 3) + 1);
        CHECK(rows[i].method == bern::kAllMethods[i % 3]);
        CHECK(rows[i].median_ns >= 0);
        CHECK(rows[i].value_bits > 0);
    }
    // per-n the three engines report the same operand size
    for (std::size_t i = 0; i < rows.size(); i += 3) {
        CHECK(rows[i].value_bits == rows[i + 1].value_bits);
        CHECK(rows[i].value_bits == rows[i + 2].value_bits);
    }
    CHECK(rows[0].value_bits == Rational(-1, 2).bit_size());

    std::ostringstream csv;
    bern::write_bench_csv(csv, {bern::BenchRow{1, Method::stirling, 77, 3}});
    CHECK(csv.str() == "n,method,median_ns,value_bits\n1,stirling,77,3\n");

    CHECK_THROWS_AS(bern::run_bench(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(bern::run_bench(3, 0), std::invalid_argument);
}

TEST_CASE("full verification battery") {
    const auto suites = bern::run_verification({10, bern::kDefaultSeed});
    const std::set<std::string> expected = {
        "cross_method_agreement", "bell_convolution",     "bell_scaling",          "bell_fraction_values",
        "series_reciprocal",      "stirling_recurrence",  "bernoulli_series_route"};
    std::set<std::string> seen;
    for (const auto& s : suites) {
        seen.insert(s.name);
        INFO(s.name << ": " << s.first_failure);
        CHECK(s.ok());
        CHECK(s.cases > 0);
        CHECK(s.first_failure.empty());
    }
    CHECK(seen == expected);
}

TEST_CASE("seeded suites are reproducible") {
    const auto a = bern::suite_bell_convolution(1234, 6, 2);
    const auto b = bern::suite_bell_convolution(1234, 6, 2);
    CHECK(a.cases == b.cases);
    CHECK(a.failures == b.failures);
}
