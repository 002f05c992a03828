#pragma once

/*
 * Three mutually independent engines for the Bernoulli numbers B_n and
 * polynomials B_n(u):
 *
 *   recurrence   ascending sweep of sum_{k=0..n} C(n+1,k) B_k = 0 and the
 *                expansion B_n(u) = sum_k C(n,k) B_k u^{n-k}; the oracle of
 *                record.
 *   stirling     single Stirling-number sum for B_n and the quadruple
 *                Stirling/binomial sum in u and (1-u) for B_n(u).
 *   determinant  k x k combinatorial-entry determinants for both.
 *
 * All engines agree exactly; verify_all sweeps that agreement.
 */

#include "bern/polynomial.hpp"
#include "bern/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace bern {

enum class Method { recurrence, stirling, determinant };

constexpr std::string_view method_name(Method m) {
    switch (m) {
        case Method::recurrence: return "recurrence";
        case Method::stirling: return "stirling";
        case Method::determinant: return "determinant";
    }
    return "?";
}

std::optional<Method> parse_method(std::string_view name);

inline constexpr Method kAllMethods[] = {Method::recurrence, Method::stirling, Method::determinant};

Rational bern_number_recurrence(long long n);
Rational bern_number_stirling(long long n);
Rational bern_number_determinant(long long n);

RationalPolynomial bern_poly_recurrence(long long n);
RationalPolynomial bern_poly_stirling(long long n);
RationalPolynomial bern_poly_determinant(long long n);

Rational bernoulli_number(long long n, Method m);
RationalPolynomial bernoulli_polynomial(long long n, Method m);

struct BernoulliResult {
    long long n = 0;
    Method method = Method::recurrence;
    std::variant<Rational, RationalPolynomial> value;
};

BernoulliResult bernoulli_result(long long n, Method m, bool polynomial);

// Polynomial sweeps stop here; the quadruple sum grows ~n^3 terms.
inline constexpr long long kPolynomialSweepCap = 25;

struct Divergence {
    long long n = 0;
    std::string kind;  // "number" or "polynomial"
    Method lhs = Method::recurrence;
    Method rhs = Method::recurrence;
    std::string lhs_value;
    std::string rhs_value;
};

struct VerifyAllReport {
    long long number_max = 0;
    long long polynomial_max = 0;
    long long numbers_checked = 0;
    long long polynomials_checked = 0;
    std::optional<Divergence> divergence;

    bool ok() const { return !divergence.has_value(); }
};

// Runs all three engines for n = 0..max_n (numbers) and
// n = 0..min(max_n, kPolynomialSweepCap) (polynomials); stops at the first
// divergence and reports it.
VerifyAllReport verify_all(long long max_n);

namespace detail {

// Cache-free engine variants for benchmarking; each call pays full cost.
Rational number_recurrence_cold(long long n);
Rational number_stirling_cold(long long n);
Rational number_determinant_cold(long long n);

}  // namespace detail

}  // namespace bern
