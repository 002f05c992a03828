#pragma once

/*
 * Finite prefixes of formal power series with constant term 1, the series
 * reciprocal by two independent routes (forward substitution and a
 * Hessenberg determinant), the lower-triangular Toeplitz inverse check,
 * and the quotient-derivative determinant formula.
 */

#include "bern/combinatorics.hpp"
#include "bern/rational.hpp"

#include <cstddef>
#include <vector>

namespace bern {

class SeriesPrefix {
  public:
    // coeffs[j] = coefficient of t^j; coeffs[0] must be exactly 1.
    explicit SeriesPrefix(std::vector<Rational> coeffs);

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& operator[](std::size_t j) const { return coeffs_[j]; }

    friend bool operator==(const SeriesPrefix& a, const SeriesPrefix& b) { return a.coeffs_ == b.coeffs_; }

  private:
    std::vector<Rational> coeffs_;
};

// g with f*g = 1 up to the prefix order: b_0 = 1, b_n = -sum_{j=1..n} a_j b_{n-j}.
SeriesPrefix series_reciprocal_division(const SeriesPrefix& f);

// n-th reciprocal coefficient as (-1)^n times the n x n Hessenberg
// determinant with first column a_1..a_n, unit superdiagonal, and column j
// holding a_1, a_2, ... below its 1. Requires 1 <= n <= f.order().
Rational series_reciprocal_determinant(const SeriesPrefix& f, std::size_t n);

// True iff the (n+1) x (n+1) lower-triangular Toeplitz matrices built from
// the a- and the computed b-coefficients multiply to the identity.
bool toeplitz_inverse_check(const SeriesPrefix& f, std::size_t n);

// k-th derivative of u/v at a point from the derivative sequences, as
// (-1)^k / v^{k+1} times the (k+1) x (k+1) determinant [A | B] with
// A_l = u^(l) and B_{l,m} = C(l,m) v^(l-m) (zero when l < m).
// Requires k >= 1, v(x0) != 0, and both sequences covering orders 0..k.
Rational quotient_derivatives(const DerivSeq& ud, const DerivSeq& vd, std::size_t k);

}  // namespace bern
