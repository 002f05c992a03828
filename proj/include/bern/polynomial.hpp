#pragma once

/*
 * Dense univariate polynomials over Rational in the variable u.
 *
 * Coefficients are stored ascending (index i = coefficient of u^i) with no
 * trailing zero; the zero polynomial stores an empty sequence and reports
 * the sentinel degree kZeroDegree.
 */

#include "bern/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace bern {

class RationalPolynomial {
  public:
    static constexpr int kZeroDegree = -1;

    RationalPolynomial() = default;
    explicit RationalPolynomial(int constant) : RationalPolynomial(Rational(constant)) {}
    explicit RationalPolynomial(const Rational& constant) {
        if (!constant.is_zero()) coeffs_.push_back(constant);
    }
    explicit RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static RationalPolynomial variable() { return RationalPolynomial({Rational(0), Rational(1)}); }

    // Parses the ascending coefficient list form, e.g. "[1/6, -1, 1]".
    static RationalPolynomial from_string(const std::string& text);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    Rational leading_coefficient() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    // Horner evaluation.
    Rational operator()(const Rational& x) const {
        Rational acc;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    RationalPolynomial operator-() const {
        RationalPolynomial r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    RationalPolynomial& operator+=(const RationalPolynomial& o);
    RationalPolynomial& operator-=(const RationalPolynomial& o);
    RationalPolynomial& operator*=(const RationalPolynomial& o) { return *this = *this * o; }
    RationalPolynomial& operator*=(const Rational& s);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(RationalPolynomial p, const Rational& s) { return p *= s; }
    friend RationalPolynomial operator*(const Rational& s, RationalPolynomial p) { return p *= s; }

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const RationalPolynomial& a, const RationalPolynomial& b) { return !(a == b); }

    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const RationalPolynomial& p);

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

RationalPolynomial pow(const RationalPolynomial& base, unsigned exp);

// Quotient of an exact division; throws std::domain_error when b is zero or
// when the remainder is nonzero. Fraction-free elimination relies on this.
RationalPolynomial exact_div(const RationalPolynomial& a, const RationalPolynomial& b);

inline bool is_zero(const RationalPolynomial& p) { return p.is_zero(); }

}  // namespace bern
