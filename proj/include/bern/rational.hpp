#pragma once

/*
 * Exact rational scalars on top of GMP.
 *
 * Every value is kept canonical: denominator > 0, gcd(|num|, den) = 1,
 * zero stored as 0/1. Text form is "p/q", or just "p" when q = 1.
 */

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace bern {

using Integer = mpz_class;

class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) { canonicalize_checked(); }
    Rational(const Integer& num, const Integer& den) : v_(num, den) { canonicalize_checked(); }

    // Parses "p/q" or "p"; the result is canonicalized ("2/4" -> 1/2).
    static Rational from_string(const std::string& text);

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    std::string str() const { return v_.get_str(); }

    // Bits of |numerator| plus bits of denominator; operand-growth metric.
    std::size_t bit_size() const {
        return mpz_sizeinbase(v_.get_num_mpz_t(), 2) + mpz_sizeinbase(v_.get_den_mpz_t(), 2);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  private:
    void canonicalize_checked() {
        if (sgn(v_.get_den()) == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }

    mpq_class v_;
};

Rational pow(const Rational& base, unsigned long exp);

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

// Division in Q is always exact; name kept for generic fraction-free code.
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

inline bool is_zero(const Rational& x) { return x.is_zero(); }

}  // namespace bern
