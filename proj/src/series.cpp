#include "bern/series.hpp"

#include "bern/matrix.hpp"

#include <stdexcept>

namespace bern {

SeriesPrefix::SeriesPrefix(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("SeriesPrefix: need at least the constant term");
    if (coeffs_.front() != Rational(1)) throw std::domain_error("SeriesPrefix: constant term must be 1");
}

SeriesPrefix series_reciprocal_division(const SeriesPrefix& f) {
    const auto& a = f.coeffs();
    std::vector<Rational> b(a.size());
    b[0] = Rational(1);
    for (std::size_t n = 1; n < a.size(); ++n) {
        Rational s;
        for (std::size_t j = 1; j <= n; ++j) s += a[j] * b[n - j];
        b[n] = -s;
    }
    return SeriesPrefix(std::move(b));
}

Rational series_reciprocal_determinant(const SeriesPrefix& f, std::size_t n) {
    if (n < 1 || n > f.order())
        throw std::invalid_argument("series_reciprocal_determinant: n must be in [1, order]");
    RationalMatrix h(n, n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= i; ++j) h.at(i - 1, j - 1) = f[i - j + 1];
        if (i < n) h.at(i - 1, i) = Rational(1);
    }
    Rational d = determinant(h);
    return n % 2 == 0 ? d : -d;
}

bool toeplitz_inverse_check(const SeriesPrefix& f, std::size_t n) {
    if (n > f.order()) throw std::invalid_argument("toeplitz_inverse_check: n exceeds the prefix order");
    const SeriesPrefix g = series_reciprocal_division(f);

    auto toeplitz = [n](const std::vector<Rational>& c) {
        RationalMatrix t(n + 1, n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; j <= i; ++j) t.at(i, j) = c[i - j];
        return t;
    };
    return toeplitz(f.coeffs()) * toeplitz(g.coeffs()) == RationalMatrix::identity(n + 1);
}

Rational quotient_derivatives(const DerivSeq& ud, const DerivSeq& vd, std::size_t k) {
    if (k < 1) throw std::invalid_argument("quotient_derivatives: k must be positive");
    if (ud.size() < k + 1 || vd.size() < k + 1)
        throw std::invalid_argument("quotient_derivatives: derivative sequences must cover orders 0..k");
    if (vd[0].is_zero()) throw std::domain_error("quotient_derivatives: v must be nonzero at the point");

    RationalMatrix m(k + 1, k + 1);
    for (std::size_t l = 0; l <= k; ++l) {
        m.at(l, 0) = ud[l];
        for (std::size_t col = 0; col < k && col <= l; ++col)
            m.at(l, col + 1) =
                Rational(binomial(static_cast<long long>(l), static_cast<long long>(col))) * vd[l - col];
    }
    Rational r = determinant(m) / pow(vd[0], static_cast<unsigned long>(k + 1));
    return k % 2 == 0 ? r : -r;
}

}  // namespace bern
