#include "bern/polynomial.hpp"

#include <ostream>
#include <sstream>

namespace bern {

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& s) {
    if (s.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return RationalPolynomial();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return RationalPolynomial(std::move(out));
}

RationalPolynomial pow(const RationalPolynomial& base, unsigned exp) {
    RationalPolynomial acc(1);
    for (unsigned i = 0; i < exp; ++i) acc *= base;
    return acc;
}

RationalPolynomial exact_div(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("RationalPolynomial: division by the zero polynomial");
    if (a.is_zero()) return RationalPolynomial();
    if (a.degree() < b.degree()) throw std::domain_error("RationalPolynomial: division is not exact");

    std::vector<Rational> rem = a.coefficients();
    const std::vector<Rational>& div = b.coefficients();
    const Rational lead = b.leading_coefficient();
    std::vector<Rational> quot(rem.size() - div.size() + 1);

    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational q = rem[k + div.size() - 1] / lead;
        quot[k] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j < div.size(); ++j) rem[k + j] -= q * div[j];
    }
    for (const auto& c : rem)
        if (!c.is_zero()) throw std::domain_error("RationalPolynomial: division is not exact");
    return RationalPolynomial(std::move(quot));
}

RationalPolynomial RationalPolynomial::from_string(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t");
    std::size_t last = text.find_last_not_of(" \t");
    if (first == std::string::npos || text[first] != '[' || text[last] != ']')
        throw std::invalid_argument("RationalPolynomial: expected \"[a0, a1, ...]\"");
    const std::string body = text.substr(first + 1, last - first - 1);

    std::vector<Rational> coeffs;
    if (body.find_first_not_of(" \t") != std::string::npos) {
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) coeffs.push_back(Rational::from_string(item));
    }
    return RationalPolynomial(std::move(coeffs));
}

std::string RationalPolynomial::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ", ";
        out += coeffs_[i].str();
    }
    return out + "]";
}

std::ostream& operator<<(std::ostream& os, const RationalPolynomial& p) { return os << p.str(); }

}  // namespace bern
