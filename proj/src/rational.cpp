#include "bern/rational.hpp"

#include <cctype>
#include <ostream>

namespace bern {

Rational Rational::from_string(const std::string& text) {
    // strict shape check before handing to GMP: [-+]?digits(/[-+]?digits)?
    auto digits = [](const std::string& s, std::size_t begin, std::size_t end) {
        if (begin < s.size() && (s[begin] == '-' || s[begin] == '+')) ++begin;
        if (begin >= end) return false;
        for (std::size_t i = begin; i < end; ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    std::size_t first = text.find_first_not_of(" \t");
    std::size_t last = text.find_last_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("Rational: empty string");
    const std::string body = text.substr(first, last - first + 1);

    const std::size_t slash = body.find('/');
    bool ok = slash == std::string::npos
                  ? digits(body, 0, body.size())
                  : digits(body, 0, slash) && digits(body, slash + 1, body.size());
    if (!ok) throw std::invalid_argument("Rational: cannot parse \"" + text + "\"");

    mpq_class q;
    if (q.set_str(body, 10) != 0) throw std::invalid_argument("Rational: cannot parse \"" + text + "\"");
    if (sgn(q.get_den()) == 0) throw std::domain_error("Rational: zero denominator in \"" + text + "\"");
    q.canonicalize();

    Rational r;
    r.v_ = std::move(q);
    return r;
}

Rational pow(const Rational& base, unsigned long exp) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exp);
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_.get_str(); }

}  // namespace bern
