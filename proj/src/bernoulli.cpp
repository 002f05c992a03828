#include "bern/bernoulli.hpp"

#include "bern/combinatorics.hpp"
#include "bern/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace bern {

namespace {

void check_index(long long n) {
    if (n < 0) throw std::invalid_argument("bernoulli: index must be nonnegative");
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// B_m = -1/(m+1) * sum_{k=0..m-1} C(m+1,k) B_k, from B_0 = 1.
void extend_recurrence(std::vector<Rational>& table, long long n) {
    if (table.empty()) table.push_back(Rational(1));
    while (static_cast<long long>(table.size()) <= n) {
        const long long m = static_cast<long long>(table.size());
        Rational s;
        for (long long k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * table[static_cast<std::size_t>(k)];
        table.push_back(-s / Rational(m + 1));
    }
}

}  // namespace

Rational bern_number_recurrence(long long n) {
    check_index(n);
    thread_local std::vector<Rational> table;
    extend_recurrence(table, n);
    return table[static_cast<std::size_t>(n)];
}

RationalPolynomial bern_poly_recurrence(long long n) {
    check_index(n);
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    for (long long k = 0; k <= n; ++k)
        coeffs[static_cast<std::size_t>(n - k)] = Rational(binomial(n, k)) * bern_number_recurrence(k);
    return RationalPolynomial(std::move(coeffs));
}

namespace {

template <typename StirlingFn>
Rational number_stirling_sum(long long n, StirlingFn&& s2) {
    // B_n = sum_{i=1..n} (-1)^i C(n+1,i+1)/C(n+i,i) * S(n+i,i)
    Rational acc;
    for (long long i = 1; i <= n; ++i) {
        Rational term(binomial(n + 1, i + 1) * s2(n + i, i), binomial(n + i, i));
        if (i % 2 != 0)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

}  // namespace

Rational bern_number_stirling(long long n) {
    check_index(n);
    if (n == 0) return Rational(1);
    return number_stirling_sum(n, [](long long a, long long b) { return stirling2(a, b); });
}

RationalPolynomial bern_poly_stirling(long long n) {
    check_index(n);
    if (n == 0) return RationalPolynomial(1);

    std::vector<Integer> fact(static_cast<std::size_t>(2 * n) + 1);
    for (std::size_t i = 0; i < fact.size(); ++i) fact[i] = factorial(static_cast<unsigned long>(i));

    // bracket(l, r) = sum_{i=0..r} (-1)^i C(l+r, r-i) S(l+i, i); vanishes
    // exactly when the corresponding Bell value does (r > l, or r = 0 < l).
    std::vector<std::vector<std::optional<Integer>>> memo(
        static_cast<std::size_t>(n) + 1, std::vector<std::optional<Integer>>(static_cast<std::size_t>(n) + 1));
    auto bracket = [&](long long l, long long r) -> const Integer& {
        auto& slot = memo[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)];
        if (!slot) {
            Integer sum(0);
            for (long long i = 0; i <= r; ++i) {
                Integer term = binomial(l + r, r - i) * stirling2(l + i, i);
                if (i % 2 != 0)
                    sum -= term;
                else
                    sum += term;
            }
            slot = std::move(sum);
        }
        return *slot;
    };

    // (1-u)^j has coefficients (-1)^t C(j,t).
    auto one_minus_u_coeff = [](long long j, long long t) {
        Rational c(binomial(j, t));
        return t % 2 != 0 ? -c : c;
    };

    // The closed form: for k = 1..n, r+s = k, l+m = n,
    //   k! (-1)^m C(n,l) [l!/(l+r)!] [m!/(m+s)!] bracket(l,r) bracket(m,s)
    //   * u^{m+s} (1-u)^{l+r};
    // degrees reach n+k during accumulation and cancel down to n.
    std::vector<Rational> acc(static_cast<std::size_t>(2 * n) + 1);
    for (long long k = 1; k <= n; ++k) {
        for (long long r = 0; r <= k; ++r) {
            const long long s = k - r;
            for (long long l = 0; l <= n; ++l) {
                const long long m = n - l;
                const Integer& bl = bracket(l, r);
                if (sgn(bl) == 0) continue;
                const Integer& br = bracket(m, s);
                if (sgn(br) == 0) continue;

                Integer num = fact[static_cast<std::size_t>(k)] * binomial(n, l) *
                              fact[static_cast<std::size_t>(l)] * fact[static_cast<std::size_t>(m)] * bl * br;
                Rational c(num, fact[static_cast<std::size_t>(l + r)] * fact[static_cast<std::size_t>(m + s)]);
                if (m % 2 != 0) c = -c;

                const long long ushift = m + s;
                for (long long t = 0; t <= l + r; ++t)
                    acc[static_cast<std::size_t>(ushift + t)] += c * one_minus_u_coeff(l + r, t);
            }
        }
    }
    return RationalPolynomial(std::move(acc));
}

namespace {

// Rows l = 1..k, columns m = 0..k-1, entry C(l+1,m)/(l+1) for m <= l and 0
// above: these are the u = 0 values of the polynomial entries, whose
// (1-u)^{l-m+1} - (-u)^{l-m+1} factor vanishes once the exponent hits 0.
RationalMatrix number_determinant_matrix(long long k) {
    RationalMatrix mat(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    for (long long l = 1; l <= k; ++l)
        for (long long m = 0; m <= l && m < k; ++m)
            mat.at(static_cast<std::size_t>(l - 1), static_cast<std::size_t>(m)) =
                Rational(binomial(l + 1, m), Integer(static_cast<long>(l + 1)));
    return mat;
}

}  // namespace

Rational bern_number_determinant(long long n) {
    check_index(n);
    if (n == 0) return Rational(1);
    Rational d = determinant(number_determinant_matrix(n));
    return n % 2 == 0 ? d : -d;
}

RationalPolynomial bern_poly_determinant(long long n) {
    check_index(n);
    if (n == 0) return RationalPolynomial(1);
    const long long k = n;

    // bracket_j = (1-u)^j - (-u)^j = sum_{t<j} (-1)^t C(j,t) u^t (top terms cancel)
    std::vector<RationalPolynomial> bracket(static_cast<std::size_t>(k) + 2);
    for (long long j = 0; j <= k + 1; ++j) {
        std::vector<Rational> c(static_cast<std::size_t>(j > 0 ? j : 0));
        for (long long t = 0; t < j; ++t) {
            Rational b(binomial(j, t));
            c[static_cast<std::size_t>(t)] = t % 2 != 0 ? -b : b;
        }
        bracket[static_cast<std::size_t>(j)] = RationalPolynomial(std::move(c));
    }

    PolynomialMatrix mat(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    for (long long l = 1; l <= k; ++l)
        for (long long m = 0; m <= l && m < k; ++m)
            mat.at(static_cast<std::size_t>(l - 1), static_cast<std::size_t>(m)) =
                bracket[static_cast<std::size_t>(l - m + 1)] * Rational(binomial(l + 1, m), Integer(static_cast<long>(l + 1)));

    // cofactor expansion is cheaper than per-step exact polynomial division
    // for small k; fraction-free elimination wins beyond that.
    RationalPolynomial d = k <= 8 ? determinant_cofactor(mat) : determinant(mat);
    return k % 2 == 0 ? d : -d;
}

Rational bernoulli_number(long long n, Method m) {
    switch (m) {
        case Method::recurrence: return bern_number_recurrence(n);
        case Method::stirling: return bern_number_stirling(n);
        case Method::determinant: return bern_number_determinant(n);
    }
    throw std::invalid_argument("bernoulli_number: unknown method");
}

RationalPolynomial bernoulli_polynomial(long long n, Method m) {
    switch (m) {
        case Method::recurrence: return bern_poly_recurrence(n);
        case Method::stirling: return bern_poly_stirling(n);
        case Method::determinant: return bern_poly_determinant(n);
    }
    throw std::invalid_argument("bernoulli_polynomial: unknown method");
}

BernoulliResult bernoulli_result(long long n, Method m, bool polynomial) {
    BernoulliResult r{n, m, {}};
    if (polynomial)
        r.value = bernoulli_polynomial(n, m);
    else
        r.value = bernoulli_number(n, m);
    return r;
}

std::optional<Method> parse_method(std::string_view name) {
    for (Method m : kAllMethods)
        if (name == method_name(m)) return m;
    return std::nullopt;
}

VerifyAllReport verify_all(long long max_n) {
    if (max_n < 1) throw std::invalid_argument("verify_all: max_n must be positive");
    VerifyAllReport rep;
    rep.number_max = max_n;
    rep.polynomial_max = std::min(max_n, kPolynomialSweepCap);

    for (long long n = 0; n <= rep.number_max; ++n) {
        const Rational ref = bern_number_recurrence(n);
        for (Method m : {Method::stirling, Method::determinant}) {
            const Rational got = bernoulli_number(n, m);
            if (got != ref) {
                rep.divergence = Divergence{n, "number", Method::recurrence, m, ref.str(), got.str()};
                return rep;
            }
        }
        ++rep.numbers_checked;
    }
    for (long long n = 0; n <= rep.polynomial_max; ++n) {
        const RationalPolynomial ref = bern_poly_recurrence(n);
        for (Method m : {Method::stirling, Method::determinant}) {
            const RationalPolynomial got = bernoulli_polynomial(n, m);
            if (got != ref) {
                rep.divergence = Divergence{n, "polynomial", Method::recurrence, m, ref.str(), got.str()};
                return rep;
            }
        }
        ++rep.polynomials_checked;
    }
    return rep;
}

namespace detail {

Rational number_recurrence_cold(long long n) {
    check_index(n);
    std::vector<Rational> table;
    extend_recurrence(table, n);
    return table[static_cast<std::size_t>(n)];
}

Rational number_stirling_cold(long long n) {
    check_index(n);
    if (n == 0) return Rational(1);
    return number_stirling_sum(n, [](long long a, long long b) { return stirling2_uncached(a, b); });
}

Rational number_determinant_cold(long long n) { return bern_number_determinant(n); }

}  // namespace detail

}  // namespace bern
