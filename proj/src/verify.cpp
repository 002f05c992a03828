#include "bern/verify.hpp"

#include "bern/combinatorics.hpp"
#include "bern/series.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace bern {

namespace {

Rational random_rational(std::mt19937_64& gen, long span = 12) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, span);
    return Rational(num(gen), den(gen));
}

std::vector<Rational> random_sequence(std::mt19937_64& gen, std::size_t len, long span = 12) {
    std::vector<Rational> xs(len);
    for (auto& x : xs) x = random_rational(gen, span);
    return xs;
}

void record_failure(SuiteResult& suite, const std::string& message) {
    if (suite.failures == 0) suite.first_failure = message;
    ++suite.failures;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace

SuiteResult suite_cross_method(long long max_n) {
    SuiteResult suite;
    suite.name = "cross_method_agreement";
    const VerifyAllReport rep = verify_all(max_n);
    suite.cases = rep.numbers_checked + rep.polynomials_checked;
    if (!rep.ok()) {
        const Divergence& d = *rep.divergence;
        std::ostringstream msg;
        msg << d.kind << " n=" << d.n << ": " << method_name(d.lhs) << " gives " << d.lhs_value << " but "
            << method_name(d.rhs) << " gives " << d.rhs_value;
        record_failure(suite, msg.str());
    }
    return suite;
}

SuiteResult suite_bell_convolution(std::uint64_t seed, long long max_n, int sequences) {
    SuiteResult suite;
    suite.name = "bell_convolution";
    std::mt19937_64 gen(seed);
    for (int t = 0; t < sequences; ++t) {
        const auto xs = random_sequence(gen, static_cast<std::size_t>(max_n));
        const auto ys = random_sequence(gen, static_cast<std::size_t>(max_n));
        std::vector<Rational> sums(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) sums[i] = xs[i] + ys[i];

        for (long long n = 1; n <= max_n; ++n) {
            for (long long k = 1; k <= n; ++k) {
                const Rational lhs = bell_partial(n, k, sums);
                Rational rhs;
                for (long long r = 0; r <= k; ++r)
                    for (long long l = 0; l <= n; ++l) {
                        const Rational left = bell_partial(l, r, xs);
                        if (left.is_zero()) continue;
                        rhs += Rational(binomial(n, l)) * left * bell_partial(n - l, k - r, ys);
                    }
                ++suite.cases;
                if (lhs != rhs)
                    record_failure(suite, "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " +
                                              lhs.str() + " != " + rhs.str());
            }
        }
    }
    return suite;
}

SuiteResult suite_bell_scaling(std::uint64_t seed, long long max_n, int sequences) {
    SuiteResult suite;
    suite.name = "bell_scaling";
    std::mt19937_64 gen(seed);
    for (int t = 0; t < sequences; ++t) {
        const auto xs = random_sequence(gen, static_cast<std::size_t>(max_n));
        Rational a = random_rational(gen);
        Rational b = random_rational(gen);
        if (a.is_zero()) a = Rational(1, 3);
        if (b.is_zero()) b = Rational(-2, 5);

        std::vector<Rational> scaled(xs.size());
        Rational bpow = b;
        for (std::size_t i = 0; i < xs.size(); ++i, bpow *= b) scaled[i] = a * bpow * xs[i];

        for (long long n = 1; n <= max_n; ++n)
            for (long long k = 1; k <= n; ++k) {
                const Rational lhs = bell_partial(n, k, scaled);
                const Rational rhs = pow(a, static_cast<unsigned long>(k)) *
                                     pow(b, static_cast<unsigned long>(n)) * bell_partial(n, k, xs);
                ++suite.cases;
                if (lhs != rhs)
                    record_failure(suite, "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " +
                                              lhs.str() + " != " + rhs.str());
            }
    }
    return suite;
}

SuiteResult suite_bell_fraction_values(long long max_n) {
    SuiteResult suite;
    suite.name = "bell_fraction_values";
    for (long long n = 1; n <= max_n; ++n)
        for (long long k = 1; k <= n; ++k) {
            std::vector<Rational> xs(static_cast<std::size_t>(n - k + 1));
            for (long long i = 0; i < n - k + 1; ++i) xs[static_cast<std::size_t>(i)] = Rational(1, i + 2);
            const Rational closed = bell_fractions(n, k);
            const Rational enumerated = bell_partial(n, k, xs);
            ++suite.cases;
            if (closed != enumerated)
                record_failure(suite, "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " +
                                          closed.str() + " != " + enumerated.str());
        }
    return suite;
}

SuiteResult suite_series_reciprocal(std::uint64_t seed, int prefixes, std::size_t order) {
    SuiteResult suite;
    suite.name = "series_reciprocal";
    std::mt19937_64 gen(seed);
    for (int t = 0; t < prefixes; ++t) {
        std::vector<Rational> coeffs(order + 1);
        coeffs[0] = Rational(1);
        for (std::size_t j = 1; j <= order; ++j) coeffs[j] = random_rational(gen, 9);
        const SeriesPrefix f(coeffs);
        const SeriesPrefix g = series_reciprocal_division(f);

        for (std::size_t n = 1; n <= order; ++n) {
            const Rational det = series_reciprocal_determinant(f, n);
            ++suite.cases;
            if (det != g[n])
                record_failure(suite, "prefix " + std::to_string(t) + " n=" + std::to_string(n) + ": " +
                                          det.str() + " != " + g[n].str());
        }
        ++suite.cases;
        if (!toeplitz_inverse_check(f, order))
            record_failure(suite, "prefix " + std::to_string(t) + ": Toeplitz product is not the identity");
    }
    return suite;
}

SuiteResult suite_stirling_recurrence(long long max_n) {
    SuiteResult suite;
    suite.name = "stirling_recurrence";
    for (long long n = 1; n <= max_n; ++n)
        for (long long k = 1; k <= n; ++k) {
            const Integer lhs = stirling2(n, k);
            const Integer rhs = Integer(static_cast<long>(k)) * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
            ++suite.cases;
            if (lhs != rhs)
                record_failure(suite, "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " +
                                          lhs.get_str() + " != " + rhs.get_str());
        }
    return suite;
}

SuiteResult suite_bernoulli_series_route(long long max_n) {
    SuiteResult suite;
    suite.name = "bernoulli_series_route";
    const Rational points[] = {Rational(0), Rational(1, 2), Rational(-1)};
    for (const Rational& u : points) {
        // a_j = ((1-u)^{j+1} - (-u)^{j+1}) / (j+1)!; a_0 = 1.
        std::vector<Rational> a(static_cast<std::size_t>(max_n) + 1);
        for (long long j = 0; j <= max_n; ++j) {
            const auto e = static_cast<unsigned long>(j + 1);
            a[static_cast<std::size_t>(j)] =
                (pow(Rational(1) - u, e) - pow(-u, e)) / Rational(factorial(e));
        }
        const SeriesPrefix g = series_reciprocal_division(SeriesPrefix(a));

        for (long long n = 0; n <= max_n; ++n) {
            const Rational lhs = g[static_cast<std::size_t>(n)] * Rational(factorial(static_cast<unsigned long>(n)));
            for (Method m : kAllMethods) {
                const Rational rhs = bernoulli_polynomial(n, m)(u);
                ++suite.cases;
                if (lhs != rhs)
                    record_failure(suite, "u=" + u.str() + " n=" + std::to_string(n) + " vs " +
                                              std::string(method_name(m)) + ": " + lhs.str() +
                                              " != " + rhs.str());
            }
        }
    }
    return suite;
}

std::vector<SuiteResult> run_verification(const VerifyOptions& opt) {
    std::vector<SuiteResult> suites;
    suites.push_back(suite_cross_method(opt.max_n));
    suites.push_back(suite_bell_convolution(opt.seed));
    suites.push_back(suite_bell_scaling(opt.seed + 1));
    suites.push_back(suite_bell_fraction_values());
    suites.push_back(suite_series_reciprocal(opt.seed + 2));
    suites.push_back(suite_stirling_recurrence());
    suites.push_back(suite_bernoulli_series_route());
    return suites;
}

std::vector<BenchRow> run_bench(long long max_n, int repetitions) {
    if (max_n < 1) throw std::invalid_argument("run_bench: max_n must be positive");
    if (repetitions < 1) throw std::invalid_argument("run_bench: repetitions must be positive");

    using Clock = std::chrono::steady_clock;
    std::vector<BenchRow> rows;
    rows.reserve(static_cast<std::size_t>(max_n) * 3);

    for (long long n = 1; n <= max_n; ++n) {
        Rational values[3];
        for (std::size_t mi = 0; mi < 3; ++mi) {
            const Method method = kAllMethods[mi];
            std::vector<long long> samples(static_cast<std::size_t>(repetitions));
            Rational value;
            for (auto& ns : samples) {
                const auto start = Clock::now();
                switch (method) {
                    case Method::recurrence: value = detail::number_recurrence_cold(n); break;
                    case Method::stirling: value = detail::number_stirling_cold(n); break;
                    case Method::determinant: value = detail::number_determinant_cold(n); break;
                }
                ns = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
            }
            values[mi] = value;
            std::sort(samples.begin(), samples.end());
            rows.push_back(BenchRow{n, method, samples[(samples.size() - 1) / 2], value.bit_size()});
        }
        if (values[1] != values[0] || values[2] != values[0])
            throw std::logic_error("run_bench: engines disagree at n=" + std::to_string(n));
    }
    return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "n,method,median_ns,value_bits\n";
    for (const BenchRow& r : rows)
        out << r.n << ',' << method_name(r.method) << ',' << r.median_ns << ',' << r.value_bits << '\n';
}

}  // namespace bern
