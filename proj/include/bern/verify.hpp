#pragma once

/*
 * Executable identity suites and the engine benchmark. Each suite replays
 * one of the supporting identities over exact rationals (random inputs are
 * drawn from a seeded generator, so runs are reproducible) and reports a
 * case count plus the first counterexample, if any.
 */

#include "bern/bernoulli.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bern {

inline constexpr std::uint64_t kDefaultSeed = 987654321;

struct SuiteResult {
    std::string name;
    long long cases = 0;
    long long failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }
};

// Cross-engine agreement sweep (wraps verify_all).
SuiteResult suite_cross_method(long long max_n);

// B_{n,k}(x+y) = sum_{r+s=k, l+m=n} C(n,l) B_{l,r}(x) B_{m,s}(y),
// zero-inclusive ranges, out-of-range Bell values = 0.
SuiteResult suite_bell_convolution(std::uint64_t seed, long long max_n = 9, int sequences = 5);

// B_{n,k}(a b x_1, a b^2 x_2, ...) = a^k b^n B_{n,k}(x_1, x_2, ...).
SuiteResult suite_bell_scaling(std::uint64_t seed, long long max_n = 9, int sequences = 5);

// bell_fractions(n,k) equals the partition-enumeration value at
// (1/2, 1/3, ..., 1/(n-k+2)).
SuiteResult suite_bell_fraction_values(long long max_n = 12);

// Reciprocal coefficients by Hessenberg determinant equal those by long
// division, and the Toeplitz product check holds, over random prefixes.
SuiteResult suite_series_reciprocal(std::uint64_t seed, int prefixes = 50, std::size_t order = 8);

// stirling2(n,k) = k stirling2(n-1,k) + stirling2(n-1,k-1) with the
// boundary conventions.
SuiteResult suite_stirling_recurrence(long long max_n = 25);

// Reciprocal of a_j = ((1-u)^{j+1} - (-u)^{j+1})/(j+1)! gives B_n(u)/n!
// at u in {0, 1/2, -1}, against all three engines.
SuiteResult suite_bernoulli_series_route(long long max_n = 15);

struct VerifyOptions {
    long long max_n = 16;
    std::uint64_t seed = kDefaultSeed;
};

// The full battery run by `bern verify`.
std::vector<SuiteResult> run_verification(const VerifyOptions& opt);

struct BenchRow {
    long long n = 0;
    Method method = Method::recurrence;
    long long median_ns = 0;
    std::size_t value_bits = 0;  // numerator bits + denominator bits
};

// Times the cache-free number engines for n = 1..max_n, repetitions each;
// throws std::logic_error if the engines ever disagree.
std::vector<BenchRow> run_bench(long long max_n, int repetitions);

// Header exactly "n,method,median_ns,value_bits".
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace bern
