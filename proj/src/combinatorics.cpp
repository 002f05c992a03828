#include "bern/combinatorics.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace bern {

Integer binomial(long long p, long long q) {
    if (p < 0) throw std::invalid_argument("binomial: p must be nonnegative");
    if (q < 0 || q > p) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(q));
    return r;
}

namespace {

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer stirling2_by_sum(unsigned long n, unsigned long k) {
    Integer sum(0);
    for (unsigned long l = 1; l <= k; ++l) {
        Integer term = binomial(static_cast<long long>(k), static_cast<long long>(l));
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), l, n);
        term *= p;
        if ((k - l) % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    const Integer kfact = factorial(k);
    if (mpz_divisible_p(sum.get_mpz_t(), kfact.get_mpz_t()) == 0)
        throw std::logic_error("stirling2: alternating sum not divisible by k!");
    Integer r;
    mpz_divexact(r.get_mpz_t(), sum.get_mpz_t(), kfact.get_mpz_t());
    return r;
}

}  // namespace

Integer stirling2(long long n, long long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling2: arguments must be nonnegative");
    if (k == 0) return Integer(n == 0 ? 1 : 0);
    if (k > n) return Integer(0);

    thread_local std::unordered_map<std::uint64_t, Integer> cache;
    const std::uint64_t key = (static_cast<std::uint64_t>(n) << 32) | static_cast<std::uint64_t>(k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    Integer value = stirling2_by_sum(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return cache.emplace(key, std::move(value)).first->second;
}

namespace {

// Depth-first enumeration of partition-type vectors (l_i), largest part first.
// At part size i with `weight` and `parts` still to place, feasibility needs
// parts <= weight <= parts * i.
struct BellEnumerator {
    std::span<const Rational> xs;
    std::vector<long long> mult;  // mult[i-1] = l_i
    Integer nfact;
    Rational total;

    void run(long long i, long long weight, long long parts) {
        if (i == 1) {
            if (weight == parts) {
                mult[0] = parts;
                accumulate();
            }
            return;
        }
        const long long hi = std::min(weight / i, parts);
        for (long long li = 0; li <= hi; ++li) {
            const long long w = weight - i * li;
            const long long p = parts - li;
            if (w < p || w > p * (i - 1)) continue;
            mult[static_cast<std::size_t>(i - 1)] = li;
            run(i - 1, w, p);
        }
        mult[static_cast<std::size_t>(i - 1)] = 0;
    }

    void accumulate() {
        // weight = n! / (prod l_i! * prod (i!)^{l_i}), the number of set
        // partitions of this type; always a positive integer.
        Integer denom(1);
        for (std::size_t i = 0; i < mult.size(); ++i) {
            if (mult[i] == 0) continue;
            Integer f;
            mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(mult[i]));
            denom *= f;
            mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(i + 1));
            Integer fp;
            mpz_pow_ui(fp.get_mpz_t(), f.get_mpz_t(), static_cast<unsigned long>(mult[i]));
            denom *= fp;
        }
        if (mpz_divisible_p(nfact.get_mpz_t(), denom.get_mpz_t()) == 0)
            throw std::logic_error("bell_partial: non-integer partition weight");
        Integer weight;
        mpz_divexact(weight.get_mpz_t(), nfact.get_mpz_t(), denom.get_mpz_t());
        if (sgn(weight) <= 0) throw std::logic_error("bell_partial: nonpositive partition weight");

        Rational term(weight);
        for (std::size_t i = 0; i < mult.size(); ++i)
            if (mult[i] > 0) term *= pow(xs[i], static_cast<unsigned long>(mult[i]));
        total += term;
    }
};

}  // namespace

Rational bell_partial(long long n, long long k, std::span<const Rational> xs) {
    if (n < 0 || k < 0) throw std::invalid_argument("bell_partial: indices must be nonnegative");
    if (k > n) return Rational(0);
    if (k == 0) return Rational(n == 0 ? 1 : 0);

    const long long needed = n - k + 1;
    if (static_cast<long long>(xs.size()) < needed)
        throw std::invalid_argument("bell_partial: argument sequence shorter than n-k+1");

    BellEnumerator e{xs, std::vector<long long>(static_cast<std::size_t>(needed), 0), Integer(), Rational()};
    mpz_fac_ui(e.nfact.get_mpz_t(), static_cast<unsigned long>(n));
    e.run(needed, n, k);
    return e.total;
}

Rational bell_fractions(long long n, long long k) {
    if (k < 1 || n < k) throw std::invalid_argument("bell_fractions: need n >= k >= 1");
    Integer sum(0);
    for (long long i = 0; i <= k; ++i) {
        Integer term = binomial(n + k, k - i) * stirling2(n + i, i);
        if ((k - i) % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return Rational(factorial(static_cast<unsigned long>(n)) * sum, factorial(static_cast<unsigned long>(n + k)));
}

Integer detail::stirling2_uncached(long long n, long long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling2: arguments must be nonnegative");
    if (k == 0) return Integer(n == 0 ? 1 : 0);
    if (k > n) return Integer(0);
    return stirling2_by_sum(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
}

Rational faa_di_bruno(const DerivSeq& fd, const DerivSeq& gd, long long n) {
    if (n < 1) throw std::invalid_argument("faa_di_bruno: n must be positive");
    const auto need = static_cast<std::size_t>(n) + 1;
    if (fd.size() < need || gd.size() < need)
        throw std::invalid_argument("faa_di_bruno: derivative sequences must cover orders 0..n");

    Rational acc;
    for (long long k = 1; k <= n; ++k) {
        std::span<const Rational> inner(gd.data() + 1, static_cast<std::size_t>(n - k + 1));
        acc += fd[static_cast<std::size_t>(k)] * bell_partial(n, k, inner);
    }
    return acc;
}

}  // namespace bern
