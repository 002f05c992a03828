#pragma once

/*
 * Exact combinatorial kernels: binomial coefficients, Stirling numbers of
 * the second kind, partial Bell polynomials (by partition-type enumeration
 * and by their Stirling-sum closed form at the arguments 1/2, 1/3, ...),
 * and the composite-derivative (Faa di Bruno) formula.
 */

#include "bern/rational.hpp"

#include <span>
#include <vector>

namespace bern {

// Sequence of derivative values f(x0), f'(x0), ..., f^(n)(x0); index = order.
using DerivSeq = std::vector<Rational>;

// C(p, q) with C(0,0) = 1 and 0 whenever q < 0 or q > p. p < 0 is an error.
Integer binomial(long long p, long long q);

// S(n, k) via the alternating sum (1/k!) * sum_{l=1..k} (-1)^(k-l) C(k,l) l^n,
// extended by S(0,0) = 1, S(n,0) = 0 for n >= 1, S(n,k) = 0 for k > n.
// The alternating sum is checked to divide exactly by k!. Memoized per thread.
Integer stirling2(long long n, long long k);

// Partial Bell polynomial B_{n,k}(x_1..x_{n-k+1}): sum over all type vectors
// (l_1..l_n) with sum l_i = k and sum i*l_i = n of the set-partition count
// n!/(prod l_i! * prod (i!)^{l_i}) times prod x_i^{l_i}.
// Conventions: B_{0,0} = 1, B_{n,0} = 0 for n >= 1, B_{n,k} = 0 for k > n.
Rational bell_partial(long long n, long long k, std::span<const Rational> xs);

// Closed form for B_{n,k}(1/2, 1/3, ..., 1/(n-k+2)), n >= k >= 1:
//   n!/(n+k)! * sum_{i=0..k} (-1)^(k-i) C(n+k, k-i) S(n+i, i).
Rational bell_fractions(long long n, long long k);

// n-th derivative of f(g(x)) at x0 from the derivative sequences:
//   sum_{k=1..n} f^(k) * B_{n,k}(g', g'', ..., g^(n-k+1)).
// fd holds f^(0)..f^(n) at g(x0), gd holds g^(0)..g^(n) at x0.
Rational faa_di_bruno(const DerivSeq& fd, const DerivSeq& gd, long long n);

namespace detail {

// Same value as stirling2 but never touches the memo; benchmarking hook.
Integer stirling2_uncached(long long n, long long k);

}  // namespace detail

}  // namespace bern
