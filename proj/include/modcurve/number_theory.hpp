#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace modcurve {

using Int = std::int64_t;

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
using Factorization = std::vector<std::pair<Int, int>>;

bool is_prime(Int n);
Factorization factorize(Int n);
std::vector<Int> prime_divisors(Int n);

/// Exponent of p in n (n > 0, p prime).
int valuation(Int n, Int p);

/// All positive divisors of n, ascending.
std::vector<Int> divisors(Int n);

/// tau(n): number of positive divisors.
Int divisor_count(Int n);

Int ipow(Int base, int exp);

}  // namespace modcurve
