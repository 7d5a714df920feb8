#include "modcurve/number_theory.hpp"

#include <algorithm>
#include <stdexcept>

namespace modcurve {

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Factorization factorize(Int n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  Factorization out;
  for (Int p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<Int> prime_divisors(Int n) {
  std::vector<Int> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

int valuation(Int n, Int p) {
  if (n < 1 || p < 2) throw std::invalid_argument("valuation: bad arguments");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::vector<Int> divisors(Int n) {
  std::vector<Int> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    Int pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int divisor_count(Int n) {
  Int t = 1;
  for (auto [p, e] : factorize(n)) t *= e + 1;
  return t;
}

Int ipow(Int base, int exp) {
  Int r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace modcurve
