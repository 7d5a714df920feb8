#pragma once

// Independent reference computations for the tests. Nothing here calls the
// trace/character-sum code in cusp_decomp.

#include <boost/rational.hpp>
#include <map>
#include <numeric>
#include <vector>

#include "modcurve/newform_store.hpp"

namespace oracle {

using modcurve::Int;
using Q = boost::rational<Int>;
using Matrix = std::vector<std::vector<Q>>;

inline Int vp(Int n, Int p) {
  Int e = 0;
  while (n % p == 0) n /= p, ++e;
  return e;
}

inline std::vector<Int> divisors_naive(Int n) {
  std::vector<Int> out;
  for (Int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline Int rank(Matrix m) {
  Int r = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < static_cast<Int>(rows); ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].numerator() == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == static_cast<std::size_t>(r) || m[i][c].numerator() == 0) continue;
      const Q f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

// Matrix of w_Q (Q the full p-parts of n over `primes`) on V_f, basis
// f^tau(q^d), tau = 1..[E_f:Q], d | n/M. f(q^d) goes to +-f(q^d') with the
// p-exponent of d reflected inside [0, v_p(n/M)]; the sign is the Fricke
// sign for each p | M.
inline Matrix involution_matrix(const modcurve::Newform& f, Int n, const std::vector<Int>& primes) {
  const Int nm = n / f.level;
  const auto ds = divisors_naive(nm);
  const std::size_t k = ds.size();
  const std::size_t dim = k * static_cast<std::size_t>(f.hecke_degree);
  Matrix m(dim, std::vector<Q>(dim, Q(0)));
  int sign = 1;
  for (Int p : primes)
    if (f.level % p == 0) sign *= f.fricke_signs.at(p);
  for (std::size_t i = 0; i < k; ++i) {
    Int d = ds[i], image = d;
    for (Int p : primes) {
      const Int e = vp(d, p), top = vp(nm, p);
      Int pe = 1, pt = 1;
      for (Int j = 0; j < e; ++j) pe *= p;
      for (Int j = 0; j < top - e; ++j) pt *= p;
      image = image / pe * pt;
    }
    std::size_t j = 0;
    while (ds[j] != image) ++j;
    for (Int t = 0; t < f.hecke_degree; ++t) m[t * k + j][t * k + i] = Q(sign);
  }
  return m;
}

// dim of the joint eigenspace {v : W_i v = chi_i v} = dim - rank(stacked W_i - chi_i).
inline Int joint_eigenspace_dim(const modcurve::Newform& f, Int n, const std::vector<std::vector<Int>>& gens,
                                const std::vector<int>& chi) {
  Matrix stacked;
  Int dim = 0;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    auto m = involution_matrix(f, n, gens[g]);
    dim = static_cast<Int>(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i][i] -= Q(chi[g]);
    stacked.insert(stacked.end(), m.begin(), m.end());
  }
  if (gens.empty()) return static_cast<Int>(divisors_naive(n / f.level).size()) * f.hecke_degree;
  return dim - rank(stacked);
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  Matrix c(a.size(), std::vector<Q>(b[0].size(), Q(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      if (a[i][k].numerator() != 0)
        for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Two-case closed form for one involution w_{p^n}: returns {d_+, d_-}.
inline std::pair<Int, Int> single_involution_closed_form(const modcurve::Newform& f, Int n, Int p) {
  const Int nm = n / f.level;
  const Int m = vp(nm, p);
  Int others = 1;
  for (Int q = 2; q <= nm; ++q) {
    bool prime = true;
    for (Int r = 2; r * r <= q; ++r)
      if (q % r == 0) prime = false;
    if (prime && q != p && nm % q == 0) others *= vp(nm, q) + 1;
  }
  const Int dim = f.hecke_degree * (m + 1) * others;
  if (m % 2 == 1) return {dim / 2, dim / 2};
  const int eps = f.level % p == 0 ? f.fricke_signs.at(p) : 1;
  return {f.hecke_degree * (m + (1 + eps)) / 2 * others, f.hecke_degree * (m + (1 - eps)) / 2 * others};
}

// Genus of X_0(n) from 12g = 12 + mu - 3 nu2 - 4 nu3 - 6 nu_inf, with every
// ingredient counted directly rather than from a product formula.
inline Int genus_x0_counting(Int n) {
  // mu = |P^1(Z/n)| = #{(c, d) mod n : gcd(c, d, n) = 1} / phi(n)
  Int pairs = 0, phi_n = 0;
  for (Int c = 0; c < n; ++c) {
    if (std::gcd(c, n) == 1) ++phi_n;
    for (Int d = 0; d < n; ++d)
      if (std::gcd(std::gcd(c, d), n) == 1) ++pairs;
  }
  const Int mu = pairs / phi_n;
  Int nu2 = 0, nu3 = 0;
  for (Int x = 0; x < n; ++x) {
    if ((x * x + 1) % n == 0) ++nu2;
    if ((x * x + x + 1) % n == 0) ++nu3;
  }
  Int cusps = 0;
  for (Int d : divisors_naive(n)) {
    const Int g = std::gcd(d, n / d);
    Int phi = 0;
    for (Int i = 1; i <= g; ++i)
      if (std::gcd(i, g) == 1) ++phi;
    cusps += phi;
  }
  return 1 + (mu - 3 * nu2 - 4 * nu3 - 6 * cusps) / 12;
}

}  // namespace oracle
