#pragma once

// Isotypic decomposition of S_2(Gamma_0(N)) into subspaces V_f, one per
// Galois orbit of newforms f of level M | N, and the action of Atkin-Lehner
// involutions on them.
//
// V_f is spanned by f^tau(q^d) for d | N/M and the [E_f:Q] embeddings tau.
// w_{p^n} (n = v_p(N)) acts prime-locally on the divisor lattice: it sends
// the p-exponent e of d to m_p - e (m_p = v_p(N/M)), and on the fixed
// exponent e = m_p/2 it acts by the Fricke sign eps_p (eps_p = +1 if p does
// not divide M). The trace of a product of such involutions therefore
// factors over primes, and joint eigenspace dimensions follow from the
// character-sum projector formula.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "modcurve/newform_store.hpp"

namespace modcurve {

struct IsotypicComponent {
  Newform form;
  Int ambient_level = 0;
  /// q -> v_q(N/M) for primes q dividing N/M.
  std::map<Int, int> lattice_exponents;

  /// n_f = tau(N/M).
  Int old_multiplicity() const;
  /// dim V_f = [E_f:Q] * n_f.
  Int dim() const;
  /// v_p(N/M), zero when p does not divide N/M.
  int exponent_at(Int p) const;
  /// eps_p: the Fricke sign if p | M, +1 otherwise. Throws DataError when p | M
  /// and the sign is not recorded.
  int local_sign(Int p) const;
};

/// A subgroup of the Atkin-Lehner group of X_0(N) given by generators w_Q,
/// each Q = prod_{p in S} p^{v_p(N)} for a nonempty prime set S; the sets are
/// pairwise disjoint so the group is (Z/2)^r with elements = subsets of
/// generators.
class ALSubgroup {
 public:
  ALSubgroup() = default;

  /// Generators as prime sets. Throws DataError when a prime does not divide
  /// the level, a set is empty, or two generators share a prime.
  ALSubgroup(Int ambient_level, std::vector<std::vector<Int>> generators);

  /// Generators as exact divisors Q of N (gcd(Q, N/Q) = 1).
  static ALSubgroup from_divisors(Int ambient_level, const std::vector<Int>& qs);

  Int ambient_level() const { return level_; }
  std::size_t rank() const { return gens_.size(); }
  std::size_t order() const { return std::size_t{1} << gens_.size(); }
  const std::vector<std::vector<Int>>& generators() const { return gens_; }

  /// Q for generator i.
  Int generator_divisor(std::size_t i) const;

  /// Primes of the product of the generators selected by `mask`.
  std::vector<Int> element(std::uint32_t mask) const;

  /// "<w9,w35>" style name; "1" for the trivial group.
  std::string name() const;

 private:
  Int level_ = 0;
  std::vector<std::vector<Int>> gens_;
};

/// Signs per generator, aligned with ALSubgroup::generators().
using Character = std::vector<int>;

Character trivial_character(const ALSubgroup& w);

/// tau(N/M). Throws DataError unless M | N.
Int old_multiplicity(Int n, Int m);

/// Components for every form of level dividing n. Throws DataError when the
/// set is not complete for n.
std::vector<IsotypicComponent> decompose(Int n, const NewformSet& set);

/// Component of one form at ambient level n (the form's level must divide n).
IsotypicComponent component_of(const Newform& f, Int n);

/// Trace on V_f of w_Q, Q the full prime-power part of the ambient level over
/// `element_primes`. The empty element gives dim V_f.
Int al_trace(const IsotypicComponent& comp, std::span<const Int> element_primes);

/// Dimension of the subspace of V_f on which each generator of w acts by the
/// corresponding sign of chi. Throws CertificateError if the character sum is
/// not a nonnegative multiple of [E_f:Q] * |W|.
Int eigenspace_dim(const IsotypicComponent& comp, const ALSubgroup& w, const Character& chi);

/// Genus of X_0(n): sum of dim V_f.
Int genus_X0(Int n, const NewformSet& set);

/// Genus of X_0(n)/W: dimension of the W-invariant cusp forms.
Int genus_al_quotient(Int n, const NewformSet& set, const ALSubgroup& w);

/// Total dimension of the chi-eigenspace of W on S_2(Gamma_0(n)).
Int eigenspace_total(Int n, const NewformSet& set, const ALSubgroup& w, const Character& chi);

}  // namespace modcurve
