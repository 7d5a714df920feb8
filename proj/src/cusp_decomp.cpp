#include "modcurve/cusp_decomp.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "modcurve/errors.hpp"

namespace modcurve {

Int IsotypicComponent::old_multiplicity() const {
  Int n = 1;
  for (const auto& [q, m] : lattice_exponents) n *= m + 1;
  return n;
}

Int IsotypicComponent::dim() const { return form.hecke_degree * old_multiplicity(); }

int IsotypicComponent::exponent_at(Int p) const {
  auto it = lattice_exponents.find(p);
  return it == lattice_exponents.end() ? 0 : it->second;
}

int IsotypicComponent::local_sign(Int p) const {
  if (form.level % p != 0) return 1;
  if (auto sign = form.fricke_sign(p)) return *sign;
  throw DataError("Fricke sign of " + form.label + " at " + std::to_string(p) + " is needed but not recorded");
}

ALSubgroup::ALSubgroup(Int ambient_level, std::vector<std::vector<Int>> generators)
    : level_(ambient_level), gens_(std::move(generators)) {
  if (level_ < 1) throw DataError("Atkin-Lehner group: level must be positive");
  std::set<Int> seen;
  for (auto& g : gens_) {
    if (g.empty()) throw DataError("Atkin-Lehner group: empty generator");
    std::sort(g.begin(), g.end());
    for (Int p : g) {
      if (!is_prime(p) || level_ % p != 0) {
        throw DataError("Atkin-Lehner group: " + std::to_string(p) + " is not a prime dividing " +
                        std::to_string(level_));
      }
      if (!seen.insert(p).second) {
        throw DataError("Atkin-Lehner group: prime " + std::to_string(p) + " used by two generators");
      }
    }
  }
  if (gens_.size() > 16) throw DataError("Atkin-Lehner group: too many generators");
}

ALSubgroup ALSubgroup::from_divisors(Int ambient_level, const std::vector<Int>& qs) {
  std::vector<std::vector<Int>> gens;
  for (Int q : qs) {
    if (q < 2 || ambient_level % q != 0 || std::gcd(q, ambient_level / q) != 1) {
      throw DataError("w_" + std::to_string(q) + " is not an Atkin-Lehner involution of level " +
                      std::to_string(ambient_level) + " (need an exact divisor)");
    }
    gens.push_back(prime_divisors(q));
  }
  return ALSubgroup(ambient_level, std::move(gens));
}

Int ALSubgroup::generator_divisor(std::size_t i) const {
  Int q = 1;
  for (Int p : gens_.at(i)) q *= ipow(p, valuation(level_, p));
  return q;
}

std::vector<Int> ALSubgroup::element(std::uint32_t mask) const {
  std::vector<Int> primes;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (mask & (1u << i)) primes.insert(primes.end(), gens_[i].begin(), gens_[i].end());
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

std::string ALSubgroup::name() const {
  if (gens_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ',';
    out += "w" + std::to_string(generator_divisor(i));
  }
  return gens_.size() == 1 ? out : "<" + out + ">";
}

Character trivial_character(const ALSubgroup& w) { return Character(w.rank(), 1); }

Int old_multiplicity(Int n, Int m) {
  if (n < 1 || m < 1 || n % m != 0) {
    throw DataError("old_multiplicity: " + std::to_string(m) + " does not divide " + std::to_string(n));
  }
  return divisor_count(n / m);
}

IsotypicComponent component_of(const Newform& f, Int n) {
  if (n < 1 || n % f.level != 0) {
    throw DataError(f.label + " does not occur at level " + std::to_string(n));
  }
  IsotypicComponent comp;
  comp.form = f;
  comp.ambient_level = n;
  for (auto [q, e] : factorize(n / f.level)) comp.lattice_exponents.emplace(q, e);
  return comp;
}

std::vector<IsotypicComponent> decompose(Int n, const NewformSet& set) {
  set.require_complete_for(n);
  std::vector<IsotypicComponent> out;
  for (const auto& f : forms_of_level_dividing(set, n)) out.push_back(component_of(f, n));
  return out;
}

Int al_trace(const IsotypicComponent& comp, std::span<const Int> element_primes) {
  Int trace = comp.form.hecke_degree;
  for (const auto& [q, m] : comp.lattice_exponents) {
    if (std::find(element_primes.begin(), element_primes.end(), q) == element_primes.end()) trace *= m + 1;
  }
  for (Int p : element_primes) {
    if (comp.ambient_level % p != 0) {
      throw DataError("w at " + std::to_string(p) + " is not defined at level " + std::to_string(comp.ambient_level));
    }
    const int m = comp.exponent_at(p);
    // Exponents e and m - e are swapped; only e = m/2 is fixed, where the
    // operator acts by eps_p.
    if (m % 2 != 0) return 0;
    trace *= comp.local_sign(p);
  }
  return trace;
}

Int eigenspace_dim(const IsotypicComponent& comp, const ALSubgroup& w, const Character& chi) {
  if (chi.size() != w.rank()) throw DataError("character does not match the Atkin-Lehner group");
  if (w.ambient_level() != comp.ambient_level) {
    throw DataError("Atkin-Lehner group of level " + std::to_string(w.ambient_level()) +
                    " applied at level " + std::to_string(comp.ambient_level));
  }
  for (int s : chi) {
    if (s != 1 && s != -1) throw DataError("character values must be +1 or -1");
  }
  Int sum = 0;
  for (std::uint32_t mask = 0; mask < w.order(); ++mask) {
    int sign = 1;
    for (std::size_t i = 0; i < w.rank(); ++i) {
      if (mask & (1u << i)) sign *= chi[i];
    }
    const auto primes = w.element(mask);
    sum += sign * al_trace(comp, primes);
  }
  const Int order = static_cast<Int>(w.order());
  if (sum < 0 || sum % order != 0 || (sum / order) % comp.form.hecke_degree != 0) {
    throw CertificateError("eigenspace of " + w.name() + " on V_f for " + comp.form.label + " at level " +
                           std::to_string(comp.ambient_level) + " has non-integral dimension " +
                           std::to_string(sum) + "/" + std::to_string(order));
  }
  return sum / order;
}

Int genus_X0(Int n, const NewformSet& set) {
  Int g = 0;
  for (const auto& comp : decompose(n, set)) g += comp.dim();
  return g;
}

Int eigenspace_total(Int n, const NewformSet& set, const ALSubgroup& w, const Character& chi) {
  Int g = 0;
  for (const auto& comp : decompose(n, set)) g += eigenspace_dim(comp, w, chi);
  return g;
}

Int genus_al_quotient(Int n, const NewformSet& set, const ALSubgroup& w) {
  return eigenspace_total(n, set, w, trivial_character(w));
}

}  // namespace modcurve
