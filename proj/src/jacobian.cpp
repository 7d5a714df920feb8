#include "modcurve/jacobian.hpp"

#include <algorithm>

#include "modcurve/errors.hpp"

namespace modcurve {

namespace {

constexpr Int kChenLevel = 735;

// Multiplicity of every form of level dividing n in the chi-eigenspace of w,
// zero entries kept.
std::vector<JacobianFactor> eigen_factors(Int n, const NewformSet& set, const ALSubgroup& w, const Character& chi) {
  std::vector<JacobianFactor> out;
  for (const auto& comp : decompose(n, set)) {
    const Int d = eigenspace_dim(comp, w, chi);
    out.push_back({comp.form, d / comp.form.hecke_degree});
  }
  return out;
}

// Generators {extra primes} (optionally preceded by {7}) and the matching
// character.
std::pair<ALSubgroup, Character> chen_group(Int level, const ChenCharacter& extra, bool with_w49) {
  std::vector<std::vector<Int>> gens;
  Character chi;
  if (with_w49) {
    gens.push_back({7});
    chi.push_back(1);
  }
  for (const auto& [p, sign] : extra) {
    gens.push_back({p});
    chi.push_back(sign);
  }
  return {ALSubgroup(level, std::move(gens)), std::move(chi)};
}

std::string chen_name(const ChenCharacter& extra) {
  std::string name = "X(b3,b5,ns7)";
  if (extra.empty()) return name;
  std::string slice;
  for (const auto& [p, sign] : extra) {
    if (!slice.empty()) slice += ',';
    slice += "w" + std::to_string(p) + (sign > 0 ? "=+1" : "=-1");
  }
  return name + "[" + slice + "]";
}

}  // namespace

Int JacobianDecomposition::multiplicity_of(std::string_view label) const {
  for (const auto& f : factors) {
    if (f.form.label == label) return f.multiplicity;
  }
  return 0;
}

JacobianDecomposition JacobianDecomposition::pruned() const {
  JacobianDecomposition out{curve, {}};
  for (const auto& f : factors) {
    if (f.multiplicity > 0) out.factors.push_back(f);
  }
  return out;
}

Int total_dimension(const JacobianDecomposition& dec) {
  Int total = 0;
  for (const auto& f : dec.factors) total += f.form.hecke_degree * f.multiplicity;
  return total;
}

JacobianDecomposition jacobian_X0(Int n, const NewformSet& set) {
  JacobianDecomposition dec{"X0(" + std::to_string(n) + ")", {}};
  for (const auto& comp : decompose(n, set)) dec.factors.push_back({comp.form, comp.old_multiplicity()});
  return dec;
}

JacobianDecomposition jacobian_al_quotient(Int n, const NewformSet& set, const ALSubgroup& w, const Character& chi) {
  const Character sign = chi.empty() ? trivial_character(w) : chi;
  JacobianDecomposition dec{"X0(" + std::to_string(n) + ")/" + w.name(), eigen_factors(n, set, w, sign)};
  return dec.pruned();
}

std::vector<ChenRow> chen_ns7_rows(const NewformSet& set, const ChenCharacter& extra) {
  for (const auto& [p, sign] : extra) {
    if (p != 3 && p != 5) {
      throw DataError("the ns7 isogeny is only equivariant for w_3 and w_5, not w_" + std::to_string(p));
    }
    if (sign != 1 && sign != -1) throw DataError("character values must be +1 or -1");
  }
  const auto [w735, chi735] = chen_group(kChenLevel, extra, true);
  const auto [w15, chi15] = chen_group(15, extra, false);
  const auto [w105, chi105] = chen_group(105, extra, false);

  const auto s7 = eigen_factors(kChenLevel, set, w735, chi735);
  const auto x15 = eigen_factors(15, set, w15, chi15);
  const auto x105 = eigen_factors(105, set, w105, chi105);

  auto lookup = [](const std::vector<JacobianFactor>& fs, const std::string& label) -> Int {
    for (const auto& f : fs) {
      if (f.form.label == label) return f.multiplicity;
    }
    return 0;
  };

  std::vector<ChenRow> rows;
  for (const auto& f : s7) {
    ChenRow row;
    row.form = f.form;
    row.s7 = f.multiplicity;
    row.at_15 = 15 % f.form.level == 0;
    row.at_105 = 105 % f.form.level == 0;
    row.x0_15 = lookup(x15, f.form.label);
    row.x0_105 = lookup(x105, f.form.label);
    row.ns7 = row.s7 + row.x0_15 - row.x0_105;
    if (row.ns7 < 0) {
      throw CertificateError("negative multiplicity " + std::to_string(row.ns7) + " for " + f.form.label +
                             " in " + chen_name(extra) + "; fixture data is inconsistent");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

JacobianDecomposition chen_ns7_decomposition(const NewformSet& set, const std::optional<ChenCharacter>& extra) {
  const ChenCharacter chi = extra.value_or(ChenCharacter{});
  JacobianDecomposition dec{chen_name(chi), {}};
  for (const auto& row : chen_ns7_rows(set, chi)) dec.factors.push_back({row.form, row.ns7});
  return dec.pruned();
}

Int mordell_weil_rank(const JacobianDecomposition& dec) {
  Int rank = 0;
  for (const auto& f : dec.factors) {
    if (f.multiplicity == 0) continue;
    if (f.form.analytic_rank >= 2) {
      throw DataError(f.form.label + " has analytic rank " + std::to_string(f.form.analytic_rank) +
                      "; algebraic rank is only known to match for analytic rank <= 1");
    }
    rank += f.form.analytic_rank * f.form.hecke_degree * f.multiplicity;
  }
  return rank;
}

EllipticScreen elliptic_factors_all_rank_zero(const JacobianDecomposition& dec) {
  EllipticScreen screen;
  for (const auto& f : dec.factors) {
    if (f.form.hecke_degree == 1 && f.multiplicity >= 1 && f.form.analytic_rank != 0) {
      screen.all_rank_zero = false;
      screen.witnesses.push_back(f.form.label);
    }
  }
  return screen;
}

}  // namespace modcurve
