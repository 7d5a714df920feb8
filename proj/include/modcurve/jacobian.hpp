#pragma once

// Up-to-isogeny decompositions of modular Jacobians into the Q-simple factors
// A_f, rank accounting from analytic ranks, and the multiplicity relation for
// the non-split Cartan curve X(b3,b5,ns7) coming from the isogeny
//   Jac X(b3,b5,ns7) x J_0(105) ~ Jac X(b3,b5,s7) x J_0(15),
// which is equivariant for w_3, w_5 and Hecke operators away from 7.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modcurve/cusp_decomp.hpp"

namespace modcurve {

struct JacobianFactor {
  Newform form;
  Int multiplicity = 0;
};

struct JacobianDecomposition {
  std::string curve;
  /// Unique by label, ordered by (level, label).
  std::vector<JacobianFactor> factors;

  Int multiplicity_of(std::string_view label) const;
  /// Copy without multiplicity-zero factors.
  JacobianDecomposition pruned() const;
};

/// sum of dim A_f * multiplicity.
Int total_dimension(const JacobianDecomposition& dec);

/// J_0(n): multiplicities tau(n/M).
JacobianDecomposition jacobian_X0(Int n, const NewformSet& set);

/// Jacobian of the chi-eigenspace of W (chi defaults to all +1, i.e. the
/// quotient X_0(n)/W). Zero-multiplicity factors are dropped.
JacobianDecomposition jacobian_al_quotient(Int n, const NewformSet& set, const ALSubgroup& w,
                                           const Character& chi = {});

/// Signs imposed on w_3 and/or w_5 (keys restricted to {3, 5}).
using ChenCharacter = std::map<Int, int>;

/// Per-form multiplicities of the three known terms and the derived one.
struct ChenRow {
  Newform form;
  Int s7 = 0;      // X(b3,b5,s7) = X_0(735)/w_49, i.e. the w_49 = +1 part
  Int x0_15 = 0;
  Int x0_105 = 0;
  Int ns7 = 0;     // s7 + x0_15 - x0_105
  bool at_15 = false;   // level divides 15
  bool at_105 = false;  // level divides 105
};

/// One row for every form of level dividing 735 (zero rows included).
/// Throws CertificateError on a negative derived multiplicity.
std::vector<ChenRow> chen_ns7_rows(const NewformSet& set, const ChenCharacter& extra = {});

/// Jacobian of X(b3,b5,ns7), or of its chi-eigenspace for w_3/w_5 when
/// `extra` is given (e.g. {3:+1} for the quotient by w_3).
JacobianDecomposition chen_ns7_decomposition(const NewformSet& set,
                                             const std::optional<ChenCharacter>& extra = std::nullopt);

/// sum of analytic_rank * dim A_f * multiplicity. Valid only when every
/// factor has analytic rank <= 1 (Gross-Zagier, Kolyvagin-Logachev); throws
/// DataError otherwise.
Int mordell_weil_rank(const JacobianDecomposition& dec);

struct EllipticScreen {
  bool all_rank_zero = true;
  /// Labels of elliptic factors (dim 1, multiplicity >= 1) with positive rank.
  std::vector<std::string> witnesses;

  explicit operator bool() const { return all_rank_zero; }
};

EllipticScreen elliptic_factors_all_rank_zero(const JacobianDecomposition& dec);

}  // namespace modcurve
