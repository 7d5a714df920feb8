#pragma once

// Gonality lower bounds from the spectral gap (lambda_1 * index / 24), and
// the genus/degree inequalities of Castelnuovo-Severi and Riemann-Hurwitz.
// Everything is exact; no floating point on the computation path.

#include <boost/rational.hpp>
#include <string>
#include <string_view>

#include "modcurve/number_theory.hpp"

namespace modcurve {

using Rational = boost::rational<Int>;

/// Smallest integer >= r.
Int ceil(const Rational& r);

/// Decimal rendering rounded half-up (away from zero on ties) to `places`
/// digits. Presentation only.
std::string to_decimal(const Rational& r, int places = 4);

/// "n/d", or "n" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "n" or "n/d".
Rational parse_rational(std::string_view text);

/// Lower bound for the first nonzero Laplacian eigenvalue lambda_1.
class SpectralConstant {
 public:
  enum class Kind { LRS, KimSarnak, Selberg, Custom };

  static SpectralConstant lrs() { return {Kind::LRS, Rational(21, 100)}; }
  static SpectralConstant kim_sarnak() { return {Kind::KimSarnak, Rational(975, 4096)}; }
  static SpectralConstant selberg() { return {Kind::Selberg, Rational(1, 4)}; }
  /// Throws DataError unless value > 0.
  static SpectralConstant custom(Rational value);

  /// Accepts "lrs", "kim-sarnak", "selberg" or a rational literal.
  static SpectralConstant parse(std::string_view name);

  Kind kind() const { return kind_; }
  const Rational& value() const { return value_; }
  std::string name() const;

 private:
  SpectralConstant(Kind kind, Rational value) : kind_(kind), value_(value) {}
  Kind kind_;
  Rational value_;
};

/// lambda_1 * index / 24. The gonality is at least ceil() of this.
Rational gonality_lower_bound(Int index, const SpectralConstant& c);

/// ceil(gonality_lower_bound(index, c)).
Int integer_gonality_bound(Int index, const SpectralConstant& c);

/// Upper bound on g(C) when C -> C2 (degree deg_f) and C -> C3 (degree deg_g)
/// do not factor through a common map.
Int castelnuovo_severi_max_genus(Int g2, Int g3, Int deg_f, Int deg_g);

/// For a double cover C -> C', the smallest degree d of a map C -> P^1 not
/// factoring through C' allowed by Castelnuovo-Severi: g(C) <= 2 g(C') + d - 1.
Int min_nonfactoring_degree(Int g_curve, Int g_quotient);

struct NoMapCertificate {
  Int g_curve = 0;
  Int g_quotient = 0;
  Int degree = 0;
  Int min_nonfactoring = 0;
  bool odd_degree = false;
  /// True only when no degree-`degree` map to P^1 exists over C.
  bool holds = false;

  explicit operator bool() const { return holds; }
};

/// One-sided certificate: an odd-degree map cannot factor through a double
/// cover, so it is excluded when degree < min_nonfactoring_degree. A false
/// result is "inconclusive", never a claim that a map exists.
NoMapCertificate no_degree_d_map_certificate(Int g_curve, Int g_quotient, Int degree);

/// Genus of a double cover of a genus-g_base curve branched at num_branch
/// points. Throws DataError on odd or negative branch counts.
Int riemann_hurwitz_double_cover_genus(Int g_base, Int num_branch);

/// Abramovich-Frey criterion: degree-d points are finite when gonality > 2d.
bool abramovich_frey_finite(Int integer_gonality_bound, Int d);

}  // namespace modcurve
