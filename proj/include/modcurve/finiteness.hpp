#pragma once

// Rule engine for finiteness of degree-d points on curves over Q.
//
//   AF  gonality > 2d                                         (Abramovich-Frey)
//   T1  Jac(C)(Q) finite and no degree-d map C -> P^1
//   T2  d = 5, g(C) >= 11, every elliptic factor of Jac(C) has rank 0, and no
//       degree-5 map C -> P^1
//   CoverImplication  finiteness on a quotient lifts along a declared finite
//       cover (here a chain of degree-2 maps)
//
// A verdict carries its certificate as a list of integer comparisons, each
// tagged as computed by this library or curated from the literature, so a
// serialized report can be re-checked without recomputation.

#include <optional>
#include <string>
#include <vector>

#include "modcurve/jacobian.hpp"
#include "modcurve/spectral_gonality.hpp"

namespace modcurve {

enum class Result { Finite, Inconclusive };
enum class Rule { AF, T1, T2, CoverImplication };
enum class Provenance { Computed, Curated };
enum class Cmp { Eq, Lt, Le, Gt, Ge };

std::string to_string(Result r);
std::string to_string(Rule r);
std::string to_string(Provenance p);
std::string to_string(Cmp c);
Result parse_result(const std::string& s);
Rule parse_rule(const std::string& s);
Provenance parse_provenance(const std::string& s);
Cmp parse_cmp(const std::string& s);

struct Predicate {
  std::string name;
  Int lhs = 0;
  Cmp op = Cmp::Eq;
  Int rhs = 0;
  Provenance source = Provenance::Computed;

  bool holds() const;
};

struct KnownMap {
  Int degree = 0;
  std::string provenance;
};

struct CurveFacts {
  std::string tag;
  Int genus = 0;
  std::optional<JacobianDecomposition> jacobian;
  std::optional<Int> integer_gonality_lb;
  std::string gonality_source;  // e.g. "index 1512, lambda_1 >= 975/4096"
  /// Genus of a degree-2 quotient, when the curve has one.
  std::optional<Int> double_cover_quotient_genus;
  std::string double_cover_name;
  /// Maps to P^1 known to exist over Q.
  std::vector<KnownMap> known_maps;
  /// Literature facts the certificate relies on (not checked here).
  std::vector<std::string> curated;
};

/// Throws CertificateError when genus and Jacobian dimension disagree.
void check_consistent(const CurveFacts& facts);

struct FinitenessVerdict {
  std::string tag;
  Int degree = 0;
  Result result = Result::Inconclusive;
  Rule rule = Rule::T1;
  std::vector<Predicate> certificate;
  std::vector<std::string> curated;
  std::string derived_from;  // CoverImplication: the quotient's tag

  bool finite() const { return result == Result::Finite; }
};

/// Re-evaluates every predicate: Finite iff all hold and the list is nonempty.
bool recheck(const FinitenessVerdict& v);

/// The genus threshold for T2 and the Brill-Noether chain behind it.
struct BnChain {
  Int d = 0;
  Int r2 = 0;
  Int r3 = 0;
  Int r5 = 0;
  Int degree = 0;          // deg alpha for alpha in A_5
  bool clifford_nonspecial = false;  // 2 r5 > degree
  Int rr_genus_bound = 0;  // degree - r5: the genus bound if the chain held
  Int threshold = 0;       // rr_genus_bound + 1
};

/// Only d = 5 is supported; other degrees throw DataError.
BnChain bn_genus_threshold(Int d);

FinitenessVerdict rule_AF(const CurveFacts& facts, Int d);
FinitenessVerdict rule_T1(const CurveFacts& facts, Int d);
FinitenessVerdict rule_T2(const CurveFacts& facts, Int d);

struct CoverMap {
  std::string cover;
  std::string quotient;
  Int degree = 0;
  std::string provenance;
};

/// Throws DataError if the map's target is not the verdict's curve.
FinitenessVerdict propagate_over_cover(const FinitenessVerdict& quotient, const CoverMap& map);

struct CurveOutcome {
  CurveFacts facts;
  std::vector<FinitenessVerdict> attempts;  // rules tried, in order T1, T2, AF
  FinitenessVerdict verdict;                // the first Finite attempt, else the last one
};

struct PipelineReport {
  Int degree = 5;
  std::string spectral_constant;
  std::vector<CurveOutcome> curves;
  std::vector<CoverMap> covers;
  std::vector<FinitenessVerdict> propagated;
  std::vector<std::string> curated;  // pipeline-level facts

  bool all_finite() const;
};

/// Assembles facts for X0(105), X(s3,b5,b7), X(b3,b5,ns7)/w3, X(s3,b5,e7)
/// from the newform data and runs the rules, then lifts along
/// X(b3,b5,e7) -> X(b3,b5,ns7) -> X(b3,b5,ns7)/w3.
/// Throws DataError for d != 5 and when an upstream step fails (the message
/// names the curve).
PipelineReport run_pipeline(const NewformSet& set, const SpectralConstant& c = SpectralConstant::kim_sarnak(),
                                  Int degree = 5);

struct GonalitySandwich {
  Int lower = 0;
  Int upper = 0;
  std::vector<std::string> steps;
};

/// Q- and C-gonality of X0(105): lower bound by excluding each degree below
/// it, upper bound from the curated degree-3 map on X0(105)/w35.
GonalitySandwich gonality_sandwich_X0_105(const NewformSet& set = bundled_fixtures());

}  // namespace modcurve
