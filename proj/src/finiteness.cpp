#include "modcurve/finiteness.hpp"

#include <algorithm>
#include <functional>

#include "modcurve/errors.hpp"
#include "modcurve/level_arith.hpp"

namespace modcurve {

namespace {

constexpr const char* kX0_105 = "X0(105)";
constexpr const char* kS3B5B7 = "X(s3,b5,b7)";
constexpr const char* kNs7 = "X(b3,b5,ns7)";
constexpr const char* kNs7W3 = "X(b3,b5,ns7)/w3";
constexpr const char* kB3B5E7 = "X(b3,b5,e7)";
constexpr const char* kS3B5E7 = "X(s3,b5,e7)";

FinitenessVerdict make_verdict(const CurveFacts& facts, Int d, Rule rule, std::vector<Predicate> preds) {
  FinitenessVerdict v;
  v.tag = facts.tag;
  v.degree = d;
  v.rule = rule;
  v.certificate = std::move(preds);
  v.curated = facts.curated;
  const bool all = !v.certificate.empty() &&
                   std::all_of(v.certificate.begin(), v.certificate.end(), [](const Predicate& p) { return p.holds(); });
  v.result = all ? Result::Finite : Result::Inconclusive;
  return v;
}

void add_no_map(const CurveFacts& facts, Int d, std::vector<Predicate>& preds) {
  const Int known = std::count_if(facts.known_maps.begin(), facts.known_maps.end(),
                                  [d](const KnownMap& m) { return m.degree == d; });
  preds.push_back({"known maps of degree d to P^1 over Q", known, Cmp::Eq, 0, Provenance::Curated});
  if (!facts.double_cover_quotient_genus) {
    preds.push_back({"non-existence certificate for a degree-d map available", 0, Cmp::Eq, 1, Provenance::Computed});
    return;
  }
  const auto cert = no_degree_d_map_certificate(facts.genus, *facts.double_cover_quotient_genus, d);
  const std::string quotient = facts.double_cover_name.empty() ? "the double-cover quotient" : facts.double_cover_name;
  preds.push_back({"d odd, so a degree-d map cannot factor through " + quotient, d % 2, Cmp::Eq, 1,
                   Provenance::Computed});
  preds.push_back({"d < g - 2 g(" + quotient + ") + 1 (Castelnuovo-Severi)", d, Cmp::Lt, cert.min_nonfactoring,
                   Provenance::Computed});
}

[[noreturn]] void rethrow_in_context(const Error& e, const std::string& where) {
  const std::string what = where + ": " + e.what();
  if (const auto* net = dynamic_cast<const NetworkError*>(&e)) throw NetworkError(net->reason(), what);
  switch (e.kind()) {
    case ErrorKind::Certificate: throw CertificateError(what);
    case ErrorKind::Network: throw NetworkError(NetworkError::Reason::Unreachable, what);
    case ErrorKind::Data: break;
  }
  throw DataError(what);
}

template <typename F>
CurveFacts assemble(const std::string& tag, F&& build) {
  try {
    CurveFacts facts = build();
    check_consistent(facts);
    return facts;
  } catch (const Error& e) {
    rethrow_in_context(e, tag);
  }
}

LevelStructure level(std::initializer_list<std::pair<Int, SubgroupKind>> entries) {
  LevelStructure ls;
  for (auto [p, kind] : entries) ls.set(p, kind);
  return ls;
}

std::string gonality_source(Int index, const SpectralConstant& c) {
  return "index " + std::to_string(index) + ", lambda_1 >= " + to_string(c.value()) + " (" + c.name() +
         "): bound " + to_string(gonality_lower_bound(index, c));
}

CurveOutcome evaluate(CurveFacts facts, Int d) {
  CurveOutcome out;
  out.facts = std::move(facts);
  for (auto rule : {rule_T1, rule_T2, rule_AF}) {
    out.attempts.push_back(rule(out.facts, d));
    if (out.attempts.back().finite()) break;
  }
  out.verdict = out.attempts.back();
  return out;
}

}  // namespace

std::string to_string(Result r) { return r == Result::Finite ? "Finite" : "Inconclusive"; }

std::string to_string(Rule r) {
  switch (r) {
    case Rule::AF: return "AF";
    case Rule::T1: return "T1";
    case Rule::T2: return "T2";
    case Rule::CoverImplication: return "CoverImplication";
  }
  return "?";
}

std::string to_string(Provenance p) { return p == Provenance::Computed ? "computed" : "curated"; }

std::string to_string(Cmp c) {
  switch (c) {
    case Cmp::Eq: return "==";
    case Cmp::Lt: return "<";
    case Cmp::Le: return "<=";
    case Cmp::Gt: return ">";
    case Cmp::Ge: return ">=";
  }
  return "?";
}

Result parse_result(const std::string& s) {
  if (s == "Finite") return Result::Finite;
  if (s == "Inconclusive") return Result::Inconclusive;
  throw DataError("unknown result '" + s + "'");
}

Rule parse_rule(const std::string& s) {
  for (Rule r : {Rule::AF, Rule::T1, Rule::T2, Rule::CoverImplication}) {
    if (to_string(r) == s) return r;
  }
  throw DataError("unknown rule '" + s + "'");
}

Provenance parse_provenance(const std::string& s) {
  if (s == "computed") return Provenance::Computed;
  if (s == "curated") return Provenance::Curated;
  throw DataError("unknown provenance '" + s + "'");
}

Cmp parse_cmp(const std::string& s) {
  for (Cmp c : {Cmp::Eq, Cmp::Lt, Cmp::Le, Cmp::Gt, Cmp::Ge}) {
    if (to_string(c) == s) return c;
  }
  throw DataError("unknown comparison '" + s + "'");
}

bool Predicate::holds() const {
  switch (op) {
    case Cmp::Eq: return lhs == rhs;
    case Cmp::Lt: return lhs < rhs;
    case Cmp::Le: return lhs <= rhs;
    case Cmp::Gt: return lhs > rhs;
    case Cmp::Ge: return lhs >= rhs;
  }
  return false;
}

void check_consistent(const CurveFacts& facts) {
  if (facts.jacobian && total_dimension(*facts.jacobian) != facts.genus) {
    throw CertificateError(facts.tag + ": genus " + std::to_string(facts.genus) + " but Jacobian has dimension " +
                           std::to_string(total_dimension(*facts.jacobian)));
  }
}

bool recheck(const FinitenessVerdict& v) {
  const bool all = !v.certificate.empty() &&
                   std::all_of(v.certificate.begin(), v.certificate.end(), [](const Predicate& p) { return p.holds(); });
  return all == v.finite();
}

BnChain bn_genus_threshold(Int d) {
  if (d != 5) {
    throw DataError("genus threshold is only established for degree 5 (requested degree " + std::to_string(d) + ")");
  }
  BnChain c;
  c.d = d;
  c.r2 = 3;                   // r_2 >= dim A >= 2, improved to 3
  c.r3 = 2 * c.r2;            // r_3 >= 2 r_2
  c.r5 = 2 * c.r3 + c.r2;     // r_5 >= 2 r_3 + r_2
  c.degree = 5 * d;           // alpha in A_5 has degree 5d
  c.clifford_nonspecial = 2 * c.r5 > c.degree;
  if (!c.clifford_nonspecial) throw CertificateError("Clifford bound does not make alpha non-special");
  c.rr_genus_bound = c.degree - c.r5;  // Riemann-Roch for non-special alpha
  c.threshold = c.rr_genus_bound + 1;
  return c;
}

FinitenessVerdict rule_AF(const CurveFacts& facts, Int d) {
  std::vector<Predicate> preds;
  if (facts.integer_gonality_lb) {
    const std::string why = facts.gonality_source.empty() ? "" : " [" + facts.gonality_source + "]";
    preds.push_back({"gonality lower bound > 2d" + why, *facts.integer_gonality_lb, Cmp::Gt, 2 * d,
                     Provenance::Computed});
  } else {
    preds.push_back({"gonality lower bound available", 0, Cmp::Eq, 1, Provenance::Computed});
  }
  return make_verdict(facts, d, Rule::AF, std::move(preds));
}

FinitenessVerdict rule_T1(const CurveFacts& facts, Int d) {
  std::vector<Predicate> preds;
  if (facts.jacobian) {
    preds.push_back({"Mordell-Weil rank of Jac(C)(Q)", mordell_weil_rank(*facts.jacobian), Cmp::Eq, 0,
                     Provenance::Computed});
  } else {
    preds.push_back({"Jacobian decomposition available", 0, Cmp::Eq, 1, Provenance::Computed});
  }
  add_no_map(facts, d, preds);
  return make_verdict(facts, d, Rule::T1, std::move(preds));
}

FinitenessVerdict rule_T2(const CurveFacts& facts, Int d) {
  const BnChain chain = bn_genus_threshold(d);
  std::vector<Predicate> preds;
  preds.push_back({"genus >= Brill-Noether threshold", facts.genus, Cmp::Ge, chain.threshold,
                   facts.jacobian ? Provenance::Computed : Provenance::Curated});
  if (facts.jacobian) {
    const auto screen = elliptic_factors_all_rank_zero(*facts.jacobian);
    std::string name = "elliptic factors of positive analytic rank";
    for (const auto& w : screen.witnesses) name += (w == screen.witnesses.front() ? ": " : ", ") + w;
    preds.push_back({name, static_cast<Int>(screen.witnesses.size()), Cmp::Eq, 0, Provenance::Computed});
  } else {
    preds.push_back({"Jacobian decomposition available", 0, Cmp::Eq, 1, Provenance::Computed});
  }
  add_no_map(facts, d, preds);
  return make_verdict(facts, d, Rule::T2, std::move(preds));
}

FinitenessVerdict propagate_over_cover(const FinitenessVerdict& quotient, const CoverMap& map) {
  if (map.quotient != quotient.tag) {
    throw DataError("cover " + map.cover + " -> " + map.quotient + " does not end at " + quotient.tag);
  }
  FinitenessVerdict v;
  v.tag = map.cover;
  v.degree = quotient.degree;
  v.rule = Rule::CoverImplication;
  v.derived_from = quotient.tag;
  v.certificate = {
      {"degree-d points on " + quotient.tag + " finite", quotient.finite() ? 1 : 0, Cmp::Eq, 1, Provenance::Computed},
      {"degree of the finite map " + map.cover + " -> " + map.quotient, map.degree, Cmp::Ge, 1, Provenance::Curated},
  };
  v.curated = {map.provenance};
  v.result = std::all_of(v.certificate.begin(), v.certificate.end(), [](const Predicate& p) { return p.holds(); })
                 ? Result::Finite
                 : Result::Inconclusive;
  return v;
}

bool PipelineReport::all_finite() const {
  return std::all_of(curves.begin(), curves.end(), [](const CurveOutcome& c) { return c.verdict.finite(); }) &&
         std::all_of(propagated.begin(), propagated.end(), [](const FinitenessVerdict& v) { return v.finite(); });
}

PipelineReport run_pipeline(const NewformSet& set, const SpectralConstant& c, Int degree) {
  if (degree == 6) {
    throw DataError(
        "degree 6 is not supported: X0(105) has a degree-6 map to P^1 over Q (a degree-3 projection of the plane "
        "quartic X0(105)/w35 composed with the double cover), so pulling back rational points gives infinitely "
        "many degree-6 points");
  }
  if (degree != 5) {
    throw DataError("only degree 5 is supported (requested degree " + std::to_string(degree) + ")");
  }

  PipelineReport report;
  report.degree = degree;
  report.spectral_constant = c.name() + " (lambda_1 >= " + to_string(c.value()) + ")";
  report.curated = {
      "Every Q-rational point of X0(105), X(s3,b5,b7), X(b3,b5,e7), X(s3,b5,e7) is a cusp (they map to X0(35) "
      "or X(b5,ns7), whose rational points are cusps by Derickx-Najman-Siksek); hence degree-5 points suffice",
      "Mordell-Weil rank equals analytic rank for analytic rank <= 1 (Gross-Zagier, Kolyvagin-Logachev)",
  };

  const Int idx_105 = psl2_index(level({{3, SubgroupKind::Borel}, {5, SubgroupKind::Borel}, {7, SubgroupKind::Borel}}));
  const Int idx_s3 = psl2_index(
      level({{3, SubgroupKind::SplitCartanNormalizer}, {5, SubgroupKind::Borel}, {7, SubgroupKind::Borel}}));
  const Int idx_s3e7 =
      psl2_index(level({{3, SubgroupKind::SplitCartanNormalizer}, {5, SubgroupKind::Borel}, {7, SubgroupKind::E7}}));

  const auto x0_105 = assemble(kX0_105, [&] {
    CurveFacts f;
    f.tag = kX0_105;
    f.genus = genus_X0(105, set);
    f.jacobian = jacobian_X0(105, set);
    f.integer_gonality_lb = integer_gonality_bound(idx_105, c);
    f.gonality_source = gonality_source(idx_105, c);
    f.double_cover_quotient_genus = genus_al_quotient(105, set, ALSubgroup::from_divisors(105, {35}));
    f.double_cover_name = "X0(105)/w35";
    f.known_maps.push_back({6, "projection of the plane quartic X0(105)/w35 from a rational cusp (degree 3) "
                               "composed with X0(105) -> X0(105)/w35"});
    f.curated.push_back("X0(105)/w35 is a non-hyperelliptic curve of genus 3 (Furumoto-Hasegawa)");
    return f;
  });

  const auto s3b5b7 = assemble(kS3B5B7, [&] {
    CurveFacts f;
    f.tag = kS3B5B7;
    const auto w9 = ALSubgroup::from_divisors(315, {9});
    f.jacobian = jacobian_al_quotient(315, set, w9);
    f.genus = genus_al_quotient(315, set, w9);
    f.integer_gonality_lb = integer_gonality_bound(idx_s3, c);
    f.gonality_source = gonality_source(idx_s3, c);
    f.double_cover_quotient_genus = genus_al_quotient(315, set, ALSubgroup::from_divisors(315, {9, 35}));
    f.double_cover_name = "X(s3,b5,b7)/w35";
    f.curated.push_back("X(s3,b5,b7) is isomorphic to X0(315)/w9");
    return f;
  });

  const auto ns7_w3 = assemble(kNs7W3, [&] {
    CurveFacts f;
    f.tag = kNs7W3;
    f.jacobian = chen_ns7_decomposition(set, ChenCharacter{{3, 1}});
    f.genus = total_dimension(*f.jacobian);
    f.double_cover_quotient_genus = total_dimension(chen_ns7_decomposition(set, ChenCharacter{{3, 1}, {5, 1}}));
    f.double_cover_name = "X(b3,b5,ns7)/<w3,w5>";
    f.curated.push_back(
        "Jac X(b3,b5,ns7) x J0(105) ~ Jac X(b3,b5,s7) x J0(15), equivariant for w3, w5 (Chen, de Smit-Edixhoven)");
    f.curated.push_back("X(b3,b5,s7) is isomorphic to X0(735)/w49");
    return f;
  });

  const auto s3b5e7 = assemble(kS3B5E7, [&] {
    CurveFacts f;
    f.tag = kS3B5E7;
    f.genus = 153;
    f.integer_gonality_lb = integer_gonality_bound(idx_s3e7, c);
    f.gonality_source = gonality_source(idx_s3e7, c);
    f.curated.push_back("genus 153 (Box); not used by any rule that fires");
    return f;
  });

  for (const auto& facts : {x0_105, s3b5b7, ns7_w3, s3b5e7}) report.curves.push_back(evaluate(facts, degree));

  report.covers = {
      {kNs7, kNs7W3, 2, "X(b3,b5,ns7) -> X(b3,b5,ns7)/w3 is the quotient by the involution w3"},
      {kB3B5E7, kNs7, 2, "G(e7) has index 2 in Cns+(7), giving a degree-2 map X(b3,b5,e7) -> X(b3,b5,ns7) over Q"},
  };
  FinitenessVerdict current = report.curves[2].verdict;
  for (const auto& map : report.covers) {
    current = propagate_over_cover(current, map);
    report.propagated.push_back(current);
  }
  return report;
}

GonalitySandwich gonality_sandwich_X0_105(const NewformSet& set) {
  GonalitySandwich s;
  const Int g = genus_X0(105, set);
  const Int gq = genus_al_quotient(105, set, ALSubgroup::from_divisors(105, {35}));
  // Curated: X0(105)/w35 is a smooth plane quartic (non-hyperelliptic genus 3),
  // so its gonality is exactly 3 and a rational cusp gives a degree-3 map over Q.
  const Int quotient_gonality = 3;
  s.steps.push_back("g(X0(105)) = " + std::to_string(g) + ", g(X0(105)/w35) = " + std::to_string(gq));
  s.steps.push_back("curated: X0(105)/w35 is non-hyperelliptic of genus 3, gonality 3");

  const Int min_free = min_nonfactoring_degree(g, gq);
  for (Int d = 1;; ++d) {
    if (d % 2 != 0) {
      const auto cert = no_degree_d_map_certificate(g, gq, d);
      if (cert) {
        s.steps.push_back("d = " + std::to_string(d) + ": odd and < " + std::to_string(cert.min_nonfactoring) +
                          ", no map");
        continue;
      }
    } else if (d < min_free && d / 2 < quotient_gonality) {
      s.steps.push_back("d = " + std::to_string(d) + ": must factor through X0(105)/w35 as a degree-" +
                        std::to_string(d / 2) + " map, impossible below gonality 3");
      continue;
    }
    s.lower = d;
    s.steps.push_back("d = " + std::to_string(d) + ": not excluded");
    break;
  }
  s.upper = 2 * quotient_gonality;
  s.steps.push_back("upper bound " + std::to_string(s.upper) +
                    ": projection from a rational cusp on the plane quartic, composed with the double cover");
  return s;
}

}  // namespace modcurve
