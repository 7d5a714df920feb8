#pragma once

// Curve names as the CLI accepts them.
//
//   curve     := alias | levels [ "/" quotient ]
//   alias     := "X0(" N ")" | "ns7"            ("ns7" means X(b3,b5,ns7))
//   levels    := "X(" tags ")" | tags
//   tags      := tag { "," tag }
//   tag       := "b" P | "s" P | "ns" P | "e7"
//   quotient  := "w" Q | "<" "w" Q { "," "w" Q } ">"
//
// Q is a product of full prime-power parts of the level; "w3" is accepted for
// w_9 when the ambient level has 9 || N, as is customary.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modcurve/jacobian.hpp"
#include "modcurve/level_arith.hpp"

namespace modcurve {

struct CurveSpec {
  std::optional<Int> x0_level;  // set for X0(N)
  LevelStructure level;         // set otherwise
  std::vector<Int> quotient;    // Q values in the order written
};

/// Level-structure part only (used by the index command). Accepts tags,
/// "X(tags)", or "X0(N)" with N squarefree. Throws DataError with the
/// offending position.
LevelStructure parse_level_spec(std::string_view text);

CurveSpec parse_curve_spec(std::string_view text);

/// Canonical display name, e.g. "X(s3,b5,b7)/w35", "X0(105)".
std::string curve_name(const CurveSpec& spec);

/// A curve reduced to something the library can compute: an Atkin-Lehner
/// quotient of X0(N), or a slice of X(b3,b5,ns7) via the Chen relation.
struct ResolvedCurve {
  std::string name;
  std::string model;
  JacobianDecomposition jacobian;
  Int genus = 0;
};

/// Throws DataError for curves outside the supported families (e.g. e7).
ResolvedCurve resolve_curve(const CurveSpec& spec, const NewformSet& set);

}  // namespace modcurve
