#pragma once

// Presentation layer for the CLI: tables in markdown / TSV / JSON, the
// finiteness report, and re-verification of a serialized report.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "modcurve/curve_spec.hpp"
#include "modcurve/finiteness.hpp"

namespace modcurve {

enum class Format { Markdown, Tsv, Json };

/// "md" / "markdown", "tsv", "json"; DataError otherwise.
Format parse_format(std::string_view s);

struct Column {
  std::string name;
  bool input = false;  // values come from the newform data, not computed here
};

struct Table {
  std::string id;
  std::string title;
  std::vector<Column> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
};

std::string render(const Table& t, Format f);

/// Index, genus and gonality bounds of the five level structures.
Table table_levels(const NewformSet& set);
/// Forms of level dividing 105 with multiplicities in J0(105).
Table table_x0_105(const NewformSet& set);
/// Forms of level dividing 315 with multiplicities in J0(315) and in the w9 = +1 part.
Table table_x0_315(const NewformSet& set);
/// Multiplicities in X(b3,b5,s7), X0(15), X0(105) and X(b3,b5,ns7).
Table table_ns7(const NewformSet& set);
/// Factors of Jac X(b3,b5,ns7)/w3.
Table table_ns7_w3(const NewformSet& set);
/// By id: levels, x0-105, x0-315, ns7, ns7-w3.
Table table_by_name(std::string_view which, const NewformSet& set);
std::vector<std::string> table_names();

/// One row: index and gonality bounds under every named constant.
Table index_table(std::string_view spec_text, const LevelStructure& ls);
Table genus_table(const ResolvedCurve& c);
/// Per-factor rank contributions; the total is in the notes and last row.
Table rank_table(const ResolvedCurve& c);

nlohmann::ordered_json to_json(const FinitenessVerdict& v);
FinitenessVerdict verdict_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const PipelineReport& r);
std::string render(const PipelineReport& r, Format f);

/// Error payload for --format json.
std::string render_error(const std::string& kind, const std::string& message, Format f);

struct VerifyOutcome {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty() && checked > 0; }
};

/// Re-evaluates every predicate of a JSON report (as produced by
/// to_json(PipelineReport)) and checks each stored result and "holds" flag,
/// and that every propagated verdict starts from a Finite one.
/// Malformed input throws DataError.
VerifyOutcome verify_report(std::string_view json_text);

}  // namespace modcurve
