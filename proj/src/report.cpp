#include "modcurve/report.hpp"

#include <algorithm>
#include <sstream>

#include "modcurve/errors.hpp"
#include "modcurve/level_arith.hpp"

namespace modcurve {

using nlohmann::ordered_json;

namespace {

const std::vector<SpectralConstant>& named_constants() {
  static const std::vector<SpectralConstant> cs = {SpectralConstant::kim_sarnak(), SpectralConstant::selberg(),
                                                   SpectralConstant::lrs()};
  return cs;
}

std::string header_text(const Column& c) { return c.input ? c.name + " (input)" : c.name; }

std::string sign_cell(const Newform& f, Int p) {
  if (f.level % p != 0) return "";
  const auto s = f.fricke_sign(p);
  return s ? std::to_string(*s) : "?";
}

std::string count(Int v) { return std::to_string(v); }

// "975/512 ~ 1.9043"
std::string bound_cell(const Rational& r) {
  return r.denominator() == 1 ? to_string(r) : to_string(r) + " ~ " + to_decimal(r);
}

std::vector<Column> form_columns(std::vector<Column> middle, bool signs) {
  std::vector<Column> cols = {{"f"}, {"dim A_f"}, {"analytic rank", true}};
  cols.insert(cols.end(), middle.begin(), middle.end());
  if (signs) {
    for (Int p : {3, 5, 7}) cols.push_back({"Fricke sign at " + std::to_string(p), true});
  }
  return cols;
}

std::vector<std::string> form_cells(const Newform& f) {
  return {f.label, count(f.hecke_degree), count(f.analytic_rank)};
}

void add_signs(std::vector<std::string>& row, const Newform& f) {
  for (Int p : {3, 5, 7}) row.push_back(sign_cell(f, p));
}

std::string escape_md(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += '\\';
    out += ch;
  }
  return out;
}

ordered_json predicate_json(const Predicate& p) {
  return {{"name", p.name},       {"lhs", p.lhs},   {"op", to_string(p.op)}, {"rhs", p.rhs},
          {"source", to_string(p.source)}, {"holds", p.holds()}};
}

std::string predicate_text(const Predicate& p) {
  std::string s = (p.holds() ? "  [ok]   " : "  [fail] ") + p.name + ": " + std::to_string(p.lhs) + " " +
                  to_string(p.op) + " " + std::to_string(p.rhs);
  if (p.source == Provenance::Curated) s += "  (curated)";
  return s;
}

}  // namespace

Format parse_format(std::string_view s) {
  if (s == "md" || s == "markdown") return Format::Markdown;
  if (s == "tsv") return Format::Tsv;
  if (s == "json") return Format::Json;
  throw DataError("unknown format '" + std::string(s) + "' (expected md, tsv or json)");
}

std::string render(const Table& t, Format f) {
  std::ostringstream out;
  switch (f) {
    case Format::Json: {
      ordered_json cols = ordered_json::array();
      for (const auto& c : t.columns) cols.push_back({{"name", c.name}, {"input", c.input}});
      ordered_json j = {{"table", t.id}, {"title", t.title}, {"columns", cols}, {"rows", t.rows}, {"notes", t.notes}};
      out << j.dump(2) << "\n";
      break;
    }
    case Format::Tsv:
      for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "\t" : "") << header_text(t.columns[i]);
      out << "\n";
      for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i];
        out << "\n";
      }
      for (const auto& n : t.notes) out << "# " << n << "\n";
      break;
    case Format::Markdown:
      if (!t.title.empty()) out << "### " << t.title << "\n\n";
      out << "|";
      for (const auto& c : t.columns) out << " " << escape_md(header_text(c)) << " |";
      out << "\n|";
      for (std::size_t i = 0; i < t.columns.size(); ++i) out << "---|";
      out << "\n";
      for (const auto& row : t.rows) {
        out << "|";
        for (const auto& cell : row) out << " " << escape_md(cell) << " |";
        out << "\n";
      }
      if (!t.notes.empty()) out << "\n";
      for (const auto& n : t.notes) out << "- " << n << "\n";
      break;
  }
  return out.str();
}

Table table_levels(const NewformSet& set) {
  Table t;
  t.id = "levels";
  t.title = "Level structures, index, genus and gonality lower bounds";
  t.columns = {{"curve"},     {"level at 3"}, {"level at 5"}, {"level at 7"},          {"index"},
               {"genus"},     {"gonality (proved, lambda_1 >= 975/4096)"}, {"gonality (expected, lambda_1 >= 1/4)"}};
  struct Row {
    SubgroupKind k3, k7;
    std::optional<Int> curated_genus;
  };
  using K = SubgroupKind;
  const std::vector<Row> spec = {{K::Borel, K::Borel, {}},
                                 {K::SplitCartanNormalizer, K::Borel, {}},
                                 {K::Borel, K::NonsplitCartanNormalizer, {}},
                                 {K::Borel, K::E7, 73},
                                 {K::SplitCartanNormalizer, K::E7, 153}};
  for (const auto& r : spec) {
    LevelStructure ls;
    ls.set(3, r.k3);
    ls.set(5, K::Borel);
    ls.set(7, r.k7);
    const Int idx = psl2_index(ls);
    std::string name = ls.tags() == "b3,b5,b7" ? "X0(105)" : "X(" + ls.tags() + ")";
    std::string genus;
    if (r.curated_genus) {
      genus = count(*r.curated_genus) + " (input)";
    } else {
      CurveSpec cs;
      cs.level = ls;
      genus = count(resolve_curve(cs, set).genus);
    }
    auto local = [&](Int p) {
      const auto k = ls.at(p);
      switch (k) {
        case K::Borel: return "B(" + count(p) + ")";
        case K::SplitCartanNormalizer: return "Cs+(" + count(p) + ")";
        case K::NonsplitCartanNormalizer: return "Cns+(" + count(p) + ")";
        case K::E7: return std::string("G(e7)");
        case K::Full: break;
      }
      return std::string("GL2");
    };
    t.rows.push_back({name, local(3), local(5), local(7), count(idx), genus,
                      ">= " + bound_cell(gonality_lower_bound(idx, SpectralConstant::kim_sarnak())),
                      ">= " + bound_cell(gonality_lower_bound(idx, SpectralConstant::selberg()))});
  }
  t.notes = {"Bounds are exact rationals lambda_1 * index / 24; decimals are rounded half-up to 4 places.",
             "Every level group contains -I, so the GL2 and PSL2 indices agree.",
             "Genera marked (input) are curated values, not computed here."};
  return t;
}

Table table_x0_105(const NewformSet& set) {
  Table t;
  t.id = "x0-105";
  t.title = "Newforms of level dividing 105";
  t.columns = form_columns({{"mult. in J0(105)"}}, true);
  const auto jac = jacobian_X0(105, set);
  for (const auto& f : forms_of_level_dividing(set, 105)) {
    auto row = form_cells(f);
    row.push_back(count(jac.multiplicity_of(f.label)));
    add_signs(row, f);
    t.rows.push_back(std::move(row));
  }
  t.notes = {"genus X0(105) = " + count(total_dimension(jac)) + ", rank J0(105)(Q) = " +
             count(mordell_weil_rank(jac))};
  return t;
}

Table table_x0_315(const NewformSet& set) {
  Table t;
  t.id = "x0-315";
  t.title = "Newforms of level dividing 315";
  t.columns = form_columns({{"mult. in J0(315)"}, {"mult. in X(s3,b5,b7) = X0(315)/w9"}}, true);
  const auto jac = jacobian_X0(315, set);
  const auto w9 = jacobian_al_quotient(315, set, ALSubgroup::from_divisors(315, {9}));
  for (const auto& f : forms_of_level_dividing(set, 315)) {
    auto row = form_cells(f);
    row.push_back(count(jac.multiplicity_of(f.label)));
    row.push_back(count(w9.multiplicity_of(f.label)));
    add_signs(row, f);
    t.rows.push_back(std::move(row));
  }
  t.notes = {"genus X0(315) = " + count(total_dimension(jac)) + ", genus X0(315)/w9 = " +
             count(total_dimension(w9)) + ", rank Jac(X0(315)/w9)(Q) = " + count(mordell_weil_rank(w9))};
  return t;
}

Table table_ns7(const NewformSet& set) {
  Table t;
  t.id = "ns7";
  t.title = "Multiplicities at level 735 and the non-split Cartan column";
  t.columns = form_columns({{"mult. in X(b3,b5,s7)"}, {"mult. in X0(15)"}, {"mult. in X0(105)"},
                            {"mult. in X(b3,b5,ns7)"}},
                           false);
  Int s7 = 0, x15 = 0, x105 = 0, ns7 = 0;
  for (const auto& r : chen_ns7_rows(set)) {
    if (r.s7 == 0 && r.x0_15 == 0 && r.x0_105 == 0) continue;
    auto row = form_cells(r.form);
    row.push_back(count(r.s7));
    row.push_back(r.at_15 ? count(r.x0_15) : "");
    row.push_back(r.at_105 ? count(r.x0_105) : "");
    row.push_back(count(r.ns7));
    const Int d = r.form.hecke_degree;
    s7 += d * r.s7;
    x15 += d * r.x0_15;
    x105 += d * r.x0_105;
    ns7 += d * r.ns7;
    t.rows.push_back(std::move(row));
  }
  const auto jac = chen_ns7_decomposition(set);
  t.notes = {"ns7 column = X(b3,b5,s7) + X0(15) - X0(105)",
             "genera: X(b3,b5,s7) " + count(s7) + ", X0(15) " + count(x15) + ", X0(105) " + count(x105) +
                 ", X(b3,b5,ns7) " + count(ns7) + " (" + count(ns7) + " + " + count(x105) + " = " + count(s7) +
                 " + " + count(x15) + ")",
             "rank Jac X(b3,b5,ns7)(Q) = " + count(mordell_weil_rank(jac))};
  return t;
}

Table table_ns7_w3(const NewformSet& set) {
  Table t;
  t.id = "ns7-w3";
  t.title = "Factors of Jac X(b3,b5,ns7)/w3";
  t.columns = form_columns({{"multiplicity"}}, true);
  const auto jac = chen_ns7_decomposition(set, ChenCharacter{{3, 1}});
  for (const auto& fac : jac.factors) {
    auto row = form_cells(fac.form);
    row.push_back(count(fac.multiplicity));
    add_signs(row, fac.form);
    t.rows.push_back(std::move(row));
  }
  t.notes = {"genus " + count(total_dimension(jac)) + ", rank " + count(mordell_weil_rank(jac))};
  return t;
}

std::vector<std::string> table_names() { return {"levels", "x0-105", "x0-315", "ns7", "ns7-w3"}; }

Table table_by_name(std::string_view which, const NewformSet& set) {
  if (which == "levels") return table_levels(set);
  if (which == "x0-105") return table_x0_105(set);
  if (which == "x0-315") return table_x0_315(set);
  if (which == "ns7") return table_ns7(set);
  if (which == "ns7-w3") return table_ns7_w3(set);
  throw DataError("unknown table '" + std::string(which) + "' (expected levels, x0-105, x0-315, ns7 or ns7-w3)");
}

Table index_table(std::string_view spec_text, const LevelStructure& ls) {
  Table t;
  t.id = "index";
  t.columns = {{"level structure"}, {"index"}};
  const Int idx = psl2_index(ls);
  std::vector<std::string> row = {ls.tags().empty() ? std::string(spec_text) : ls.tags(), count(idx)};
  for (const auto& c : named_constants()) {
    t.columns.push_back({"bound " + c.name() + " (" + to_string(c.value()) + ")"});
    t.columns.push_back({"ceil"});
    const auto b = gonality_lower_bound(idx, c);
    row.push_back(bound_cell(b));
    row.push_back(count(ceil(b)));
  }
  t.rows.push_back(std::move(row));
  return t;
}

Table genus_table(const ResolvedCurve& c) {
  Table t;
  t.id = "genus";
  t.columns = {{"curve"}, {"genus"}, {"computed as"}};
  t.rows.push_back({c.name, count(c.genus), c.model});
  return t;
}

Table rank_table(const ResolvedCurve& c) {
  Table t;
  t.id = "rank";
  t.title = "Mordell-Weil rank of Jac " + c.name;
  t.columns = {{"f"}, {"dim A_f"}, {"analytic rank", true}, {"multiplicity"}, {"rank contribution"}};
  const Int total = mordell_weil_rank(c.jacobian);
  for (const auto& fac : c.jacobian.factors) {
    t.rows.push_back({fac.form.label, count(fac.form.hecke_degree), count(fac.form.analytic_rank),
                      count(fac.multiplicity), count(fac.form.analytic_rank * fac.form.hecke_degree * fac.multiplicity)});
  }
  t.rows.push_back({"total", count(total_dimension(c.jacobian)), "", "", count(total)});
  t.notes = {"rank = sum of analytic rank * dim A_f * multiplicity (all analytic ranks <= 1)"};
  return t;
}

ordered_json to_json(const FinitenessVerdict& v) {
  ordered_json cert = ordered_json::array();
  for (const auto& p : v.certificate) cert.push_back(predicate_json(p));
  ordered_json j = {{"curve", v.tag},
                    {"degree", v.degree},
                    {"result", to_string(v.result)},
                    {"rule", to_string(v.rule)},
                    {"certificate", cert},
                    {"curated", v.curated}};
  if (!v.derived_from.empty()) j["derived_from"] = v.derived_from;
  return j;
}

FinitenessVerdict verdict_from_json(const nlohmann::json& j) {
  try {
    FinitenessVerdict v;
    v.tag = j.at("curve").get<std::string>();
    v.degree = j.at("degree").get<Int>();
    v.result = parse_result(j.at("result").get<std::string>());
    v.rule = parse_rule(j.at("rule").get<std::string>());
    for (const auto& p : j.at("certificate")) {
      v.certificate.push_back({p.at("name").get<std::string>(), p.at("lhs").get<Int>(),
                               parse_cmp(p.at("op").get<std::string>()), p.at("rhs").get<Int>(),
                               parse_provenance(p.at("source").get<std::string>())});
    }
    v.curated = j.at("curated").get<std::vector<std::string>>();
    if (j.contains("derived_from")) v.derived_from = j.at("derived_from").get<std::string>();
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed verdict: ") + e.what());
  }
}

ordered_json to_json(const PipelineReport& r) {
  ordered_json curves = ordered_json::array();
  for (const auto& c : r.curves) {
    ordered_json attempts = ordered_json::array();
    for (const auto& a : c.attempts) attempts.push_back(to_json(a));
    ordered_json facts = {{"genus", c.facts.genus}};
    if (c.facts.integer_gonality_lb) {
      facts["gonality_lower_bound"] = *c.facts.integer_gonality_lb;
      facts["gonality_source"] = c.facts.gonality_source;
    }
    if (c.facts.double_cover_quotient_genus) {
      facts["double_cover"] = c.facts.double_cover_name;
      facts["double_cover_genus"] = *c.facts.double_cover_quotient_genus;
    }
    curves.push_back({{"curve", c.facts.tag}, {"facts", facts}, {"verdict", to_json(c.verdict)}, {"attempts", attempts}});
  }
  ordered_json covers = ordered_json::array();
  for (const auto& m : r.covers) {
    covers.push_back({{"cover", m.cover}, {"quotient", m.quotient}, {"degree", m.degree}, {"provenance", m.provenance}});
  }
  ordered_json propagated = ordered_json::array();
  for (const auto& v : r.propagated) propagated.push_back(to_json(v));
  const auto finite = std::count_if(r.curves.begin(), r.curves.end(), [](const auto& c) { return c.verdict.finite(); });
  const auto lifted =
      std::count_if(r.propagated.begin(), r.propagated.end(), [](const auto& v) { return v.finite(); });
  return {{"degree", r.degree},
          {"spectral_constant", r.spectral_constant},
          {"curated", r.curated},
          {"curves", curves},
          {"covers", covers},
          {"propagated", propagated},
          {"summary", {{"finite", finite}, {"propagated_finite", lifted}, {"all_finite", r.all_finite()}}}};
}

std::string render(const PipelineReport& r, Format f) {
  if (f == Format::Json) return to_json(r).dump(2) + "\n";
  if (f == Format::Tsv) {
    std::ostringstream out;
    out << "curve\tdegree\tresult\trule\tderived_from\n";
    for (const auto& c : r.curves) {
      out << c.verdict.tag << "\t" << c.verdict.degree << "\t" << to_string(c.verdict.result) << "\t"
          << to_string(c.verdict.rule) << "\t\n";
    }
    for (const auto& v : r.propagated) {
      out << v.tag << "\t" << v.degree << "\t" << to_string(v.result) << "\t" << to_string(v.rule) << "\t"
          << v.derived_from << "\n";
    }
    return out.str();
  }
  std::ostringstream out;
  out << "## Finiteness of degree-" << r.degree << " points\n\n";
  out << "spectral constant: " << r.spectral_constant << "\n\n";
  for (const auto& c : r.curves) {
    out << "### " << c.facts.tag << ": " << to_string(c.verdict.result) << " by " << to_string(c.verdict.rule)
        << "\n\n";
    out << "genus " << c.facts.genus;
    if (c.facts.integer_gonality_lb) out << ", gonality >= " << *c.facts.integer_gonality_lb;
    out << "\n\n```\n";
    for (const auto& a : c.attempts) {
      out << to_string(a.rule) << ": " << to_string(a.result) << "\n";
      for (const auto& p : a.certificate) out << predicate_text(p) << "\n";
    }
    out << "```\n";
    for (const auto& s : c.verdict.curated) out << "- curated: " << s << "\n";
    out << "\n";
  }
  for (const auto& v : r.propagated) {
    out << "### " << v.tag << ": " << to_string(v.result) << " by " << to_string(v.rule) << " from "
        << v.derived_from << "\n\n```\n";
    for (const auto& p : v.certificate) out << predicate_text(p) << "\n";
    out << "```\n";
    for (const auto& s : v.curated) out << "- curated: " << s << "\n";
    out << "\n";
  }
  out << "### Curated inputs\n\n";
  for (const auto& s : r.curated) out << "- " << s << "\n";
  out << "\nall finite: " << (r.all_finite() ? "yes" : "no") << "\n";
  return out.str();
}

std::string render_error(const std::string& kind, const std::string& message, Format f) {
  if (f == Format::Json) {
    return ordered_json{{"error", {{"kind", kind}, {"message", message}}}}.dump(2) + "\n";
  }
  return "error (" + kind + "): " + message + "\n";
}

VerifyOutcome verify_report(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(std::string("report is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("curves") || !doc.contains("propagated")) {
    throw DataError("report lacks 'curves' or 'propagated'");
  }
  VerifyOutcome out;
  std::map<std::string, bool> finite_by_curve;

  auto check = [&](const nlohmann::json& j, const std::string& where) {
    const auto v = verdict_from_json(j);
    ++out.checked;
    if (!recheck(v)) out.failures.push_back(where + " " + v.tag + ": stored result " + to_string(v.result) +
                                            " does not follow from its certificate");
    const auto& preds = j.at("certificate");
    for (std::size_t i = 0; i < v.certificate.size(); ++i) {
      if (preds[i].contains("holds") && preds[i].at("holds").get<bool>() != v.certificate[i].holds()) {
        out.failures.push_back(where + " " + v.tag + ": predicate '" + v.certificate[i].name + "' is mislabeled");
      }
    }
    return v;
  };

  try {
    for (const auto& c : doc.at("curves")) {
      const auto v = check(c.at("verdict"), "verdict");
      finite_by_curve[v.tag] = v.finite();
      for (const auto& a : c.at("attempts")) check(a, "attempt");
    }
    for (const auto& p : doc.at("propagated")) {
      const auto v = check(p, "propagated");
      if (v.finite()) {
        const auto it = finite_by_curve.find(v.derived_from);
        if (it == finite_by_curve.end() || !it->second) {
          out.failures.push_back("propagated " + v.tag + ": source " + v.derived_from + " is not Finite in the report");
        }
      }
      finite_by_curve[v.tag] = v.finite();
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed report: ") + e.what());
  }
  return out;
}

}  // namespace modcurve
