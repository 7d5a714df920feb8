#include "modcurve/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "modcurve/curve_spec.hpp"
#include "modcurve/errors.hpp"
#include "modcurve/lmfdb_client.hpp"
#include "modcurve/report.hpp"

namespace modcurve {

namespace {

struct Options {
  std::string fixtures;
  bool remote = false;
  std::string format = "md";
  std::string spec;
  std::string which;
  std::string lambda = "kim-sarnak";
  Int degree = 5;
  Int level = 0;
  std::string report_path = "-";
};

// Levels whose newforms cover every curve the CLI knows about.
constexpr Int kAmbientLevels[] = {315, 735};

NewformSet load_data(const Options& o) {
  if (!o.fixtures.empty()) return load_fixture_file(o.fixtures);
  if (!o.remote) return bundled_fixtures();
  LmfdbClient client(RemoteConfig::from_env());
  NewformSet set;
  for (Int n : kAmbientLevels) set = set.merged_with(client.fetch_level_dividing(n));
  return set;
}

std::string kind_name(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Data: return "data";
    case ErrorKind::Certificate: return "certificate";
    case ErrorKind::Network: return "network";
  }
  return "error";
}

Table forms_table(const NewformSet& set, Int n) {
  Table t;
  t.id = "forms";
  t.title = "Newforms of weight 2, trivial character, level dividing " + std::to_string(n);
  t.columns = {{"f"}, {"level"}, {"dim A_f"}, {"analytic rank", true}, {"Atkin-Lehner signs", true}};
  for (const auto& f : forms_of_level_dividing(set, n)) {
    std::string signs;
    for (const auto& [p, s] : f.fricke_signs) signs += (signs.empty() ? "" : " ") + std::to_string(p) + ":" + (s > 0 ? "+" : "-");
    t.rows.push_back({f.label, std::to_string(f.level), std::to_string(f.hecke_degree),
                      std::to_string(f.analytic_rank), signs});
  }
  t.notes = {std::to_string(t.rows.size()) + " forms"};
  return t;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Index, genus, rank and finiteness certificates for modular curves of level 105-735"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--fixtures", o.fixtures, "Newform fixture JSON file (default: bundled data)");
  app.add_flag("--remote", o.remote,
               "Fetch newform data from the LMFDB API (MODCURVE_LMFDB_URL, MODCURVE_CACHE_DIR, MODCURVE_OFFLINE)");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"md", "markdown", "tsv", "json"}));

  auto* index = app.add_subcommand("index", "Index and gonality lower bounds of a level structure, e.g. s3,b5,e7");
  index->add_option("spec", o.spec)->required();
  auto* genus = app.add_subcommand("genus", "Genus of a curve, e.g. X0(105)/w35 or ns7/w3");
  genus->add_option("curve", o.spec)->required();
  auto* rank = app.add_subcommand("rank", "Mordell-Weil rank of the Jacobian with per-factor breakdown");
  rank->add_option("curve", o.spec)->required();
  auto* verdict = app.add_subcommand("verdict", "Finiteness of degree-d points with certificates");
  verdict->add_option("--degree", o.degree, "Degree d of the points");
  verdict->add_option("--lambda", o.lambda, "Spectral constant: kim-sarnak, selberg, lrs or a rational");
  auto* tables = app.add_subcommand("tables", "Render a table: levels, x0-105, x0-315, ns7, ns7-w3");
  tables->add_option("which", o.which)->required();
  auto* forms = app.add_subcommand("forms", "List newforms of level dividing N");
  forms->add_option("level", o.level)->required()->check(CLI::PositiveNumber);
  auto* verify = app.add_subcommand("verify", "Re-check the certificates of a JSON verdict report");
  verify->add_option("report", o.report_path, "Report file, '-' for stdin");

  std::vector<std::string> argv_store = {"modcurve"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  const Format fmt = parse_format(o.format);
  try {
    if (*verify) {
      std::string text;
      if (o.report_path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
      } else {
        std::ifstream in(o.report_path, std::ios::binary);
        if (!in) throw DataError("cannot read " + o.report_path);
        text.assign(std::istreambuf_iterator<char>(in), {});
      }
      const auto res = verify_report(text);
      for (const auto& f : res.failures) err << "certificate failure: " << f << "\n";
      if (!res.ok()) {
        if (res.checked == 0) err << "no verdicts found\n";
        return static_cast<int>(ErrorKind::Certificate);
      }
      out << "verified " << res.checked << " verdicts\n";
      return 0;
    }
    if (*index) {
      out << render(index_table(o.spec, parse_level_spec(o.spec)), fmt);
      return 0;
    }
    if (*tables) {
      const auto set = load_data(o);
      out << render(table_by_name(o.which, set), fmt);
      return 0;
    }
    if (*forms) {
      const auto set = load_data(o);
      out << render(forms_table(set, o.level), fmt);
      return 0;
    }
    if (*genus || *rank) {
      const auto spec = parse_curve_spec(o.spec);
      const auto set = load_data(o);
      const auto curve = resolve_curve(spec, set);
      out << render(*genus ? genus_table(curve) : rank_table(curve), fmt);
      return 0;
    }
    if (*verdict) {
      const auto c = SpectralConstant::parse(o.lambda);
      const auto set = load_data(o);
      out << render(run_pipeline(set, c, o.degree), fmt);
      return 0;
    }
  } catch (const Error& e) {
    if (fmt == Format::Json) {
      out << render_error(kind_name(e), e.what(), fmt);
    }
    err << "error (" << kind_name(e) << "): " << e.what() << "\n";
    return e.exit_code();
  }
  return 1;
}

}  // namespace modcurve
