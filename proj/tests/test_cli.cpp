#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "modcurve/cli.hpp"
#include "modcurve/report.hpp"

using namespace modcurve;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(MODCURVE_SOURCE_DIR "/tests/golden/" + name, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli_report") {

TEST_CASE("golden tables") {
  for (const auto& t : table_names()) {
    for (const char* fmt : {"md", "tsv", "json"}) {
      CAPTURE(t);
      CAPTURE(fmt);
      const auto r = run({"tables", t, "--format", fmt});
      CHECK(r.code == 0);
      CHECK(r.out == golden(t + "." + fmt));
    }
  }
}

TEST_CASE("golden verdict report") {
  const auto r = run({"verdict", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out == golden("verdict.json"));
  CHECK(run({"verdict"}).out == golden("verdict.md"));
}

TEST_CASE("index") {
  const auto r = run({"index", "b3,b5,b7", "--format", "tsv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("b3,b5,b7\t192\t975/512 ~ 1.9043\t2\t2\t2") != std::string::npos);
  CHECK(run({"index", "s3,b5,e7", "--format", "tsv"}).out.find("\t1512\t") != std::string::npos);
  CHECK(run({"index", "b3", "--format", "tsv"}).out.find("b3\t4\t") != std::string::npos);
  const auto bad = run({"index", "b3,x5"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("position 3") != std::string::npos);
}

TEST_CASE("genus and rank") {
  auto value = [](const std::vector<std::string>& args, int col) {
    const auto r = run(args);
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    return j["rows"].back()[col].get<std::string>();
  };
  CHECK(value({"genus", "X0(105)", "--format", "json"}, 1) == "13");
  CHECK(value({"genus", "X0(105)/w35", "--format", "json"}, 1) == "3");
  CHECK(value({"genus", "ns7/w3", "--format", "json"}, 1) == "19");
  CHECK(value({"rank", "X0(105)", "--format", "json"}, 4) == "0");
  CHECK(value({"rank", "ns7", "--format", "json"}, 4) == "11");
  CHECK(value({"rank", "ns7/<w3,w5>", "--format", "json"}, 4) == "6");
}

TEST_CASE("verdict options") {
  const auto ks = run({"verdict", "--format", "tsv"});
  const auto sel = run({"verdict", "--lambda", "selberg", "--format", "tsv"});
  CHECK(ks.code == 0);
  CHECK(ks.out == sel.out);
  const auto six = run({"verdict", "--degree", "6", "--format", "json"});
  CHECK(six.code == 2);
  const auto j = nlohmann::json::parse(six.out);
  CHECK(j["error"]["kind"] == "data");
  CHECK(j["error"]["message"].get<std::string>().find("degree-6 map") != std::string::npos);
}

TEST_CASE("report round trip through verify") {
  const auto rep = run({"verdict", "--format", "json"});
  REQUIRE(rep.code == 0);
  const auto ok = verify_report(rep.out);
  CHECK(ok.ok());
  CHECK(ok.checked == 14);

  auto j = nlohmann::json::parse(rep.out);
  j["curves"][0]["verdict"]["certificate"][0]["lhs"] = 1;
  CHECK_FALSE(verify_report(j.dump()).ok());

  j = nlohmann::json::parse(rep.out);
  j["curves"][2]["verdict"]["result"] = "Inconclusive";
  j["curves"][2]["verdict"]["certificate"][0]["lhs"] = 3;  // and make it consistent
  j["curves"][2]["verdict"]["certificate"][0]["holds"] = false;
  const auto chained = verify_report(j.dump());
  CHECK_FALSE(chained.ok());  // the propagated verdicts no longer have a Finite source

  // through the CLI, from a file
  const std::string path = "verify_roundtrip_test.json";
  std::ofstream(path) << j.dump();
  CHECK(run({"verify", path}).code == 3);
  std::ofstream(path) << rep.out;
  CHECK(run({"verify", path}).code == 0);
  std::ofstream(path) << "[1,2";
  CHECK(run({"verify", path}).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("data selection and exit codes") {
  CHECK(run({"tables", "x0-105", "--fixtures", MODCURVE_SOURCE_DIR "/data/newforms.json"}).out == golden("x0-105.md"));
  CHECK(run({"tables", "x0-105", "--fixtures", "/nonexistent.json"}).code == 2);
  CHECK(run({"tables", "a9"}).code == 2);
  CHECK(run({"genus", "X(b3,b5,e7)"}).code == 2);
  CHECK(run({"forms", "105"}).out.find("6 forms") != std::string::npos);
  CHECK(run({}).code == 1);
  CHECK(run({"--help"}).code == 0);

  // remote mode with nothing reachable and offline: falls back to bundled data
  setenv("MODCURVE_OFFLINE", "1", 1);
  setenv("MODCURVE_LMFDB_URL", "http://127.0.0.1:9", 1);
  unsetenv("MODCURVE_CACHE_DIR");
  CHECK(run({"--remote", "genus", "ns7"}).out.find("37") != std::string::npos);
  unsetenv("MODCURVE_OFFLINE");
  const auto net = run({"--remote", "forms", "15"});
  CHECK(net.code == 4);
  unsetenv("MODCURVE_LMFDB_URL");
}

}
