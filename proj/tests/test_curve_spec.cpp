#include "doctest.h"
#include "modcurve/curve_spec.hpp"
#include "modcurve/errors.hpp"

using namespace modcurve;

namespace {

Int genus(const char* s) { return resolve_curve(parse_curve_spec(s), bundled_fixtures()).genus; }

std::string parse_error(const char* s) {
  try {
    parse_curve_spec(s);
  } catch (const DataError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("curve_spec") {

TEST_CASE("level specs") {
  CHECK(parse_level_spec("b3,b5,b7").tags() == "b3,b5,b7");
  CHECK(parse_level_spec("X(s3,b5,e7)").tags() == "s3,b5,e7");
  CHECK(parse_level_spec("X0(105)").tags() == "b3,b5,b7");
  CHECK(parse_level_spec("ns7").tags() == "ns7");
  CHECK_THROWS_AS(parse_level_spec("X0(315)"), DataError);
  CHECK_THROWS_AS(parse_level_spec("b3,e5"), DataError);
  CHECK_THROWS_AS(parse_level_spec("b4"), DataError);
}

TEST_CASE("errors carry the position") {
  CHECK(parse_error("X(b3,b5").find("position 7") != std::string::npos);
  CHECK(parse_error("b3,q5").find("position 3") != std::string::npos);
  CHECK(parse_error("X0(105)/v35").find("position 8") != std::string::npos);
  CHECK(parse_error("b3,b3").find("position 3") != std::string::npos);
}

TEST_CASE("names") {
  CHECK(curve_name(parse_curve_spec("X0(315)/<w9,w35>")) == "X0(315)/<w9,w35>");
  CHECK(curve_name(parse_curve_spec("ns7/w3")) == "X(b3,b5,ns7)/w3");
  CHECK(curve_name(parse_curve_spec("s3,b5,b7")) == "X(s3,b5,b7)");
}

TEST_CASE("genera through the grammar") {
  CHECK(genus("X0(105)") == 13);
  CHECK(genus("X0(105)/w35") == 3);
  CHECK(genus("X0(315)") == 41);
  CHECK(genus("X0(315)/w9") == 21);
  CHECK(genus("X0(315)/<w9,w35>") == 7);
  CHECK(genus("X(s3,b5,b7)") == 21);
  CHECK(genus("s3,b5,b7/w35") == 7);
  CHECK(genus("ns7") == 37);
  CHECK(genus("ns7/w3") == 19);
  CHECK(genus("ns7/w5") == 16);
  CHECK(genus("ns7/<w3,w5>") == 6);
  CHECK(genus("X(b3,b5,ns7)/<w5,w3>") == 6);
  CHECK(genus("b3,b5") == 1);
  CHECK(genus("X0(1)") == 0);
}

TEST_CASE("w_p shorthand for the full p-part") {
  CHECK(genus("X0(315)/w3") == 21);
  CHECK_THROWS_AS(genus("X0(315)/w27"), DataError);
}

TEST_CASE("unsupported curves") {
  CHECK_THROWS_AS(genus("X(b3,b5,e7)"), DataError);
  CHECK_THROWS_AS(genus("X(ns5)"), DataError);
  CHECK_THROWS_AS(genus("ns7/w7"), DataError);
  CHECK_THROWS_AS(genus("s3,b5,b7/w3"), DataError);  // w9 already divided out
  CHECK_THROWS_AS(genus("X0(105)/w11"), DataError);
  CHECK_THROWS_AS(genus("X0(1001)"), DataError);     // fixture does not cover it
}

}
