#include "spinten/claims.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "spinten/clifford.hpp"
#include "spinten/fields.hpp"
#include "spinten/serialize.hpp"

using namespace spinten;
using nlohmann::ordered_json;

namespace {

RunConfig base(const std::string& sub) {
  RunConfig cfg;
  cfg.subcommand = sub;
  cfg.seed = 5;
  return cfg;
}

const ClaimReport* find_claim(const RunReport& r, const std::string& id) {
  for (const auto& c : r.claims)
    if (c.id == id) return &c;
  return nullptr;
}

std::vector<std::vector<mpq_class>> pure_span_basis(std::uint64_t seed) {
  const RationalField qq;
  std::mt19937_64 rng(seed);
  std::vector<std::vector<mpq_class>> basis;
  for (int s = 0; s < 6; ++s) {
    Matrix<RationalField> skew(5, 5, qq);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j) {
        const long val = static_cast<long>(rng() % 7) - 3;
        skew.at(i, j) = mpq_class(val);
        skew.at(j, i) = mpq_class(-val);
      }
    basis.push_back(pure_spinor(qq, skew, Parity::even).x);
  }
  return basis;
}

}  // namespace

TEST_CASE("plane candidates parse from both JSON shapes with exact rationals") {
  const std::string object_form = R"({"basis": [
    [1, "2", "-3", "4/6", 0,0,0,0,0,0,0,0,0,0,0,0],
    [0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0],
    [0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0],
    [0,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0],
    [0,0,0,0,1,0,0,0,0,0,0,0,0,0,0,0],
    [0,0,0,0,0,1,0,0,0,0,0,0,0,0,0,0]]})";
  const auto rows = parse_plane_candidate(object_form);
  REQUIRE(rows.size() == 6);
  REQUIRE(rows[0].size() == 16);
  CHECK(rows[0][1] == 2);
  CHECK(rows[0][2] == -3);
  CHECK(rows[0][3] == mpq_class(2, 3));  // canonicalized from "4/6"

  const std::string bare = R"([[1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0],
    [0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0],
    [0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0],
    [0,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0],
    [0,0,0,0,1,0,0,0,0,0,0,0,0,0,0,0],
    [0,0,0,0,0,1,0,0,0,0,0,0,0,0,0,0]])";
  CHECK(parse_plane_candidate(bare).size() == 6);
}

TEST_CASE("plane candidate defects are named") {
  CHECK_THROWS_AS(parse_plane_candidate("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_plane_candidate("{\"rows\": []}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_plane_candidate("[[1,2],[3]]"), std::invalid_argument);
  const std::string short_row = R"([[1],[1],[1],[1],[1],[1]])";
  CHECK_THROWS_AS(parse_plane_candidate(short_row), std::invalid_argument);
  std::string bad_entry = R"([[true,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0],
    [0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0],[0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0],
    [0,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0],[0,0,0,0,1,0,0,0,0,0,0,0,0,0,0,0],
    [0,0,0,0,0,1,0,0,0,0,0,0,0,0,0,0]])";
  CHECK_THROWS_AS(parse_plane_candidate(bad_entry), std::invalid_argument);
  std::string zero_den = bad_entry;
  zero_den.replace(zero_den.find("true"), 4, "\"1/0\"");
  CHECK_THROWS_AS(parse_plane_candidate(zero_den), std::invalid_argument);
  std::string garbled = bad_entry;
  garbled.replace(garbled.find("true"), 4, "\"x+y\"");
  CHECK_THROWS_AS(parse_plane_candidate(garbled), std::invalid_argument);
}

TEST_CASE("plane candidates round-trip through the writer") {
  auto basis = pure_span_basis(7);
  const auto text = plane_candidate_to_json(basis);
  const auto back = parse_plane_candidate(text);
  CHECK(back == basis);
}

TEST_CASE("strip_wall_clock removes every timing field, nested included") {
  const std::string doc = R"({"wall_clock_ms":"5","claims":[{"id":"x","wall_clock_ms":"7",
    "artifacts":{"wall_clock_ms":"9","keep":"1"}}]})";
  const auto stripped = strip_wall_clock(doc);
  CHECK(stripped.find("wall_clock_ms") == std::string::npos);
  CHECK(stripped.find("\"keep\"") != std::string::npos);
  CHECK_THROWS_AS(strip_wall_clock("{oops"), std::invalid_argument);
}

TEST_CASE("run rejects malformed configurations as usage errors") {
  CHECK_THROWS_AS(run(base("frobnicate")), std::invalid_argument);

  auto cfg = base("forms");
  cfg.trials = 0;
  CHECK_THROWS_AS(run(cfg), std::invalid_argument);

  cfg = base("audit-z-models");
  cfg.primes = {mpz_class(4)};
  CHECK_THROWS_AS(run(cfg), std::invalid_argument);
  cfg.primes = {mpz_class(17)};
  CHECK_THROWS_AS(run(cfg), std::invalid_argument);

  cfg = base("count");
  cfg.field = FieldSpec::rationals();
  cfg.field_given = true;
  CHECK_THROWS_AS(run(cfg), std::invalid_argument);
  cfg.field = FieldSpec::prime(5);
  CHECK_THROWS_AS(run(cfg), std::invalid_argument);

  cfg = base("verify-plane");
  CHECK_THROWS_AS(run(cfg), std::invalid_argument);

  cfg = base("duality-test");
  cfg.primes = {mpz_class(2)};
  CHECK_THROWS_AS(run(cfg), std::invalid_argument);

  cfg = base("derive");
  cfg.jobs = 0;
  CHECK_THROWS_AS(run(cfg), std::invalid_argument);
}

TEST_CASE("derive runs both derivation claims to a passing report") {
  const auto report = run(base("derive"));
  CHECK(report.schema == "spinten-report/1");
  CHECK(report.status == "pass");
  CHECK(exit_code(report) == 0);
  REQUIRE(report.claims.size() == 2);
  CHECK(report.claims[0].id == "quadric-derivation");
  CHECK(report.claims[1].id == "quartic-relation");

  const auto art = ordered_json::parse(report.claims[0].artifacts);
  REQUIRE(art["parities"].size() == 2);
  for (const auto& p : art["parities"]) {
    CHECK(p["interpolated_dimension"] == "10");
    CHECK(p["clifford_span_match"] == true);
    CHECK(p["mod2_rank"] == "10");
  }
}

TEST_CASE("count narrows to the requested field and reports the exact total") {
  auto cfg = base("count");
  cfg.field = FieldSpec::prime(2);
  cfg.field_given = true;
  const auto report = run(cfg);
  REQUIRE(report.claims.size() == 1);
  const auto* claim = find_claim(report, "sigma-count-f2");
  REQUIRE(claim != nullptr);
  CHECK(claim->status == "pass");
  const auto art = ordered_json::parse(claim->artifacts);
  CHECK(art["formula"] == "2295");
  REQUIRE(art["parities"].size() == 2);
  CHECK(art["parities"][0]["count"] == "2295");
  CHECK(art["parities"][1]["count"] == "2295");
  CHECK(art["parities"][0]["min_tangent_rank"] == "5");
}

TEST_CASE("duality and f2-lemma subcommands pass with overridden trials") {
  auto cfg = base("duality-test");
  cfg.trials = 25;
  const auto duality = run(cfg);
  CHECK(duality.status == "pass");
  const auto art = ordered_json::parse(duality.claims[0].artifacts);
  CHECK(art["p"] == "101");
  CHECK(art["trials"] == "25");
  CHECK(art["tangent_hits"] == "25");
  CHECK(art["control_hits"] == "0");

  cfg = base("f2-lemma");
  cfg.trials = 150;
  const auto lemma = run(cfg);
  CHECK(lemma.status == "pass");
  const auto* bound = find_claim(lemma, "f2-secant-bound");
  REQUIRE(bound != nullptr);
  CHECK(ordered_json::parse(bound->artifacts)["trials"] == "150");
}

TEST_CASE("reports are byte-identical for identical configs modulo wall clock") {
  auto cfg = base("forms");
  cfg.trials = 60;
  const auto a = strip_wall_clock(report_to_json(run(cfg)));
  const auto b = strip_wall_clock(report_to_json(run(cfg)));
  CHECK(a == b);
  CHECK(a.find("wall_clock_ms") == std::string::npos);
  // The untouched report still carries the timing fields.
  CHECK(report_to_json(run(cfg)).find("wall_clock_ms") != std::string::npos);
}

TEST_CASE("verify-plane maps a pure-spinor span to an inconclusive exit") {
  const auto path = std::filesystem::temp_directory_path() / "spinten_test_purespan.json";
  std::ofstream(path) << plane_candidate_to_json(pure_span_basis(7));
  auto cfg = base("verify-plane");
  cfg.plane_file = path.string();
  const auto report = run(cfg);
  std::filesystem::remove(path);
  REQUIRE(report.claims.size() == 1);
  CHECK(report.claims[0].status == "inconclusive");
  CHECK(report.status == "inconclusive");
  CHECK(exit_code(report) == 2);
  const auto art = ordered_json::parse(report.claims[0].artifacts);
  CHECK(art["verdict"] == "missing-rational-points");
  CHECK(art["degree"] == "12");
  CHECK(art["rational_points_found"] == "6");

  cfg.plane_file = (std::filesystem::temp_directory_path() / "spinten_missing.json").string();
  CHECK_THROWS_AS(run(cfg), std::invalid_argument);
}

TEST_CASE("exit codes rank fail over inconclusive over pass") {
  RunReport r;
  r.status = "pass";
  CHECK(exit_code(r) == 0);
  r.status = "inconclusive";
  CHECK(exit_code(r) == 2);
  r.status = "fail";
  CHECK(exit_code(r) == 1);
  CHECK(known_subcommands().size() == 8);
}
