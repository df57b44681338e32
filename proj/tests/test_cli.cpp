#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "afd/cli.hpp"

using nlohmann::json;

TEST_SUITE_BEGIN("cli");

static json kz_algebra() {
  return json{{"carrier", "group"}, {"group", "Z^d"}, {"d", 1}};
}

TEST_CASE("folner-scan emits the closed-form ratios") {
  json cfg = {{"command", "folner-scan"}, {"algebra", kz_algebra()}, {"n_max", 10}};
  auto res = afd::cli::run(cfg);
  CHECK(res.invariants_ok);
  REQUIRE(res.lines.size() == 10);
  for (int n = 1; n <= 10; ++n) {
    json rec = json::parse(res.lines[n - 1]);
    CHECK(rec["n"] == n);
    CHECK(rec["ratio"] == "2/" + std::to_string(2 * n + 1));
  }
}

TEST_CASE("reports are deterministic") {
  json cfg = {{"command", "rr-estimate"},
              {"algebra", kz_algebra()},
              {"p", "1 + t"},
              {"a", "t^-1"},
              {"n_max", 4}};
  auto a = afd::cli::run(cfg);
  auto b = afd::cli::run(cfg);
  CHECK(a.lines == b.lines);

  std::ostringstream s1, s2;
  CHECK(afd::cli::run_to_stream(cfg, s1) == 0);
  CHECK(afd::cli::run_to_stream(cfg, s2) == 0);
  // bodies (all lines but the trailing summary) must be byte-identical
  auto body = [](const std::string& text) {
    return text.substr(0, text.rfind("{\"summary\""));
  };
  CHECK(body(s1.str()) == body(s2.str()));
  CHECK(s1.str().find("\"wall_ms\"") != std::string::npos);
}

TEST_CASE("almostrep-build reports the k[Z] numbers") {
  json cfg = {{"command", "almostrep-build"}, {"algebra", kz_algebra()}, {"n", 5}};
  auto res = afd::cli::run(cfg);
  REQUIRE(res.lines.size() == 1);
  json rec = json::parse(res.lines[0]);
  CHECK(rec["rep"]["V_dim"] == 11);
  CHECK(rec["rep"]["core_dim"] == 9);
  CHECK(rec["rep"]["defect"] == "2/11");
  CHECK(res.invariants_ok);
}

TEST_CASE("degenerate configs exit with status 2 and a diagnostic") {
  json cfg = {{"command", "almostrep-build"},
              {"algebra", kz_algebra()},
              {"Q", json::array()}};  // dim Q = 0
  std::ostringstream out;
  CHECK(afd::cli::run_to_stream(cfg, out) == 2);
  CHECK(out.str().find("error") != std::string::npos);

  std::ostringstream out2;
  CHECK(afd::cli::run_to_stream(json{{"command", "no-such"}}, out2) == 2);
}

TEST_CASE("paradox command certifies the tree and reports the cycle") {
  json cfg = {{"command", "paradox"}, {"graph", "tree:3,5"}, {"K", 1}};
  auto res = afd::cli::run(cfg);
  REQUIRE(res.lines.size() == 1);
  json rec = json::parse(res.lines[0]);
  CHECK(rec["pair"]["success"] == true);
  CHECK(rec["pair"]["deficiency"] == 0);
  CHECK(rec["identities_pass"] == true);
  CHECK(rec["orientation"] == "AtA=I");
  CHECK(rec["non_ibn_witness"]["WU_is_identity"] == true);
  CHECK(rec["non_ibn_witness"]["UW_is_identity"] == true);
  CHECK(res.invariants_ok);

  json cyc = {{"command", "paradox"}, {"graph", "cycle:16"}, {"K", 1}};
  auto cres = afd::cli::run(cyc);
  json crec = json::parse(cres.lines[0]);
  CHECK(crec["pair"]["success"] == false);
  CHECK(!crec["pair"].contains("non_ibn_witness"));
  CHECK(cres.invariants_ok);  // identities on the matched region still hold
}

TEST_CASE("audit-rank randomized batch") {
  json cfg = {{"command", "audit-rank"},
              {"algebra", kz_algebra()},
              {"n", 5},
              {"random_audits", {{"count", 5}, {"m", 2}, {"n", 1}}},
              {"seed", 7}};
  auto res = afd::cli::run(cfg);
  REQUIRE(res.lines.size() == 5);
  for (const auto& line : res.lines) {
    json rec = json::parse(line);
    CHECK(rec["range_bound_ok"] == true);
    CHECK(rec["contradiction"] == true);  // 2*9 > 1*11
  }
  CHECK(res.invariants_ok);
}

TEST_CASE("commutator-check batch") {
  json cfg = {{"command", "commutator-check"},
              {"random", {{"count", 30}, {"min_size", 2}, {"max_size", 8}}},
              {"seed", 3},
              {"n", 5}};
  auto res = afd::cli::run(cfg);
  REQUIRE(res.lines.size() == 1);
  json rec = json::parse(res.lines[0]);
  CHECK(rec["random_passes"] == 30);
  CHECK(rec["structured_kz"]["rank_commutator"] == 2);
  CHECK(rec["structured_kz"]["bound"] == 2);
  CHECK(res.invariants_ok);
}

TEST_CASE("rr-estimate with the ideal-property check") {
  json cfg = {{"command", "rr-estimate"},
              {"algebra", kz_algebra()},
              {"p", "t"},
              {"a", "t^-1"},
              {"n_max", 5}};
  auto res = afd::cli::run(cfg);
  CHECK(res.invariants_ok);
  REQUIRE(res.lines.size() == 10);  // 5 series records + 5 monotonicity records
  json first = json::parse(res.lines[0]);
  CHECK(first["command"] == "rr-estimate");
  json mono = json::parse(res.lines[5]);
  CHECK(mono["command"] == "rr-monotonicity");
  CHECK(mono["pass"] == true);
}

TEST_CASE("emit_rep serializes the representation") {
  json cfg = {{"command", "almostrep-build"},
              {"algebra", kz_algebra()},
              {"n", 5},
              {"emit_rep", true}};
  auto res = afd::cli::run(cfg);
  json rec = json::parse(res.lines[0]);
  const json& ser = rec["serialized"];
  CHECK(ser["field"]["type"] == "gfp");
  CHECK(ser["field"]["p"] == 32003);
  CHECK(ser["V_dim"] == 11);
  CHECK(ser["defect"] == "2/11");
  REQUIRE(ser["L_basis"].size() == 3);
  REQUIRE(ser["images"].size() == 3);
  CHECK(ser["images"][0].size() == 11);
  CHECK(ser["images"][0][0].size() == 11);
  CHECK(ser["core"].size() == 9);
}

TEST_CASE("paradox K scan and graph files") {
  json cfg = {{"command", "paradox"}, {"graph", "tree:3,4"}, {"K_max", 2}};
  auto res = afd::cli::run(cfg);
  REQUIRE(res.lines.size() == 2);
  CHECK(json::parse(res.lines[0])["pair"]["K"] == 1);
  CHECK(json::parse(res.lines[1])["pair"]["K"] == 2);

  // a graph given as a file path
  {
    std::ofstream out("cli_graph.txt");
    out << "3 3\n0 1\n1 2\n2 0\n";
  }
  json file_cfg = {{"command", "paradox"}, {"graph", "cli_graph.txt"}, {"K", 1}};
  auto fres = afd::cli::run(file_cfg);
  json frec = json::parse(fres.lines[0]);
  CHECK(frec["pair"]["interior_size"] == 3);
  CHECK(frec["pair"]["success"] == false);
  std::remove("cli_graph.txt");
}

TEST_CASE("field override changes the report field") {
  json cfg = {{"command", "almostrep-build"},
              {"algebra", kz_algebra()},
              {"n", 3},
              {"field", "gfp:101"}};
  auto res = afd::cli::run(cfg);
  CHECK(res.invariants_ok);
  json rec = json::parse(res.lines[0]);
  CHECK(rec["rep"]["defect"] == "2/7");

  cfg["field"] = "rational";
  auto res2 = afd::cli::run(cfg);
  CHECK(res2.invariants_ok);
}

TEST_SUITE_END();
