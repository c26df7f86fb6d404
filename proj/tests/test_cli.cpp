/* Copyright 2026 The torus-zeta Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "torus_zeta/cli.hpp"

using namespace torus_zeta;
using torus_zeta::cli::Json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "torus_zeta");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(TORUS_ZETA_DATA_DIR) + "/" + name; }

std::vector<std::string> strings(const Json& arr) {
  std::vector<std::string> out;
  for (const auto& v : arr) out.push_back(v.get<std::string>());
  return out;
}

std::vector<std::string> nk_values(const Json& report) {
  std::vector<std::string> out;
  for (const auto& v : report["N_k"]) out.push_back(v["value"].get<std::string>());
  return out;
}

Rational frac(const Json& v) { return parse_fraction(v.get<std::string>()); }

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("torus_zeta_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("analyze: periodic points and verdicts of the regression matrices") {
  const Outcome diag = invoke({"analyze", "-i", data("diag_6_2.json"), "--kmax", "6", "--terms", "8"});
  REQUIRE(diag.code == 0);
  const Json r = diag.json();
  CHECK(r["command"] == "analyze");
  CHECK(nk_values(r) == std::vector<std::string>{"q^0", "0", "0", "0", "q^0", "0"});
  CHECK(r["verdict"]["kind"] == "algebraic");
  CHECK(r["verdict"]["rational"] == false);
  CHECK(r["verdict"]["closed_form"]["factors"].size() == 4);
  CHECK(r["series_matches_closed_form"] == true);
  CHECK(r["notes"].size() == 1);

  const Json comp = invoke({"analyze", "-i", data("companion.json"), "--kmax", "4"}).json();
  CHECK(nk_values(comp) == std::vector<std::string>{"q^0", "q^0", "q^2", "q^0"});
  CHECK(comp["verdict"]["kind"] == "transcendental");
  CHECK(comp["verdict"]["boundary_radius"] == "1/2");
  CHECK(comp["verdict"]["witness"] == 1);
  CHECK(comp["spectral"]["unit_nonrou"][0]["n"] == 1);
  CHECK_FALSE(comp.contains("series_matches_closed_form"));

  const Json dt = invoke({"analyze", "-i", data("diag_t6.json"), "--kmax", "4"}).json();
  CHECK(nk_values(dt) == std::vector<std::string>{"q^1", "0", "q^3", "0"});
  CHECK(dt["spectral"]["R"] == 1);
  CHECK(dt["verdict"]["closed_form"]["r"] == "q^1");

  const Json gf4 = invoke({"analyze", "-i", data("gf4.json"), "--kmax", "3"}).json();
  CHECK(gf4["q"] == "4");
  CHECK(gf4["input"]["e"] == 2);
}

TEST_CASE("series: small closed cases") {
  const Json t = invoke({"series", "-i", data("t_gf2.json"), "--terms", "5"}).json();
  CHECK(strings(t["series"]) == std::vector<std::string>{"1/1", "2/1", "4/1", "8/1", "16/1"});
  CHECK(t["closed_form_matches"] == true);

  const Json z = invoke({"series", "-i", data("zero.json"), "--terms", "6"}).json();
  CHECK(strings(z["series"]) == std::vector<std::string>(6, "1/1"));

  const Json id = invoke({"series", "-i", data("identity.json"), "--terms", "4"}).json();
  CHECK(strings(id["series"]) == std::vector<std::string>{"1/1", "0/1", "0/1", "0/1"});

  const Json comp = invoke({"series", "-i", data("companion.json"), "--terms", "6"}).json();
  CHECK(comp["verdict"] == "transcendental");
  CHECK_FALSE(comp.contains("closed_form_series"));
}

TEST_CASE("errors: field names and exit codes") {
  const Outcome bad_p = invoke({"analyze", "-i", data("invalid_p4.json")});
  CHECK(bad_p.code == 2);
  CHECK(bad_p.out.empty());
  CHECK(bad_p.err.find("ValidationError") != std::string::npos);
  CHECK(bad_p.err.find("\"p\"") != std::string::npos);

  const Outcome missing = invoke({"analyze", "-i", temp_file("missing_d.json", R"({"p": 2, "entries": [[[1]]]})")});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("ParseError") != std::string::npos);
  CHECK(missing.err.find("\"d\"") != std::string::npos);

  const Outcome ragged =
      invoke({"analyze", "-i", temp_file("ragged.json", R"({"p": 3, "d": 2, "entries": [[[1], [1]], [[1]]]})")});
  CHECK(ragged.code == 2);
  CHECK(ragged.err.find("entries[1]") != std::string::npos);

  const Outcome reducible = invoke({"analyze", "-i",
                                    temp_file("reducible.json",
                                              R"({"p": 2, "e": 2, "field_modulus": [1, 0, 1], "d": 1, "entries": [[[1]]]})")});
  CHECK(reducible.code == 2);
  CHECK(reducible.err.find("field_modulus") != std::string::npos);

  CHECK(invoke({"analyze", "-i", temp_file("garbage.json", "{not json")}).code == 2);
  CHECK(invoke({"analyze", "-i", data("no_such_file.json")}).code == 2);
  CHECK(invoke({"analyze"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"diagnose", "-i", data("companion.json"), "--kmax", "8", "--hankel-max", "5"}).code == 2);

  CHECK(cli::exit_code_for(Errc::InternalInconsistency) == 3);
  CHECK(cli::exit_code_for(Errc::NonIntegerExponent) == 3);
  CHECK(cli::exit_code_for(Errc::NonPrime) == 2);
  CHECK(cli::exit_code_for(Errc::DegreeMismatch) == 2);
}

TEST_CASE("determinism: identical bytes across runs and thread counts") {
  for (const char* file : {"companion.json", "diag_6_2.json", "gf4.json"}) {
    setenv("TORUS_ZETA_THREADS", "1", 1);
    const Outcome a = invoke({"analyze", "-i", data(file), "--kmax", "40"});
    setenv("TORUS_ZETA_THREADS", "4", 1);
    const Outcome b = invoke({"analyze", "-i", data(file), "--kmax", "40"});
    const Outcome c = invoke({"analyze", "-i", data(file), "--kmax", "40"});
    unsetenv("TORUS_ZETA_THREADS");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(b.out == c.out);
  }
  setenv("TORUS_ZETA_THREADS", "zero", 1);
  CHECK(invoke({"analyze", "-i", data("t_gf2.json")}).code == 2);
  unsetenv("TORUS_ZETA_THREADS");
}

TEST_CASE("input echo is itself a valid input with the same report") {
  for (const char* file : {"companion.json", "diag_6_2.json", "gf4.json", "zero.json"}) {
    const cli::MatrixInput in = cli::load_matrix_input(data(file));
    const cli::MatrixInput again = cli::parse_matrix_input(in.echo);
    CHECK(again.echo == in.echo);
    CHECK(again.A == in.A);
    const std::string echoed = temp_file(std::string("echo_") + file, cli::dump(in.echo));
    const Json r1 = invoke({"analyze", "-i", data(file), "--kmax", "12"}).json();
    const Json r2 = invoke({"analyze", "-i", echoed, "--kmax", "12"}).json();
    CHECK(r1 == r2);
  }
  // Out-of-range integers reduce mod p.
  const cli::MatrixInput wide =
      cli::parse_matrix_input(Json::parse(R"({"p": 7, "d": 1, "entries": [[[-1, 15, 0]]]})"));
  CHECK(wide.echo["entries"] == Json::parse("[[[6, 1]]]"));
}

TEST_CASE("diagnose --lcm: p-adic valuations along the witness orbit") {
  const Json r = invoke({"diagnose", "-i", data("companion.json"), "--kmax", "40", "--lcm"}).json();
  const Json& lcm = r["lcm"];
  CHECK(lcm["witness_order"] == 1);
  REQUIRE(lcm["witness_valuations"].size() == 6);
  for (std::int64_t V = 0; V <= 5; ++V) {
    const Json& row = lcm["witness_valuations"][static_cast<std::size_t>(V)];
    CHECK(row["k"] == (std::int64_t{1} << V));
    CHECK(row["v_p"] == -(std::int64_t{1} << V));
  }
  // The denominators outside S stay far smaller than the full lcm.
  CHECK(Integer(lcm["L_n_outside_S"].get<std::string>()) < Integer(lcm["L_n"].get<std::string>()));

  const Json alg = invoke({"diagnose", "-i", data("diag_6_2.json"), "--kmax", "24", "--lcm"}).json();
  CHECK(alg["lcm"]["L_n"] == "1");
  CHECK(alg["lcm"]["witness_valuations"].empty());
}

TEST_CASE("diagnose --kronecker recovers a generating function for an algebraic window") {
  const Json r = invoke({"diagnose", "-i", data("diag_6_2.json"), "--kmax", "30", "--kronecker"}).json();
  REQUIRE(r["kronecker"]["found"] == true);
  std::vector<Rational> c{Rational(0)};
  for (const auto& v : r["c_k"]) c.push_back(frac(v));
  std::vector<Rational> P, Q;
  for (const auto& v : r["kronecker"]["P"]) P.push_back(frac(v));
  for (const auto& v : r["kronecker"]["Q"]) Q.push_back(frac(v));
  REQUIRE(Q.front() == 1);
  // Q(z) * sum c_k z^k == P(z) on every available coefficient.
  for (std::size_t n = 0; n < c.size(); ++n) {
    Rational acc = 0;
    for (std::size_t j = 0; j < Q.size() && j <= n; ++j) acc += Q[j] * c[n - j];
    CHECK(acc == (n < P.size() ? P[n] : Rational(0)));
  }

  const Json t = invoke({"diagnose", "-i", data("companion.json"), "--kmax", "30", "--kronecker"}).json();
  CHECK(t["kronecker"]["found"] == false);
}

TEST_CASE("diagnose --hankel-max and --exceptional-set") {
  const Json r =
      invoke({"diagnose", "-i", data("t_gf2.json"), "--kmax", "12", "--hankel-max", "4", "--exceptional-set", "16"})
          .json();
  CHECK(r["exceptional_set"]["members"] == Json::parse("[2, 4, 8, 12, 16]"));
  for (const auto& row : r["exceptional_set"]["density"]) CHECK(row["count"] <= row["bound"]);
  REQUIRE(r["hankel"]["determinants"].size() == 5);
  // c_k = 1 for all k >= 1, c_0 = 0: a rank-two window.
  CHECK(r["hankel"]["determinants"][0]["delta"] == "0/1");
  CHECK(r["hankel"]["determinants"][1]["delta"] == "-1/1");
  CHECK(r["hankel"]["determinants"][2]["delta"] == "0/1");
  CHECK(r["hankel"]["polya_decay"].size() == 4);
}

TEST_CASE("window command") {
  const Json r = invoke({"window", "-i", data("window_geometric.json"), "--kronecker", "--hankel-max", "3"}).json();
  CHECK(r["fit"]["r"] == 1);
  CHECK(r["fit"]["charpoly"] == Json::parse(R"(["-1/2", "1/1"])"));
  CHECK(r["kronecker"]["found"] == true);
  CHECK(r["kronecker"]["P"] == Json::parse(R"(["1/1"])"));
  CHECK(r["kronecker"]["Q"] == Json::parse(R"(["1/1", "-1/2"])"));
  CHECK(r["denominators"].back() == "2048");

  const std::string radical = temp_file(
      "radical.json", R"({"p": 2, "s": 2, "coeffs": [["1/1"], ["1/1"], ["0/1", "1/1"], [], []]})");
  const Json rr = invoke({"window", "-i", radical, "--hankel-max", "2"}).json();
  CHECK(rr["field"]["s"] == 2);
  CHECK_FALSE(rr.contains("fit"));
  CHECK(rr["hankel"]["determinants"][0]["delta"] == "1/1");
  CHECK(invoke({"window", "-i", radical, "--kronecker"}).code == 2);
}

TEST_CASE("output file and schema") {
  const auto path = (std::filesystem::temp_directory_path() / "torus_zeta_test_out.json").string();
  const Outcome o = invoke({"series", "-i", data("t_gf2.json"), "--terms", "3", "-o", path});
  CHECK(o.code == 0);
  CHECK(o.out.empty());
  std::ifstream is(path);
  std::stringstream ss;
  ss << is.rdbuf();
  CHECK(ss.str() == invoke({"series", "-i", data("t_gf2.json"), "--terms", "3"}).out);

  const Outcome s = invoke({"--json-schema"});
  CHECK(s.code == 0);
  const Json schema = Json::parse(s.out);
  CHECK(schema["$defs"].contains("analyze"));
  CHECK(schema["$defs"].contains("diagnose"));
}
