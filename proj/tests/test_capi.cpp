#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "resolventlab.h"

using nlohmann::json;

namespace {

struct Str {
  char* s = nullptr;
  ~Str() { rl_string_free(s); }
  json parsed() const { return json::parse(std::string(s ? s : "null")); }
};

constexpr const char* kIdentityGraph =
    R"({"dim": 1, "pairs": [{"x": [0], "u": [0]}, {"x": [1], "u": [1]}]})";

}  // namespace

TEST_CASE("version and default tolerance") {
  CHECK(std::string(rl_version()) == "0.1.0");
  unsetenv("RESOLVENT_LAB_TOL");
  CHECK(rl_default_tolerance() == doctest::Approx(1e-9));
  setenv("RESOLVENT_LAB_TOL", "1e-6", 1);
  CHECK(rl_default_tolerance() == doctest::Approx(1e-6));
  unsetenv("RESOLVENT_LAB_TOL");
}

TEST_CASE("graph handles: parse, inspect, serialize") {
  rl_graph* g = nullptr;
  REQUIRE(rl_graph_parse_json(kIdentityGraph, &g) == RL_OK);
  CHECK(rl_graph_dim(g) == 1);
  CHECK(rl_graph_pairs(g) == 2);

  Str round;
  REQUIRE(rl_graph_to_json(g, &round.s) == RL_OK);
  rl_graph* g2 = nullptr;
  REQUIRE(rl_graph_parse_json(round.s, &g2) == RL_OK);
  CHECK(rl_graph_pairs(g2) == 2);
  rl_graph_free(g2);
  rl_graph_free(g);

  rl_graph* bad = nullptr;
  CHECK(rl_graph_parse_json("{\"dim\": 1, \"pairs\": [", &bad) == RL_ERR_PARSE);
  CHECK(std::strlen(rl_last_error()) > 0);
  CHECK(rl_graph_parse_json(R"({"dim": 2, "pairs": [{"x": [1], "u": [1, 2]}]})", &bad) ==
        RL_ERR_DIMENSION);
  // non-finite numbers cannot enter through JSON: out-of-range literals are
  // rejected by the parser itself
  CHECK(rl_graph_parse_json(R"({"dim": 1, "pairs": [{"x": [1e999], "u": [0]}]})", &bad) ==
        RL_ERR_PARSE);
}

TEST_CASE("graph certification through the C surface") {
  rl_graph* g = nullptr;
  REQUIRE(rl_graph_parse_json(kIdentityGraph, &g) == RL_OK);

  Str out;
  int passed = -1;
  REQUIRE(rl_graph_certify(g, "rho-comonotone", 1.0, 0.0, &out.s, &passed) == RL_OK);
  CHECK(passed == 1);
  const json j = out.parsed();
  CHECK(j["property"] == "rho_comonotone");
  CHECK(j["passed"] == true);
  CHECK(j["samples_used"] == 2);
  CHECK(j.contains("witness"));

  Str out2;
  REQUIRE(rl_graph_certify(g, "rho_monotone", 1.5, 0.0, &out2.s, &passed) == RL_OK);
  CHECK(passed == 0);

  Str out3;
  CHECK(rl_graph_certify(g, "no-such-property", 0.0, 0.0, &out3.s, &passed) == RL_ERR_ARGUMENT);
  rl_graph_free(g);
}

TEST_CASE("matrix classification and the zero-matrix sentinel") {
  rl_matrix* zero = nullptr;
  REQUIRE(rl_matrix_parse_json(R"({"n": 2, "rows": [[0, 0], [0, 0]]})", &zero) == RL_OK);
  CHECK(rl_matrix_dim(zero) == 2);
  Str out;
  REQUIRE(rl_matrix_classify(zero, &out.s) == RL_OK);
  const json j = out.parsed();
  CHECK(j["rho_comono_opt"] == "inf");
  CHECK(j["alpha_conic"].is_null());
  CHECK(j["resolvent_defined"] == true);
  rl_matrix_free(zero);

  rl_matrix* minus = nullptr;
  REQUIRE(rl_matrix_parse_json(R"({"n": 2, "rows": [[-1, 0], [0, -1]]})", &minus) == RL_OK);
  Str out2;
  REQUIRE(rl_matrix_classify(minus, &out2.s) == RL_OK);
  const json j2 = out2.parsed();
  CHECK(j2["rho_mono_opt"] == doctest::Approx(-1.0));
  CHECK(j2["resolvent_defined"] == false);
  rl_matrix_free(minus);

  rl_matrix* bad = nullptr;
  CHECK(rl_matrix_parse_json(R"({"n": 2, "rows": [[1, 2]]})", &bad) == RL_ERR_PARSE);
}

TEST_CASE("correspondence report over the C surface") {
  Str matrix_json;
  REQUIRE(rl_family_rotation(0.25, 2, &matrix_json.s) == RL_OK);
  rl_matrix* m = nullptr;
  REQUIRE(rl_matrix_parse_json(matrix_json.s, &m) == RL_OK);

  Str out;
  int ok = 0;
  REQUIRE(rl_matrix_correspond(m, 42, 0.0, &out.s, &ok) == RL_OK);
  CHECK(ok == 1);
  const json j = out.parsed();
  CHECK(j["regime"] == "rho > 0");
  CHECK(j["rho_comono_opt"].get<double>() == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(j["all_claims_pass"] == true);
  CHECK(j["reflected"]["all_agree"] == true);
  CHECK(j["seed"] == 42);
  rl_matrix_free(m);
}

TEST_CASE("prox evaluation and regime errors") {
  Str out;
  REQUIRE(rl_prox_eval("exp", 1.0, 0.5, 1.0, nullptr, &out.s) == RL_OK);
  const json j = out.parsed();
  CHECK(j["point"].get<double>() == doctest::Approx(0.4428544010).epsilon(1e-9));
  CHECK(j["method"] == "closed_form");

  Str out2;
  CHECK(rl_prox_eval("exp", 1.0, 1.5, 1.0, nullptr, &out2.s) == RL_ERR_REGIME);
  CHECK(std::string(rl_last_error()).find("mu") != std::string::npos);

  Str out3;
  CHECK(rl_prox_eval("exp", 1.0, 1.0, -1.0, nullptr, &out3.s) == RL_ERR_DOMAIN);

  Str out4;
  REQUIRE(rl_prox_eval("indicator-quadratic", 1.0, 0.5, -1.0, "R+", &out4.s) == RL_OK);
  CHECK(out4.parsed()["point"].get<double>() == 0.0);

  Str out5;
  CHECK(rl_prox_eval("no-such-family", 1.0, 0.5, 0.0, nullptr, &out5.s) == RL_ERR_ARGUMENT);

  // box spec forms: brackets, infinite bounds, rejects
  Str boxed;
  REQUIRE(rl_prox_eval("indicator-quadratic", 1.0, 0.5, 0.3, "[0, 1]", &boxed.s) == RL_OK);
  CHECK(boxed.parsed()["point"].get<double>() == doctest::Approx(0.6));
  Str half_line;
  REQUIRE(rl_prox_eval("indicator-quadratic", 1.0, 0.5, -2.0, "-inf,0", &half_line.s) == RL_OK);
  CHECK(half_line.parsed()["point"].get<double>() == doctest::Approx(-4.0));
  Str bad_box;
  CHECK(rl_prox_eval("indicator-quadratic", 1.0, 0.5, 0.0, "lo-hi", &bad_box.s) == RL_ERR_PARSE);
  Str flipped;
  CHECK(rl_prox_eval("indicator-quadratic", 1.0, 0.5, 0.0, "2,1", &flipped.s) ==
        RL_ERR_ARGUMENT);
}

TEST_CASE("proximal point and KM over the C surface") {
  Str csv, summary;
  REQUIRE(rl_proximal_point("exp", 0.2, 0.1, nullptr, 3.0, 200, 1e-8, &csv.s, &summary.s) ==
          RL_OK);
  const json j = summary.parsed();
  CHECK(j["status"] == "converged");
  CHECK(j["limit"][0].get<double>() == doctest::Approx(2.5426413).epsilon(1e-6));
  CHECK(std::string(csv.s).rfind("iter,x_0,residual", 0) == 0);
  CHECK(std::string(csv.s).find("# status=converged") != std::string::npos);

  Str matrix_json;
  REQUIRE(rl_family_rotation(0.25, 2, &matrix_json.s) == RL_OK);
  rl_matrix* m = nullptr;
  REQUIRE(rl_matrix_parse_json(matrix_json.s, &m) == RL_OK);
  const double x0[2] = {1.0, -1.0};
  Str csv2, summary2;
  REQUIRE(rl_km_resolvent(m, x0, 2, 1.0, 500, 1e-10, &csv2.s, &summary2.s) == RL_OK);
  CHECK(summary2.parsed()["status"] == "converged");

  CHECK(rl_km_resolvent(m, x0, 1, 1.0, 500, 1e-10, nullptr, nullptr) == RL_ERR_DIMENSION);
  rl_matrix_free(m);
}

TEST_CASE("family generators over the C surface") {
  Str odd;
  CHECK(rl_family_rotation(0.25, 3, &odd.s) == RL_ERR_DIMENSION);

  Str info;
  REQUIRE(rl_family_rotation_info(0.75, 2, &info.s) == RL_OK);
  const json j = info.parsed();
  CHECK(j["rho_mono"].get<double>() == doctest::Approx(-0.6));
  CHECK(j["rho_comono"].get<double>() == doctest::Approx(-1.0 / 3.0));

  Str zero_info;
  REQUIRE(rl_family_rotation_info(0.0, 2, &zero_info.s) == RL_OK);
  CHECK(zero_info.parsed()["rho_comono"] == "inf");

  Str graph;
  REQUIRE(rl_family_rotation_graph(0.75, 2, 60, 7, &graph.s) == RL_OK);
  rl_graph* g = nullptr;
  REQUIRE(rl_graph_parse_json(graph.s, &g) == RL_OK);
  CHECK(rl_graph_pairs(g) == 60);
  int passed = -1;
  Str rep;
  REQUIRE(rl_graph_certify(g, "rho-comonotone", -1.0 / 3.0, 0.0, &rep.s, &passed) == RL_OK);
  CHECK(passed == 1);
  rl_graph_free(g);

  Str proj;
  REQUIRE(rl_family_projection(0.5, 2, 1, &proj.s) == RL_OK);
  CHECK(proj.parsed()["A"] == "normal-cone");
  Str proj2;
  REQUIRE(rl_family_projection(2.0, 2, 1, &proj2.s) == RL_OK);
  CHECK(proj2.parsed()["A"][1][1].get<double>() == doctest::Approx(-4.0 / 3.0));

  Str cex;
  REQUIRE(rl_family_counterexample_graph(1.0, 0.0, 1.0, 0, 31, 9, &cex.s) == RL_OK);
  rl_graph* cg = nullptr;
  REQUIRE(rl_graph_parse_json(cex.s, &cg) == RL_OK);
  Str sv;
  REQUIRE(rl_graph_certify(cg, "resolvent-single-valued", 0.0, 0.0, &sv.s, &passed) == RL_OK);
  CHECK(passed == 0);
  CHECK(sv.parsed().contains("witness"));
  rl_graph_free(cg);
}
