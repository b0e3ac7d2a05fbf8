#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "qdotinfo/io.hpp"
#include "support/random_params.hpp"

using namespace qdotinfo;
using qdotinfo::testing::random_params;

TEST_CASE("params JSON round-trips every field") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 50; ++i) {
    const SystemParams original = random_params(rng);
    const SystemParams decoded = params_from_json(params_to_json(original));
    CHECK(decoded == original);
  }
}

TEST_CASE("params JSON uses the exact documented keys") {
  std::mt19937_64 rng(42);
  const std::string text = params_to_json(random_params(rng));
  for (const auto& name : param_names()) {
    CHECK(text.find('"' + name + '"') != std::string::npos);
  }
}

TEST_CASE("unknown keys are rejected") {
  std::mt19937_64 rng(43);
  std::string text = params_to_json(random_params(rng));
  text.insert(text.rfind('}'), ",\"extra\": 1.0");
  CHECK_THROWS_AS(params_from_json(text), std::invalid_argument);
}

TEST_CASE("missing keys are rejected") {
  CHECK_THROWS_AS(params_from_json("{\"eps_x\": 1.0}"), std::invalid_argument);
  CHECK_THROWS_AS(params_from_json("{}"), std::invalid_argument);
}

TEST_CASE("non-numeric values and malformed documents are rejected") {
  std::mt19937_64 rng(44);
  std::string text = params_to_json(random_params(rng));
  auto broken = text;
  broken.replace(broken.find(':') + 1, 0, " \"oops\", \"ignored\":");
  CHECK_THROWS_AS(params_from_json("[1, 2]"), std::invalid_argument);
  CHECK_THROWS_AS(params_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(
      params_from_json(R"({"eps_x": "1.0", "eps_y": 1, "u": 0, "mu_d": 0,
        "mu_h": 1, "mu_l": 0, "t_d": 1, "t_s": 1, "gamma_d": 1,
        "gamma_h0": 1, "gamma_h1": 1, "gamma_l0": 1, "gamma_l1": 1})"),
      std::invalid_argument);
}

TEST_CASE("load_params_file reports unreadable paths") {
  CHECK_THROWS_AS(load_params_file("/nonexistent/params.json"), std::runtime_error);
}
