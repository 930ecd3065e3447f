#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "phantom/config.hpp"
#include "phantom/error.hpp"

using namespace phantom;

TEST_SUITE("config") {
  TEST_CASE("empty document yields defaults") {
    const auto c = parse_config("{}");
    CHECK(c.seed == 42);
    CHECK(c.replicates == 1);
    CHECK(c.comparisons == 8);
    CHECK(c.evaluator.weights.w2 == 0.30);
    CHECK(c.evaluator.human.threshold == 0.55);
    CHECK(c.scanning.weights.lambda1 == 0.40);
    CHECK(c.composite.lambda_exp == 0.6);
    CHECK(c.ideal_zone.tau_b == 0.70);
    CHECK(c.generation.aws_key_id_random_chars == 17);
  }

  TEST_CASE("partial override") {
    const auto c = parse_config(R"({"seed": 7, "scanners": {"weights": {"lambda1": 0.5, "lambda2": 0.25, "lambda3": 0.25},
      "entropy_rule": "spread_is_anomalous"}, "believability": {"human": {"threshold": 0.5}}})");
    CHECK(c.seed == 7);
    CHECK(c.scanning.weights.lambda1 == 0.5);
    CHECK(c.scanning.params.entropy_rule == EntropyRule::SpreadIsAnomalous);
    CHECK(c.evaluator.human.threshold == 0.5);
    CHECK(c.evaluator.weights.w1 == 0.20);
  }

  TEST_CASE("red flags override reaches both evaluator and scanners") {
    const auto c = parse_config(R"({"red_flags": ["a1","b2","c3","d4","e5","f6","g7","h8","i9"]})");
    CHECK(c.scanning.flags.flags().front() == "a1");
    CHECK(c.evaluator.flags == c.scanning.flags);
    CHECK_THROWS_AS(parse_config(R"({"red_flags": ["a"]})"), ValidationError);
  }

  TEST_CASE("render round-trips") {
    ExperimentConfig c;
    c.seed = 99;
    c.threads = 3;
    c.scanning.params.ml_base = 0.7;
    const auto text = render_config(c);
    CHECK(render_config(parse_config(text)) == text);
  }

  TEST_CASE("errors") {
    try {
      parse_config(R"({"scanners": {"bogus": 1}})");
      FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
      CHECK(e.field() == "scanners.bogus");
    }
    try {
      parse_config("{\n\"seed\": 1,\n}");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_config(R"({"seed": "x"})"), ParseError);
    CHECK_THROWS_AS(parse_config(R"({"replicates": 0})"), ValidationError);
    CHECK_THROWS_AS(parse_config(R"({"believability": {"weights": {"w1": 0.5}}})"), ValidationError);
    CHECK_THROWS_AS(parse_config(R"({"generation": {"aws_key_id_random_chars": 20}})"), ValidationError);
    CHECK_THROWS_AS(parse_config("[]"), ParseError);
    CHECK_THROWS_AS(load_config_file("/nonexistent/phantom.json"), IoError);
  }

  TEST_CASE("shipped example config is valid") {
    const auto c = load_config_file(std::filesystem::path(PHANTOM_SOURCE_DIR) / "docs" / "config.example.json");
    CHECK(c.seed == 42);
  }
}
