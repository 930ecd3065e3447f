#include <doctest.h>

#include <nlohmann/json.hpp>
#include <regex>
#include <set>
#include <string>

#include "oracles.hpp"
#include "phantom/error.hpp"
#include "phantom/generation.hpp"
#include "phantom/scanners.hpp"
#include "phantom/stats.hpp"
#include "phantom/text.hpp"

using namespace phantom;

namespace {

const OrgProfile& fintech() { return builtin_profile("fintech"); }

std::vector<std::string> default_flags() { return RedFlagList().flags(); }

}  // namespace

TEST_SUITE("generation") {
  TEST_CASE("contextual AwsKey for fintech") {
    const auto t = generate_seeded(fintech(), TokenType::AwsKey, GenerationMethod::Contextual, 42);
    CHECK(t.content.find("AKIA") != std::string::npos);
    CHECK(t.content.find("region=us-east-1") != std::string::npos);
    CHECK(std::regex_search(t.content, std::regex("# IAM: payflow_(payments_api|ledger|kyc_service)")));
    CHECK(std::regex_search(t.content, std::regex("AKIA[A-Z0-9]{17}\\b")));
    CHECK(t.id == "payflow/AwsKey/contextual");
    CHECK(t.seed_label == "payflow/AwsKey/contextual");
  }

  TEST_CASE("contextual Jwt claims") {
    const auto t = generate_seeded(fintech(), TokenType::Jwt, GenerationMethod::Contextual, 42);
    std::smatch m;
    REQUIRE(std::regex_search(t.content, m, std::regex("(eyJ[A-Za-z0-9_-]+)\\.([A-Za-z0-9_-]+)\\.([A-Za-z0-9_-]+)")));
    const auto header = text::base64url_decode(m[1].str());
    const auto payload = text::base64url_decode(m[2].str());
    REQUIRE(header.has_value());
    REQUIRE(payload.has_value());
    const auto h = nlohmann::json::parse(*header);
    const auto p = nlohmann::json::parse(*payload);
    CHECK(h.at("alg") == "HS256");
    CHECK(p.at("iss") == fintech().jwt_issuer);
    CHECK(p.at("sub") == "svc_payflow");
    CHECK(p.at("aud") == fintech().jwt_audience);
    CHECK(p.at("exp").get<long long>() > p.at("iat").get<long long>());
  }

  TEST_CASE("template tokens carry red flags and no context") {
    for (const auto& profile : builtin_profiles()) {
      for (auto type : kAllTokenTypes) {
        const auto t = generate_seeded(profile, type, GenerationMethod::Template, 42);
        CAPTURE(t.id);
        CHECK(oracle::count_distinct_ci(t.content, default_flags()) >= 1);
        CHECK(oracle::count_distinct_ci(t.content, org_terms(profile)) == 0);
      }
    }
    const auto aws = generate_seeded(fintech(), TokenType::AwsKey, GenerationMethod::Template, 42);
    CHECK(std::regex_search(aws.content, std::regex("AKIA[A-Z0-9]{17}\\b")));
  }

  TEST_CASE("contextual tokens carry context and no red flags") {
    for (const auto& profile : builtin_profiles()) {
      for (auto type : kAllTokenTypes) {
        const auto t = generate_seeded(profile, type, GenerationMethod::Contextual, 42);
        CAPTURE(t.id);
        CHECK(oracle::count_distinct_ci(t.content, org_terms(profile)) >= 3);
        CHECK(oracle::count_distinct_ci(t.content, default_flags()) == 0);
      }
    }
  }

  TEST_CASE("content is non-empty, newline-normalised and ids are unique") {
    std::set<std::string> ids;
    for (const auto& profile : builtin_profiles()) {
      for (auto type : kAllTokenTypes) {
        for (auto method : kAllMethods) {
          const auto t = generate_seeded(profile, type, method, 42);
          CHECK_FALSE(t.content.empty());
          CHECK(t.content.find('\r') == std::string::npos);
          CHECK(ids.insert(t.id).second);
        }
      }
    }
    CHECK(ids.size() == 64);
  }

  TEST_CASE("generation is a pure function of profile, type, method and rng state") {
    for (auto type : kAllTokenTypes) {
      for (auto method : kAllMethods) {
        auto a = derive_stream(9, std::vector<std::string>{"x"});
        auto b = derive_stream(9, std::vector<std::string>{"x"});
        CHECK(generate(fintech(), type, method, a).content == generate(fintech(), type, method, b).content);
      }
    }
    const auto s42 = generate_seeded(fintech(), TokenType::EnvFile, GenerationMethod::Contextual, 42);
    const auto s43 = generate_seeded(fintech(), TokenType::EnvFile, GenerationMethod::Contextual, 43);
    CHECK(s42.content != s43.content);
  }

  TEST_CASE("replicates use their own streams") {
    const auto r0 = generate_seeded(fintech(), TokenType::ApiKey, GenerationMethod::Contextual, 42, {}, 0);
    const auto r1 = generate_seeded(fintech(), TokenType::ApiKey, GenerationMethod::Contextual, 42, {}, 1);
    CHECK(r0.content != r1.content);
    CHECK(r1.id == "payflow/ApiKey/contextual#1");
    CHECK(stream_labels(fintech(), TokenType::ApiKey, GenerationMethod::Contextual, 1).back() == "r1");
  }

  TEST_CASE("AWS key id length option") {
    GenerationOptions sixteen{16};
    const auto t = generate_seeded(fintech(), TokenType::AwsKey, GenerationMethod::Contextual, 42, sixteen);
    CHECK(std::regex_search(t.content, std::regex("AKIA[A-Z0-9]{16}\\n")));
    CHECK_THROWS_AS(validate(GenerationOptions{20}), ValidationError);
  }

  TEST_CASE("contextual EnvFile has more entropy variance than the template") {
    for (const auto& profile : builtin_profiles()) {
      const auto ctx = generate_seeded(profile, TokenType::EnvFile, GenerationMethod::Contextual, 42);
      const auto tpl = generate_seeded(profile, TokenType::EnvFile, GenerationMethod::Template, 42);
      const auto vc = text::extract_values(ctx.content);
      const auto vt = text::extract_values(tpl.content);
      CHECK(stats::entropy_variance(stats::entropy_profile(vc)) > stats::entropy_variance(stats::entropy_profile(vt)));
    }
  }

  TEST_CASE("org_terms") {
    const auto terms = org_terms(fintech());
    CHECK(terms.front() == "payflow.io");
    CHECK(std::find(terms.begin(), terms.end(), "auth.payflow.io") != terms.end());
    CHECK(std::find(terms.begin(), terms.end(), "risk_ops") != terms.end());
    std::set<std::string> unique(terms.begin(), terms.end());
    CHECK(unique.size() == terms.size());
  }
}
