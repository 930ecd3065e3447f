#include <doctest.h>

#include <algorithm>
#include <regex>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "phantom/error.hpp"
#include "phantom/rng.hpp"

using namespace phantom;

namespace {

std::vector<std::uint64_t> draws(DeterministicRng rng, int n) {
  std::vector<std::uint64_t> out;
  for (int i = 0; i < n; ++i) out.push_back(rng.next_u64());
  return out;
}

DeterministicRng stream(std::uint64_t seed, std::vector<std::string> labels) { return derive_stream(seed, labels); }

}  // namespace

TEST_SUITE("rng") {
  TEST_CASE("reference splitmix64 vector") {
    oracle::SplitMix64 sm{1234567};
    CHECK(sm.next() == 6457827717110365317ULL);
    CHECK(sm.next() == 3203168211198807973ULL);
  }

  TEST_CASE("generator matches reference xoshiro256**") {
    for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 0xdeadbeefULL}) {
      DeterministicRng rng(seed);
      oracle::Xoshiro256ss ref(seed);
      for (int i = 0; i < 1000; ++i) REQUIRE(rng.next_u64() == ref.next());
    }
  }

  TEST_CASE("fnv1a64 matches the reference") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
    for (const char* s : {"fintech", "AwsKey", "contextual"}) CHECK(fnv1a64(s) == oracle::fnv1a64(s));
  }

  TEST_CASE("derive_stream determinism and independence") {
    const std::vector<std::string> labels = {"fintech", "AwsKey", "contextual"};
    CHECK(draws(stream(42, labels), 100) == draws(stream(42, labels), 100));
    CHECK(stream(42, labels).next_u64() != stream(43, labels).next_u64());
    CHECK(stream(42, {"a"}).next_u64() != stream(42, {"b"}).next_u64());
    CHECK(stream(42, {"a", "b"}).next_u64() != stream(42, {"b", "a"}).next_u64());
    CHECK_THROWS_AS(stream(42, {}), PreconditionError);
  }

  TEST_CASE("bounded draws stay in range and cover it") {
    DeterministicRng rng(7);
    std::vector<int> seen(10, 0);
    for (int i = 0; i < 5000; ++i) {
      const auto v = rng.below(10);
      REQUIRE(v < 10);
      ++seen[v];
    }
    for (int c : seen) CHECK(c > 350);
    for (int i = 0; i < 1000; ++i) {
      const auto v = rng.between(-3, 3);
      REQUIRE(v >= -3);
      REQUIRE(v <= 3);
    }
    CHECK(rng.between(5, 5) == 5);
    CHECK_THROWS_AS(rng.below(0), PreconditionError);
    CHECK_THROWS_AS(rng.between(2, 1), PreconditionError);
  }

  TEST_CASE("random string alphabets") {
    DeterministicRng rng(42);
    CHECK(std::regex_match(rand_upper(17, rng), std::regex("[A-Z0-9]{17}")));
    const auto b64u = rand_base64url(43, rng);
    CHECK(b64u.size() == 43);
    CHECK(b64u.find('=') == std::string::npos);
    CHECK(std::regex_match(b64u, std::regex("[A-Za-z0-9_-]{43}")));
    CHECK(std::regex_match(rand_base64(40, rng), std::regex("[A-Za-z0-9+/]{40}")));
    CHECK(std::regex_match(rand_alnum(24, rng), std::regex("[A-Za-z0-9]{24}")));
    CHECK(std::regex_match(rand_digits(1, rng), std::regex("[0-9]")));
    CHECK(std::regex_match(rand_hex(64, rng), std::regex("[0-9a-f]{64}")));
    CHECK_THROWS_AS(rand_hex(0, rng), PreconditionError);
  }
}
