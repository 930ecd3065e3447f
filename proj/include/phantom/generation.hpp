#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "phantom/profile.hpp"
#include "phantom/rng.hpp"
#include "phantom/tokens.hpp"

namespace phantom {

struct GenerationOptions {
  // Random characters after "AKIA". 17 matches the evaluator's regex; real
  // AWS key IDs use 16.
  std::size_t aws_key_id_random_chars = 17;
};

void validate(const GenerationOptions& options);

// RNG stream labels for one experiment cell. replicate 0 has no extra label,
// so a single-instance run and a CLI `generate` call share streams.
std::vector<std::string> stream_labels(const OrgProfile& profile, TokenType type, GenerationMethod method,
                                       std::size_t replicate = 0);

// Renders one token. Only rng is mutated.
HoneyToken generate(const OrgProfile& profile, TokenType type, GenerationMethod method, DeterministicRng& rng,
                    const GenerationOptions& options = {});

// Derives the stream from (seed, stream_labels(...)) and generates.
HoneyToken generate_seeded(const OrgProfile& profile, TokenType type, GenerationMethod method,
                           std::uint64_t seed, const GenerationOptions& options = {}, std::size_t replicate = 0);

// Substrings of the profile that count as organisational context: domain,
// short_name, every service, every team, git_org and the JWT issuer host.
// Deduplicated, lowercase, in that order.
std::vector<std::string> org_terms(const OrgProfile& profile);

}  // namespace phantom
