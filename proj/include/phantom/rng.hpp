#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace phantom {

// xoshiro256** seeded through SplitMix64. The stream depends only on the
// master seed and the label list, never on platform or draw order elsewhere.
class DeterministicRng {
 public:
  static constexpr std::string_view algorithm = "xoshiro256** / splitmix64 / fnv1a-64 labels";

  explicit DeterministicRng(std::uint64_t seed);

  std::uint64_t next_u64();
  // Unbiased integer in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound);
  // Integer in [lo, hi] inclusive.
  std::int64_t between(std::int64_t lo, std::int64_t hi);

  template <typename T>
  const T& pick(std::span<const T> items) {
    return items[static_cast<std::size_t>(below(items.size()))];
  }
  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return pick(std::span<const T>(items));
  }

 private:
  std::array<std::uint64_t, 4> state_{};
};

std::uint64_t fnv1a64(std::string_view bytes);

// Independent stream for (master_seed, labels). labels must be non-empty.
DeterministicRng derive_stream(std::uint64_t master_seed, std::span<const std::string> labels);

// Random strings over fixed alphabets. n must be >= 1.
std::string rand_upper(std::size_t n, DeterministicRng& rng);      // [A-Z0-9]
std::string rand_base64url(std::size_t n, DeterministicRng& rng);  // [A-Za-z0-9_-], unpadded
std::string rand_base64(std::size_t n, DeterministicRng& rng);     // [A-Za-z0-9+/], unpadded
std::string rand_alnum(std::size_t n, DeterministicRng& rng);      // [A-Za-z0-9]
std::string rand_digits(std::size_t n, DeterministicRng& rng);     // [0-9]
std::string rand_hex(std::size_t n, DeterministicRng& rng);        // [0-9a-f]

}  // namespace phantom
