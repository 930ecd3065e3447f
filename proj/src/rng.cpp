#include "phantom/rng.hpp"

#include "phantom/error.hpp"

namespace phantom {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

std::string draw(std::size_t n, std::string_view alphabet, DeterministicRng& rng) {
  if (n == 0) throw PreconditionError("random string length must be >= 1");
  std::string out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(alphabet[rng.below(alphabet.size())]);
  return out;
}

constexpr std::string_view kUpper = "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
constexpr std::string_view kBase64Url = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789-_";
constexpr std::string_view kBase64 = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
constexpr std::string_view kAlnum = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";
constexpr std::string_view kDigits = "0123456789";
constexpr std::string_view kHex = "0123456789abcdef";

}  // namespace

DeterministicRng::DeterministicRng(std::uint64_t seed) {
  for (auto& word : state_) word = splitmix64(seed);
}

std::uint64_t DeterministicRng::next_u64() {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

std::uint64_t DeterministicRng::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("DeterministicRng::below requires bound > 0");
  // Lemire's multiply-shift with rejection of the biased low region.
  auto product = static_cast<unsigned __int128>(next_u64()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<unsigned __int128>(next_u64()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

std::int64_t DeterministicRng::between(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw PreconditionError("DeterministicRng::between requires lo <= hi");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(below(span));
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

DeterministicRng derive_stream(std::uint64_t master_seed, std::span<const std::string> labels) {
  if (labels.empty()) throw PreconditionError("derive_stream requires at least one label");
  std::uint64_t state = master_seed;
  for (const auto& label : labels) {
    std::uint64_t mixed = state ^ fnv1a64(label);
    state = splitmix64(mixed);
  }
  return DeterministicRng(state);
}

std::string rand_upper(std::size_t n, DeterministicRng& rng) { return draw(n, kUpper, rng); }
std::string rand_base64url(std::size_t n, DeterministicRng& rng) { return draw(n, kBase64Url, rng); }
std::string rand_base64(std::size_t n, DeterministicRng& rng) { return draw(n, kBase64, rng); }
std::string rand_alnum(std::size_t n, DeterministicRng& rng) { return draw(n, kAlnum, rng); }
std::string rand_digits(std::size_t n, DeterministicRng& rng) { return draw(n, kDigits, rng); }
std::string rand_hex(std::size_t n, DeterministicRng& rng) { return draw(n, kHex, rng); }

}  // namespace phantom
