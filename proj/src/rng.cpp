#include "qss/rng.hpp"

#include <stdexcept>

namespace qss {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

// SplitMix64 finalizer (Steele, Lea, Flood 2014).
std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed) : key_(mix(seed + kGolden)), ctr_(0) {}

RngStream RngStream::split(std::string_view label) const {
  return RngStream(mix(key_ ^ mix(fnv1a(label) + kGolden)), 0);
}

RngStream RngStream::split(std::uint64_t index) const {
  return RngStream(mix(key_ ^ mix((index + 1) * kGolden)), 0);
}

std::uint64_t RngStream::next_u64() { return mix(key_ + ++ctr_ * kGolden); }

double RngStream::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::next_below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("next_below: n must be positive");
  // Lemire's multiply-shift with rejection of the biased window.
  std::uint64_t x = next_u64();
  __uint128_t m = static_cast<__uint128_t>(x) * n;
  auto lo = static_cast<std::uint64_t>(m);
  if (lo < n) {
    std::uint64_t threshold = -n % n;
    while (lo < threshold) {
      x = next_u64();
      m = static_cast<__uint128_t>(x) * n;
      lo = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

bool RngStream::next_bool(double p_true) { return next_double() < p_true; }

std::vector<std::size_t> RngStream::sample_without_replacement(std::size_t n,
                                                               std::size_t k) {
  if (k > n) throw std::invalid_argument("sample_without_replacement: k > n");
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  // Partial Fisher-Yates: only the first k positions need to be settled.
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = i + static_cast<std::size_t>(next_below(n - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  return idx;
}

}  // namespace qss
