#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace qss {

/// Counter-based splittable random stream.
///
/// Every stochastic operation in the library takes an explicit stream, so a
/// run is reproducible bit-for-bit from its seed.  Child streams obtained via
/// split() are decorrelated from the parent and from each other; splitting
/// does not advance the parent, so the layout of draws in one component never
/// shifts the draws seen by another.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  /// Derive an independent child stream keyed by a label.
  RngStream split(std::string_view label) const;
  RngStream split(std::uint64_t index) const;

  std::uint64_t next_u64();

  /// Uniform in [0, 1), 53 random bits.
  double next_double();

  /// Uniform integer in [0, n), unbiased. Requires n > 0.
  std::uint64_t next_below(std::uint64_t n);

  bool next_bool(double p_true);

  /// Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  /// First k entries of a shuffled copy of {0, ..., n-1}: a uniform sample
  /// without replacement.
  std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

 private:
  RngStream(std::uint64_t key, std::uint64_t ctr) : key_(key), ctr_(ctr) {}

  std::uint64_t key_;
  std::uint64_t ctr_;
};

}  // namespace qss
