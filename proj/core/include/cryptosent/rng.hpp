#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace cryptosent {

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a64(std::string_view s);

/// Per-stage seed derivation: splitmix64(master ^ fnv1a64(tag)).
/// Changing one stage's tag or seed never perturbs another stage's stream.
std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view tag);

/// Deterministic pseudo-random stream (splitmix64 counter mode). All draws
/// are defined by explicit integer arithmetic so results are identical
/// across platforms and standard library versions.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  /// Uniform in [0, n). n must be > 0.
  std::uint64_t next_below(std::uint64_t n);

  /// Uniform in [0, 1) with 53-bit resolution.
  double next_unit();

  /// Uniform in [lo, hi).
  double next_uniform(double lo, double hi);

  /// Standard normal via Box-Muller.
  double next_normal();

  /// In-place Fisher-Yates shuffle of indices [0, n).
  void shuffle_indices(std::vector<std::size_t>& idx);

  /// k distinct values sampled uniformly from [0, n), in sampling order.
  std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace cryptosent
