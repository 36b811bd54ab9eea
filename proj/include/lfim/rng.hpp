#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace lfim {

// Names one logical random stream. Distinct keys under the same master seed
// yield distinct, effectively independent streams, identical across runs and
// worker counts. Grid-point and replicate parallelism each own one key.
struct StreamKey {
  std::uint64_t master_seed = 0;
  std::string_view purpose;  // short tag: "contour", "calibration", "abc", ...
  std::uint64_t grid_index = 0;
  std::uint64_t replicate_index = 0;
};

// Counter-based generator (splitmix64): the state is an affine counter and
// each output is a bijective 64-bit hash of it, so sequences depend only on
// the initial seed material, never on call interleaving elsewhere.
class RngStream {
 public:
  using result_type = std::uint64_t;

  explicit RngStream(std::uint64_t seed_material) : counter_(seed_material) {}

  std::uint64_t next_u64();

  // Uniform on [0, 1) with 53 random bits.
  double uniform01();
  // Uniform on the open interval (0, 1); safe under log() and quantile maps.
  double uniform_open01();
  // Uniform on (lo, hi) derived from uniform01.
  double uniform(double lo, double hi);
  // Standard normal by quantile inversion (one uniform per draw).
  double normal();
  // Number of failures before the first success, support {0, 1, 2, ...}.
  std::uint64_t geometric(double success_prob);
  // Sum of n Bernoulli(p) indicators.
  long binomial(long n, double p);

  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }
  std::uint64_t operator()() { return next_u64(); }

 private:
  std::uint64_t counter_;
};

// Seed-material derivation: fold the four key fields into 64 bits with the
// splitmix64 finalizer between folds (purpose is FNV-1a hashed first):
//   h = mix64(master_seed ^ kDomainTag)
//   h = mix64(h ^ fnv1a64(purpose))
//   h = mix64(h ^ grid_index)
//   h = mix64(h ^ replicate_index)
RngStream derive_stream(const StreamKey& key);

namespace detail {
std::uint64_t mix64(std::uint64_t z);
std::uint64_t fnv1a64(std::string_view s);
}  // namespace detail

}  // namespace lfim
