#pragma once

#include <cstdint>
#include <random>

namespace swarmfire {

/// splitmix64 finalizer; used to derive independent seeds.
std::uint64_t mix64(std::uint64_t x);

/// Seed of one Monte-Carlo run. Depends only on (base_seed, run_index) so the
/// same run index gets the same world under every strategy.
std::uint64_t run_seed(std::uint64_t base_seed, std::uint64_t run_index);

/// Deterministic random stream identified by (seed, stream id). Distinct ids
/// hash to unrelated engine states.
class RngStream {
 public:
  using result_type = std::mt19937_64::result_type;

  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  double uniform01() { return uniform(0.0, 1.0); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

}  // namespace swarmfire
