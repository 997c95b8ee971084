#pragma once

#include <cstdint>
#include <random>

namespace curvelab {

/// Single seeded generator; every randomized routine draws from one of these
/// so that runs are reproducible from the logged seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(eng_);
  }
  double gaussian(double sigma = 1.0) {
    return std::normal_distribution<double>(0.0, sigma)(eng_);
  }
  long integer(long lo, long hi) {  // inclusive
    return std::uniform_int_distribution<long>(lo, hi)(eng_);
  }
  std::uint64_t bits() { return eng_(); }

  /// Child generator with decorrelated seed; used to hand independent
  /// streams to parallel workers while keeping counts deterministic.
  Rng fork() { return Rng(eng_() ^ 0x9e3779b97f4a7c15ULL); }

 private:
  std::mt19937_64 eng_;
  std::uint64_t seed_;
};

}  // namespace curvelab
