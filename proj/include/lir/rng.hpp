#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "lir/bloom_filter.hpp"

namespace lir {

/// Purpose tags for the independent random streams of one run.
enum class Stream : std::uint64_t { Hash = 1, Traffic = 2, Failures = 3, TieBreak = 4 };

/// mt19937_64 keyed by (master seed, stream[, sub-stream]). Uniform and
/// exponential draws are computed here rather than through <random>
/// distributions, whose outputs differ between standard libraries.
class Rng {
 public:
  Rng(std::uint64_t master, Stream stream, std::uint64_t sub = 0)
      : engine_(mix64(mix64(master ^ (static_cast<std::uint64_t>(stream) << 56)) ^ sub)) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double exponential(double mean) { return -std::log1p(-uniform()) * mean; }
  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lir
