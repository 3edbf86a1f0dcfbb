#pragma once

#include <cstdint>
#include <random>

#include "sffkit/matrix.hpp"

namespace sffkit {

std::uint64_t splitmix64(std::uint64_t x);

// One independent random stream per (master_seed, stream_index).
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

// Re and Im independent N(0, variance/2).
cplx complex_gaussian(RngStream& stream, double variance);

}  // namespace sffkit
