#include "sffkit/rng.hpp"

#include <cmath>

#include "sffkit/error.hpp"

namespace sffkit {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : master_seed_(master_seed),
      stream_index_(stream_index),
      engine_(splitmix64(master_seed ^ splitmix64(stream_index))) {}

cplx complex_gaussian(RngStream& stream, double variance) {
  if (!(variance > 0.0)) {
    throw Error(ErrorCode::InvalidParameter, "complex_gaussian: variance must be positive");
  }
  const double s = std::sqrt(0.5 * variance);
  const double re = stream.normal();
  const double im = stream.normal();
  return {s * re, s * im};
}

}  // namespace sffkit
