#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>

namespace loopmc {

// Substream purposes.  Streams indexed by (master_seed, chain, purpose) are
// pairwise independent for all practical purposes (seeded through SplitMix64
// mixing of the triple).  Wall-clock time is never used as a seed.
enum class StreamPurpose : std::uint64_t {
  Init = 1,
  Sweep = 2,
  Orientation = 3,
};

// Deterministic stream. Distributions are implemented from raw 64-bit draws
// (not std:: distributions) so that a given seed yields the same sample
// sequence on every platform.
class RngStream {
 public:
  RngStream() : RngStream(0, 0, StreamPurpose::Init) {}
  RngStream(std::uint64_t master_seed, std::uint64_t chain, StreamPurpose p);

  std::uint64_t bits();
  double uniform01();                 // in [0, 1)
  double uniform(double a, double b);  // in [a, b)
  std::uint32_t uniform_int(std::uint32_t n);  // in [0, n)
  int poisson(double mean);

  // Engine state serialization for checkpoints (text, space separated).
  void save_state(std::ostream& os) const;
  void load_state(std::istream& is);

 private:
  std::mt19937_64 gen_;
};

}  // namespace loopmc
