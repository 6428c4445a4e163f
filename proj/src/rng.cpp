#include "loopmc/rng.hpp"

#include <array>
#include <cmath>
#include <istream>
#include <ostream>

namespace loopmc {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t chain,
                     StreamPurpose p) {
  // Mix the triple into a seed sequence for the engine.
  std::uint64_t s = master_seed;
  s ^= 0x6a09e667f3bcc908ULL + chain * 0x9e3779b97f4a7c15ULL;
  s ^= static_cast<std::uint64_t>(p) * 0xd1b54a32d192ed03ULL;
  std::array<std::uint32_t, 8> seq;
  for (auto& w : seq) w = static_cast<std::uint32_t>(splitmix64(s) >> 16);
  std::seed_seq sseq(seq.begin(), seq.end());
  gen_.seed(sseq);
}

std::uint64_t RngStream::bits() { return gen_(); }

double RngStream::uniform01() {
  // 53 random bits scaled to [0,1).
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double a, double b) {
  return a + (b - a) * uniform01();
}

std::uint32_t RngStream::uniform_int(std::uint32_t n) {
  // Rejection to avoid modulo bias.
  if (n == 0) return 0;
  std::uint64_t limit = ~0ULL - (~0ULL % n);
  std::uint64_t v;
  do {
    v = gen_();
  } while (v >= limit);
  return static_cast<std::uint32_t>(v % n);
}

int RngStream::poisson(double mean) {
  // Product-of-uniforms (Knuth); split large means to dodge underflow.
  int count = 0;
  while (mean > 500.0) {
    count += poisson(250.0);
    mean -= 250.0;
  }
  double limit = std::exp(-mean);
  double prod = uniform01();
  while (prod >= limit) {
    ++count;
    prod *= uniform01();
  }
  return count;
}

void RngStream::save_state(std::ostream& os) const { os << gen_; }

void RngStream::load_state(std::istream& is) { is >> gen_; }

}  // namespace loopmc
