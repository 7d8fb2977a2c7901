// Seeded random streams with portable draw sequences.
//
// All randomness in the library flows through Rng instances created from an
// explicit 64-bit seed. Substreams are derived with mix_seed so that every
// task (replication, day, fold split, ...) owns an independent generator and
// results do not depend on scheduling or worker count.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include <Eigen/Dense>

namespace switchsim {

// splitmix64 step; used both as a stream-mixing hash and to seed engines.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Collapse (seed, tag, index, ...) into one substream seed.
inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t s = 0x8d1f2ab4c96e0837ULL;
  for (std::uint64_t p : parts) {
    s ^= splitmix64(p);
    (void)splitmix64(s);
  }
  return s;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform on [0,1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in {lo, ..., hi}, rejection-sampled (no modulo bias).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  bool bernoulli_half() { return (eng_() >> 63) != 0; }

  bool bernoulli(double p) { return uniform01() < p; }

  // Standard normal via Box-Muller; the spare deviate is cached.
  double normal();

  Eigen::VectorXd normal_vector(int n);

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace switchsim
