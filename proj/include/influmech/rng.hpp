#pragma once

#include <cstdint>

namespace influmech {

// splitmix64 finalizer; the whole toolkit derives randomness from it so that
// every quantity is a pure function of (seed, index).
inline uint64_t mix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Combines a seed with a stream/sample index into a fresh seed.
inline uint64_t derive_seed(uint64_t base, uint64_t index) {
  return mix64(base ^ mix64(index + 0x632BE59BD9B4E019ULL));
}

inline double to_unit(uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Counter-based uniform draw: value for coordinate `index` under `seed`.
// Stateless, so the step-wise cascade and the live-edge view consume the
// exact same coin for a given edge.
inline double uniform_at(uint64_t seed, uint64_t index) {
  return to_unit(mix64(seed ^ mix64(index + 0xD6E8FEB86659FD93ULL)));
}

// Small sequential generator for shuffles and samplers.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() { return mix64(state_++); }

  double next_unit() { return to_unit(next_u64()); }

  // Uniform integer in [0, bound). bound must be positive.
  uint64_t next_below(uint64_t bound) { return next_u64() % bound; }

 private:
  uint64_t state_;
};

}  // namespace influmech
