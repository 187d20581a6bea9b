#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "core/util/hash.hpp"

namespace rei::util {

// SplitMix64. Hand-rolled so streams are identical across platforms and
// standard-library versions; replay depends on it.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound). bound == 0 returns 0.
  uint64_t below(uint64_t bound) {
    if (bound == 0) return 0;
    uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  double unit() { return (next() >> 11) * (1.0 / 9007199254740992.0); }

  bool chance(double p) { return unit() < p; }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

  // Derived stream: independent of call order on the parent.
  Rng fork(std::string_view label) const {
    return Rng(fnv1a64(label, fnv1a64_mix(state_, kFnvOffset)));
  }

 private:
  uint64_t state_;
};

inline uint64_t derive_seed(uint64_t run_seed, std::string_view a, std::string_view b = {}) {
  uint64_t h = fnv1a64_mix(run_seed, kFnvOffset);
  h = fnv1a64(a, h);
  if (!b.empty()) h = fnv1a64(b, h);
  return h;
}

}  // namespace rei::util
