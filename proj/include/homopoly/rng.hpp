#pragma once

// Deterministic randomness contract.
//
// All randomness in the tool flows from a single root seed.  Each named
// check derives its own stream by hashing the check name into the seed
// (FNV-1a), so adding or reordering checks never perturbs the values another
// check draws.  The generator is SplitMix64, chosen because its output is
// fully specified by the algorithm (no library- or platform-dependent
// distribution code is involved anywhere).

#include <cstdint>
#include <string>

namespace homopoly {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound). bound must be nonzero.  Uses rejection sampling so
  // the distribution is exact regardless of bound.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = (0ULL - bound) % bound;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (next_u64() & 1ULL) != 0; }

  // Derives the child stream for a named check from a root seed.
  static Rng stream(std::uint64_t root_seed, const std::string& name) {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a 64-bit
    for (unsigned char c : name) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return Rng(root_seed ^ h);
  }

 private:
  std::uint64_t state_;
};

}  // namespace homopoly
