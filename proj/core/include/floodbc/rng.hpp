#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace floodbc {

// Keyed derivation for independent random streams. Every component of an
// execution (dealer, each party tape, adversary, mine oracle) gets its own
// key derived from the root seed, a domain label, and an index, so no
// component can observe another's stream and replays are exact.
uint64_t derive_key(uint64_t root, std::string_view domain, uint64_t index);

// Second-level derivation for per-purpose sub-streams inside a component
// (e.g. one neighbor set per flood instance from a single party tape).
uint64_t derive_subkey(uint64_t key, uint64_t index);

// Deterministic random stream. All sampling helpers are implemented on top
// of the raw 64-bit output so results are identical across platforms;
// std::uniform_* distributions are implementation-defined and never used.
class RngStream {
 public:
  explicit RngStream(uint64_t key) : gen_(key) {}

  uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    return next_double() < p;
  }

  // Uniform in [0, bound). Rejection sampling, no modulo bias.
  uint64_t below(uint64_t bound);

  // Uniform in [lo, hi] inclusive.
  int64_t uniform_int(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  // k distinct values from [lo, hi], returned sorted.
  std::vector<int> sample_distinct(int lo, int hi, int k);

 private:
  std::mt19937_64 gen_;
};

}  // namespace floodbc
