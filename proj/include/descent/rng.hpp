#pragma once

#include <cstdint>

namespace descent {

// splitmix64. Deterministic across platforms and standard libraries, which
// std::uniform_int_distribution is not; campaign seeds must replay exactly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound); bound > 0
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // uniform in [lo, hi], inclusive
  int range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // true with probability num/den
  bool chance(std::uint32_t num, std::uint32_t den) { return below(den) < num; }

 private:
  std::uint64_t state_;
};

// Stable per-task seed derivation: campaigns seed task i with
// mix_seed(master, i) so parallel and serial runs see identical streams.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
  Rng r(master ^ (0x632be59bd9b4e019ULL * (index + 1)));
  return r.next();
}

}  // namespace descent
