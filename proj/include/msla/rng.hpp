#pragma once

#include <cstdint>
#include <random>

namespace msla {

// splitmix64 finalizer; derives independent per-trial seeds so that
// parallel and serial suite runs see identical streams per trial.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// All randomness in the library flows through this wrapper. Draws use
// modulo reduction rather than std::uniform_int_distribution so streams
// do not depend on standard-library implementation details.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Inclusive bounds.
  long int_in(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(eng_() % span);
  }

  std::uint64_t next() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace msla
