#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace ewl {

// Deterministic random stream. Uniform and Gaussian variates are derived from
// the raw mt19937_64 output by hand: the engine is pinned bit-for-bit by the
// standard, the <random> distributions are not, and seeded runs must be
// byte-identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  // Uniform on [0,1), 53 bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller on the raw stream.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // u1 in (0,1] so the log is finite.
    double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    double u2 = uniform();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  // Decorrelated child seed for the i-th subtask, independent of the order in
  // which subtasks consume their streams.
  std::uint64_t subseed(std::uint64_t index) const {
    std::uint64_t z = seed_mix_ + (index + 1) * 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  static Rng child(std::uint64_t seed, std::uint64_t index) {
    Rng base(seed);
    return Rng(base.subseed(index));
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_mix_ = engine_();  // consumed once, fixed at construction
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ewl
