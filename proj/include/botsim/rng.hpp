#pragma once

// Deterministic random primitives on top of mt19937_64. The standard
// distribution classes are implementation-defined, so everything that must
// reproduce byte-identical output across toolchains is hand-rolled here.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace botsim {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Exponential waiting time with the given rate (> 0).
  double exponential(double rate) { return -std::log1p(-uniform()) / rate; }

  // Unbiased uniform integer in [0, n), n > 0.
  std::uint64_t index(std::uint64_t n) {
    const std::uint64_t threshold = (-n) % n;
    for (;;) {
      const std::uint64_t x = gen_();
      if (x >= threshold) return x % n;
    }
  }

  // Poisson count with the given mean, by counting unit-rate arrivals.
  // O(mean), intended for means up to ~1e6.
  long poisson_count(double mean) {
    double sum = 0.0;
    long n = 0;
    for (;;) {
      sum += exponential(1.0);
      if (sum > mean) return n;
      ++n;
    }
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[index(i)]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace botsim
