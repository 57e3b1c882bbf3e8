#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace incol {

// mt19937_64 with portable bounded draws (std distributions differ between
// standard libraries, which would break cross-platform seed reproducibility).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t bound);
  int uniform(int lo, int hi);  // inclusive
  bool chance(int numerator, int denominator) { return static_cast<int>(below(denominator)) < numerator; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0);

}  // namespace incol
