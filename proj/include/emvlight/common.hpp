#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>

namespace emvlight {

// Compass direction. For links this is the direction of travel.
enum class Dir : int { N = 0, E = 1, S = 2, W = 3 };
constexpr int kDirCount = 4;

Dir opposite(Dir d);
Dir left_of(Dir d);   // heading after a left turn
Dir right_of(Dir d);  // heading after a right turn
char dir_letter(Dir d);
Dir dir_from_letter(char c);

[[noreturn]] void fail(const std::string& where, const std::string& what);
inline void require(bool cond, const std::string& where, const std::string& what) {
  if (!cond) fail(where, what);
}

// Deterministic RNG used everywhere stochastic behaviour is needed. All
// distributions are derived from raw mt19937_64 output by hand so a seed
// pins the full draw sequence independent of the standard library.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // uniform in [0, 1) with 53-bit resolution
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform integer in [lo, hi], inclusive
  int uniform_int(int lo, int hi);

  // Knuth's method; intended for small lambda (per-substep arrival rates)
  int poisson(double lambda);

  double normal();

  // index sampled from an unnormalized non-negative weight vector
  int sample(std::span<const double> probs);

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

uint64_t splitmix64(uint64_t x);

// FNV-1a, used for content hashes of configs and trajectories.
class Fnv1a {
 public:
  void add(const void* data, size_t n);
  void add_string(const std::string& s) { add(s.data(), s.size()); }
  void add_double(double d) { add(&d, sizeof(d)); }
  void add_int(int64_t v) { add(&v, sizeof(v)); }
  uint64_t value() const { return h_; }

 private:
  uint64_t h_ = 1469598103934665603ull;
};

std::string format_double(double v);  // shortest round-trip decimal

}  // namespace emvlight
