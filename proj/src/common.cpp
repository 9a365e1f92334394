#include "emvlight/common.hpp"

#include <cmath>
#include <cstdio>

namespace emvlight {

Dir opposite(Dir d) {
  switch (d) {
    case Dir::N: return Dir::S;
    case Dir::E: return Dir::W;
    case Dir::S: return Dir::N;
    case Dir::W: return Dir::E;
  }
  fail("opposite", "bad direction");
}

Dir left_of(Dir d) {
  switch (d) {
    case Dir::N: return Dir::W;
    case Dir::W: return Dir::S;
    case Dir::S: return Dir::E;
    case Dir::E: return Dir::N;
  }
  fail("left_of", "bad direction");
}

Dir right_of(Dir d) { return opposite(left_of(d)); }

char dir_letter(Dir d) {
  switch (d) {
    case Dir::N: return 'N';
    case Dir::E: return 'E';
    case Dir::S: return 'S';
    case Dir::W: return 'W';
  }
  fail("dir_letter", "bad direction");
}

Dir dir_from_letter(char c) {
  switch (c) {
    case 'N': return Dir::N;
    case 'E': return Dir::E;
    case 'S': return Dir::S;
    case 'W': return Dir::W;
  }
  fail("dir_from_letter", std::string("bad direction letter '") + c + "'");
}

void fail(const std::string& where, const std::string& what) {
  throw std::runtime_error(where + ": " + what);
}

int Rng::uniform_int(int lo, int hi) {
  require(lo <= hi, "Rng::uniform_int", "empty range");
  uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
  return lo + static_cast<int>(next_u64() % span);
}

int Rng::poisson(double lambda) {
  require(lambda >= 0.0, "Rng::poisson", "negative rate");
  if (lambda == 0.0) return 0;
  const double limit = std::exp(-lambda);
  int k = 0;
  double p = 1.0;
  do {
    ++k;
    p *= uniform01();
  } while (p > limit);
  return k - 1;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform01() - 1.0;
    v = 2.0 * uniform01() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double m = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * m;
  have_spare_ = true;
  return u * m;
}

int Rng::sample(std::span<const double> probs) {
  require(!probs.empty(), "Rng::sample", "empty distribution");
  double total = 0.0;
  for (double p : probs) total += p;
  require(total > 0.0, "Rng::sample", "all-zero distribution");
  const double u = uniform01() * total;
  double cum = 0.0;
  for (size_t i = 0; i < probs.size(); ++i) {
    cum += probs[i];
    if (u < cum) return static_cast<int>(i);
  }
  return static_cast<int>(probs.size()) - 1;
}

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

void Fnv1a::add(const void* data, size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < n; ++i) {
    h_ ^= p[i];
    h_ *= 1099511628211ull;
  }
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace emvlight
