#ifndef GH_RNG_HPP
#define GH_RNG_HPP

#include <random>

#include "field.hpp"

namespace gh {

inline u64 splitmix64(u64 x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Deterministic per-seed stream; substreams derive from the seed alone so
// parallel trials stay reproducible regardless of scheduling.
class Rng {
public:
  explicit Rng(u64 seed) : seed_(seed), eng_(splitmix64(seed)) {}

  Rng substream(u64 index) const { return Rng(splitmix64(seed_ ^ splitmix64(index + 1))); }

  u64 next_u64() { return eng_(); }
  u64 below(u64 n) {  // uniform in [0, n)
    std::uniform_int_distribution<u64> d(0, n - 1);
    return d(eng_);
  }
  Fel field_element(const Field& F) { return below(F.q()); }
  Fel nonzero_element(const Field& F) { return 1 + below(F.q() - 1); }

  std::vector<Fel> vector(const Field& F, int n) {
    std::vector<Fel> v(n);
    for (auto& x : v) x = field_element(F);
    return v;
  }

private:
  u64 seed_;
  std::mt19937_64 eng_;
};

}  // namespace gh

#endif
