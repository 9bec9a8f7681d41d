#pragma once

// Seeded generators for randomized checks. Values are drawn with plain
// modular reduction of mt19937_64 output, whose sequence is fixed by the
// standard, so a seed gives the same samples on every platform.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "hfib/hpoly.hpp"
#include "hfib/operators.hpp"
#include "hfib/rational.hpp"

namespace hfib {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng_() % span);
  }

  /// num/den with |num| <= max_num and 1 <= den <= max_den.
  BigRational rational(long max_num = 9, long max_den = 9) {
    return make_rational(integer(-max_num, max_num), integer(1, max_den));
  }

  BigRational nonzero_rational(long max_num = 9, long max_den = 9) {
    for (;;) {
      BigRational r = rational(max_num, max_den);
      if (!is_zero(r)) return r;
    }
  }

  HPoly hpoly(unsigned max_terms = 4, unsigned max_exp = 3, bool with_q = false) {
    HPoly p;
    const auto terms = static_cast<unsigned>(integer(0, max_terms));
    for (unsigned i = 0; i < terms; ++i) {
      Monomial m{unsigned(integer(0, max_exp)), unsigned(integer(0, max_exp)),
                 with_q ? unsigned(integer(0, max_exp)) : 0u};
      p.add_term(m, rational());
    }
    return p;
  }

  OpPoly oppoly(unsigned max_degree = 4) {
    OpPoly p;
    const auto deg = static_cast<unsigned>(integer(0, max_degree));
    for (unsigned k = 0; k <= deg; ++k) p.add_term(k, rational());
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

/// (h, hp) pairs with h != 0 for the Charlier row-sum check.
inline std::vector<std::pair<BigRational, BigRational>> charlier_samples(std::uint64_t seed, unsigned count) {
  Sampler s(seed);
  std::vector<std::pair<BigRational, BigRational>> out;
  out.reserve(count);
  for (unsigned i = 0; i < count; ++i) {
    BigRational h = s.nonzero_rational();
    BigRational hp = s.rational();
    out.emplace_back(std::move(h), std::move(hp));
  }
  return out;
}

inline std::vector<OpPoly> oppoly_samples(std::uint64_t seed, unsigned count) {
  Sampler s(seed);
  std::vector<OpPoly> out;
  for (unsigned i = 0; i < count; ++i) out.push_back(s.oppoly());
  return out;
}

}  // namespace hfib
