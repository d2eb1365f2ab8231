#ifndef BLOCKMOD_RANDOM_HPP
#define BLOCKMOD_RANDOM_HPP

#include <cstdint>
#include <vector>

#include "blockmod/omega.hpp"
#include "blockmod/polynomial.hpp"

namespace blockmod {

/// SplitMix64. Fixed here (rather than std::mt19937 + distributions) so that
/// sampled test points are reproducible across implementations:
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
///
/// uniform(lo, hi) = lo + next() mod (hi - lo + 1).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

 private:
  std::uint64_t state_;
};

/// Numerator in [-num_bound, num_bound], denominator in [1, den_bound].
inline Rational random_rational(SplitMix64& rng, long num_bound = 7, long den_bound = 4) {
  const long num = rng.uniform(-num_bound, num_bound);
  const long den = rng.uniform(1, den_bound);
  return Rational(num, den);
}

inline Rational random_nonzero_rational(SplitMix64& rng, long num_bound = 7, long den_bound = 4) {
  for (;;) {
    Rational r = random_rational(rng, num_bound, den_bound);
    if (!r.is_zero()) return r;
  }
}

/// Random polynomial in d1, d2 of total degree <= max_degree; each monomial is
/// present with probability 1/2.
inline Poly2 random_poly2(SplitMix64& rng, int max_degree) {
  Poly2 f;
  for (int d = 0; d <= max_degree; ++d)
    for (int a = d; a >= 0; --a)
      if (rng.uniform(0, 1) == 1) f.add_term({static_cast<unsigned>(a), static_cast<unsigned>(d - a)}, random_rational(rng));
  return f;
}

inline Poly1 random_poly1(SplitMix64& rng, int max_degree) {
  Poly1 f;
  for (int d = 0; d <= max_degree; ++d)
    if (rng.uniform(0, 1) == 1) f.add_term({static_cast<unsigned>(d)}, random_rational(rng));
  return f;
}

/// Shape of q in a random parameter set.
enum class QKind { integer, half_integer, generic };

inline ParamSet random_params(SplitMix64& rng, QKind kind = QKind::generic) {
  // Draws are sequenced one per statement so the sample order is fixed.
  Rational q;
  switch (kind) {
    case QKind::integer: {
      const long mag = rng.uniform(1, 4);
      q = Rational(rng.uniform(0, 1) ? mag : -mag);
      break;
    }
    case QKind::half_integer: {
      const long odd = 2 * rng.uniform(0, 3) + 1;
      q = Rational(rng.uniform(0, 1) ? odd : -odd, 2L);
      break;
    }
    case QKind::generic:
      q = random_nonzero_rational(rng);
      break;
  }
  Rational l1 = random_nonzero_rational(rng, 5, 3);
  Rational l2 = random_nonzero_rational(rng, 5, 3);
  Rational alpha = random_rational(rng);
  return ParamSet(q, l1, l2, alpha);
}

/// Three parameter sets: integral q, half-integral q, generic q.
inline std::vector<ParamSet> standard_param_sweep(SplitMix64& rng) {
  return {random_params(rng, QKind::integer), random_params(rng, QKind::half_integer),
          random_params(rng, QKind::generic)};
}

}  // namespace blockmod

#endif  // BLOCKMOD_RANDOM_HPP
