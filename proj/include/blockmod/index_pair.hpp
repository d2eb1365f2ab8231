#ifndef BLOCKMOD_INDEX_PAIR_HPP
#define BLOCKMOD_INDEX_PAIR_HPP

#include <compare>
#include <ostream>
#include <string>
#include <vector>

namespace blockmod {

/// A lattice index m = (m1, m2) in Z^2.
struct IndexPair {
  long m1 = 0;
  long m2 = 0;

  /// m^perp = (m2, -m1).
  constexpr IndexPair perp() const { return {m2, -m1}; }
  constexpr bool is_zero() const { return m1 == 0 && m2 == 0; }

  constexpr IndexPair operator-() const { return {-m1, -m2}; }
  friend constexpr IndexPair operator+(IndexPair a, IndexPair b) { return {a.m1 + b.m1, a.m2 + b.m2}; }
  friend constexpr IndexPair operator-(IndexPair a, IndexPair b) { return {a.m1 - b.m1, a.m2 - b.m2}; }
  friend constexpr IndexPair operator*(long k, IndexPair a) { return {k * a.m1, k * a.m2}; }

  friend constexpr bool operator==(IndexPair, IndexPair) = default;
  friend constexpr auto operator<=>(IndexPair, IndexPair) = default;

  std::string str() const { return "(" + std::to_string(m1) + "," + std::to_string(m2) + ")"; }
  friend std::ostream& operator<<(std::ostream& os, IndexPair m) { return os << m.str(); }
};

/// (m|n) = m1 n1 + m2 n2.
constexpr long pairing(IndexPair m, IndexPair n) { return m.m1 * n.m1 + m.m2 * n.m2; }

/// All indices of [-radius, radius]^2 in row-major order (m1 outer, m2 inner).
inline std::vector<IndexPair> index_box(long radius) {
  std::vector<IndexPair> out;
  out.reserve(static_cast<std::size_t>((2 * radius + 1) * (2 * radius + 1)));
  for (long a = -radius; a <= radius; ++a)
    for (long b = -radius; b <= radius; ++b) out.push_back({a, b});
  return out;
}

}  // namespace blockmod

#endif  // BLOCKMOD_INDEX_PAIR_HPP
