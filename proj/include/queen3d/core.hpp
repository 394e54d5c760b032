#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "queen3d/errors.hpp"

namespace queen3d {

/// Torus size. Validates n >= 1 on construction.
struct Modulus {
  long long n;

  explicit Modulus(long long value) : n(value) {
    if (n < 1) throw std::invalid_argument("Modulus: n must be >= 1");
  }

  /// True when n >= 5, n odd, and 3 does not divide n. Every closed-form
  /// operation (eigenvalues, multiplicity polynomials, line classification)
  /// requires this predicate; enumeration-based operations do not.
  bool generic_odd() const { return n >= 5 && n % 2 != 0 && n % 3 != 0; }
};

inline void require_generic_odd(const Modulus& m) {
  if (!m.generic_odd()) throw NonGenericModulus(m.n);
}

/// A point of (Z_n)^3. Coordinates are canonical residues in [0, n); build
/// from arbitrary integers with reduced(). Two points are equal iff their
/// residue triples are equal.
struct FrequencyPoint {
  std::array<long long, 3> c{0, 0, 0};

  static FrequencyPoint reduced(std::array<long long, 3> raw, const Modulus& m) {
    FrequencyPoint a;
    for (int i = 0; i < 3; ++i) {
      long long r = raw[i] % m.n;
      a.c[i] = r < 0 ? r + m.n : r;
    }
    return a;
  }

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }

  bool operator==(const FrequencyPoint&) const = default;
  auto operator<=>(const FrequencyPoint&) const = default;
};

/// A queen move direction: components in {-1,0,1}, not all zero, with the
/// first nonzero component +1 (one representative per opposite pair). A
/// direction also names the hyperplane {a : a.u == 0 (mod n)}.
struct Direction {
  std::array<int, 3> d{0, 0, 0};

  bool operator==(const Direction&) const = default;
};

/// The 13 directions in their fixed listing order: the three axes, the six
/// face diagonals, then the four space diagonals. This order is the canonical
/// iteration order throughout; report output depends on it being stable.
inline const std::array<Direction, 13>& direction_set() {
  static const std::array<Direction, 13> dirs = {{
      {{1, 0, 0}},
      {{0, 1, 0}},
      {{0, 0, 1}},
      {{1, 1, 0}},
      {{1, -1, 0}},
      {{1, 0, 1}},
      {{1, 0, -1}},
      {{0, 1, 1}},
      {{0, 1, -1}},
      {{1, 1, 1}},
      {{1, 1, -1}},
      {{1, -1, 1}},
      {{1, -1, -1}},
  }};
  return dirs;
}

/// Index of u in direction_set(), or -1 when u is not canonical.
inline int direction_index(const Direction& u) {
  const auto& dirs = direction_set();
  for (int i = 0; i < 13; ++i)
    if (dirs[i] == u) return i;
  return -1;
}

/// a.u mod n, in [0, n). The dot product is taken over the integers first
/// (range [-3(n-1), 3(n-1)]), so a single reduction suffices.
inline long long dot_mod(const FrequencyPoint& a, const Direction& u, const Modulus& m) {
  long long s = a.c[0] * u.d[0] + a.c[1] * u.d[1] + a.c[2] * u.d[2];
  long long r = s % m.n;
  return r < 0 ? r + m.n : r;
}

/// Number of directions u with a.u == 0 (mod n). Ranges over [0, 13]; the
/// origin scores 13. Well defined for every n >= 1.
inline int orthogonality_count(const FrequencyPoint& a, const Modulus& m) {
  int count = 0;
  for (const Direction& u : direction_set())
    if (dot_mod(a, u, m) == 0) ++count;
  return count;
}

/// An element of the order-48 group of signed coordinate permutations.
/// Input coordinate j lands at coordinate perm[j]; sign[i] is the sign applied
/// at destination coordinate i.
struct SignedPermutation {
  std::array<int, 3> perm{0, 1, 2};
  std::array<int, 3> sign{1, 1, 1};

  static SignedPermutation identity() { return {}; }

  /// Composition acting right-to-left: after(h) applied to v equals
  /// this applied to (h applied to v).
  SignedPermutation after(const SignedPermutation& h) const {
    SignedPermutation g;
    for (int j = 0; j < 3; ++j) {
      const int mid = h.perm[j];
      const int dst = perm[mid];
      g.perm[j] = dst;
      g.sign[dst] = sign[dst] * h.sign[mid];
    }
    return g;
  }

  SignedPermutation inverse() const {
    SignedPermutation g;
    for (int j = 0; j < 3; ++j) {
      g.perm[perm[j]] = j;
      g.sign[j] = sign[perm[j]];
    }
    return g;
  }

  /// Integer-vector action, no modular reduction.
  std::array<int, 3> image(const std::array<int, 3>& v) const {
    std::array<int, 3> r{0, 0, 0};
    for (int j = 0; j < 3; ++j) r[perm[j]] = sign[perm[j]] * v[j];
    return r;
  }

  bool operator==(const SignedPermutation&) const = default;
};

/// Group action on frequency points: coordinate perm[j] of the result
/// receives sign * a_j, reduced mod n.
inline FrequencyPoint apply(const SignedPermutation& g, const FrequencyPoint& a, const Modulus& m) {
  std::array<long long, 3> r{0, 0, 0};
  for (int j = 0; j < 3; ++j)
    r[g.perm[j]] = static_cast<long long>(g.sign[g.perm[j]]) * a.c[j];
  return FrequencyPoint::reduced(r, m);
}

/// All 48 group elements in a fixed order, identity first.
inline const std::vector<SignedPermutation>& signed_permutation_group() {
  static const std::vector<SignedPermutation> group = [] {
    static constexpr std::array<std::array<int, 3>, 6> kPerms = {{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    std::vector<SignedPermutation> g;
    g.reserve(48);
    for (const auto& p : kPerms)
      for (int bits = 0; bits < 8; ++bits) {
        SignedPermutation e;
        e.perm = p;
        e.sign = {(bits & 1) ? -1 : 1, (bits & 2) ? -1 : 1, (bits & 4) ? -1 : 1};
        g.push_back(e);
      }
    return g;
  }();
  return group;
}

/// True when n^3 exceeds the given point budget; evaluated without overflow.
inline bool cube_exceeds(long long n, long long budget) {
  if (budget < 1) return true;
  unsigned __int128 cube = static_cast<unsigned __int128>(n) * n;
  cube *= static_cast<unsigned __int128>(n);
  return cube > static_cast<unsigned __int128>(budget);
}

/// Flip v to the representative whose first nonzero component is positive.
inline std::array<int, 3> sign_normalized(std::array<int, 3> v) {
  for (int c : v) {
    if (c > 0) return v;
    if (c < 0) return {-v[0], -v[1], -v[2]};
  }
  return v;
}

/// Canonical direction for the pair {v, -v}; v must be a nonzero vector with
/// components in {-1, 0, 1}.
inline Direction canonical_direction(const std::array<int, 3>& v) {
  return Direction{sign_normalized(v)};
}

}  // namespace queen3d
