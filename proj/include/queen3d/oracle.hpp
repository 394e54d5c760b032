#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "queen3d/core.hpp"
#include "queen3d/errors.hpp"
#include "queen3d/spectrum.hpp"

namespace queen3d {

/// The connection set S = {t*u mod n : u direction, 1 <= t <= n-1},
/// deduplicated. 0 is never in S, and S = -S, so the Cayley graph is simple
/// and undirected. In the generic regime |S| = 13(n-1); outside it moves may
/// collide and |S| is only reported.
struct GeneratorSet {
  long long n = 1;
  std::vector<std::array<long long, 3>> elements;  // sorted
  bool closed_under_negation = true;
  bool matches_generic_size = true;  // |S| == 13(n-1)

  long long size() const { return static_cast<long long>(elements.size()); }
};

inline GeneratorSet generator_set(const Modulus& m) {
  std::set<std::array<long long, 3>> s;
  for (const Direction& u : direction_set())
    for (long long t = 1; t < m.n; ++t) {
      std::array<long long, 3> e;
      for (int i = 0; i < 3; ++i) {
        long long r = (t * u.d[i]) % m.n;
        e[i] = r < 0 ? r + m.n : r;
      }
      s.insert(e);
    }

  GeneratorSet out;
  out.n = m.n;
  out.elements.assign(s.begin(), s.end());
  for (const auto& e : out.elements) {
    const std::array<long long, 3> neg = {(m.n - e[0]) % m.n, (m.n - e[1]) % m.n,
                                          (m.n - e[2]) % m.n};
    if (!s.count(neg)) out.closed_under_negation = false;
  }
  out.matches_generic_size = out.size() == 13 * (m.n - 1);
  return out;
}

/// Vertex numbering: idx(a) = a0 + n*a1 + n^2*a2.
inline long long vertex_index(const FrequencyPoint& a, const Modulus& m) {
  return a.c[0] + m.n * (a.c[1] + m.n * a.c[2]);
}

inline FrequencyPoint vertex_point(long long idx, const Modulus& m) {
  FrequencyPoint a;
  a.c = {idx % m.n, (idx / m.n) % m.n, idx / (m.n * m.n)};
  return a;
}

/// The literal Cayley graph: per-vertex sorted neighbor lists.
struct AdjacencyStructure {
  long long n = 1;
  long long degree = 0;
  std::vector<std::vector<std::int32_t>> neighbors;

  long long vertex_count() const { return static_cast<long long>(neighbors.size()); }
  long long edge_count() const { return vertex_count() * degree / 2; }
};

inline AdjacencyStructure build_adjacency(const Modulus& m, long long vertex_budget = 100'000) {
  if (cube_exceeds(m.n, vertex_budget))
    throw BudgetExceeded("adjacency for n=" + std::to_string(m.n) + " needs " +
                         std::to_string(m.n * m.n * m.n) + " vertices, over the budget of " +
                         std::to_string(vertex_budget));
  const GeneratorSet s = generator_set(m);
  const long long n = m.n;
  const long long count = n * n * n;

  AdjacencyStructure adj;
  adj.n = n;
  adj.degree = s.size();
  adj.neighbors.assign(count, {});
  for (long long x = 0; x < count; ++x) {
    const FrequencyPoint p = vertex_point(x, m);
    auto& list = adj.neighbors[x];
    list.reserve(s.elements.size());
    for (const auto& e : s.elements) {
      std::array<long long, 3> q;
      for (int i = 0; i < 3; ++i) {
        q[i] = p.c[i] + e[i];
        if (q[i] >= n) q[i] -= n;
      }
      list.push_back(static_cast<std::int32_t>(q[0] + n * (q[1] + n * q[2])));
    }
    std::sort(list.begin(), list.end());
  }
  return adj;
}

/// Full structural audit: symmetry, loop-freeness, regularity. O(V * degree).
inline bool validate_adjacency(const AdjacencyStructure& adj) {
  for (long long x = 0; x < adj.vertex_count(); ++x) {
    const auto& list = adj.neighbors[x];
    if (static_cast<long long>(list.size()) != adj.degree) return false;
    for (std::int32_t y : list) {
      if (y == x) return false;
      const auto& back = adj.neighbors[y];
      if (!std::binary_search(back.begin(), back.end(), static_cast<std::int32_t>(x)))
        return false;
    }
  }
  return true;
}

/// Edge-list export, one "i j" line per edge with i < j. The header format is
/// a stable contract: "# queen3d-torus n=<n> vertices=<n^3> degree=<deg>".
inline void write_edge_list(std::ostream& os, const AdjacencyStructure& adj) {
  os << "# queen3d-torus n=" << adj.n << " vertices=" << adj.vertex_count()
     << " degree=" << adj.degree << "\n";
  for (long long x = 0; x < adj.vertex_count(); ++x)
    for (std::int32_t y : adj.neighbors[x])
      if (y > x) os << x << ' ' << y << '\n';
}

/// trace(A^k) for 1 <= k <= 4, by exact closed-walk propagation from the
/// origin's indicator vector. Vertex-transitivity gives
/// trace(A^k) = n^3 * (A^k)[0][0]; no floating point is involved.
inline long long trace_power(int k, const AdjacencyStructure& adj) {
  if (k < 1 || k > 4) throw std::invalid_argument("trace_power: k must be in [1, 4]");

  unsigned __int128 bound = 1;
  for (int i = 0; i < k; ++i) bound *= static_cast<unsigned __int128>(std::max<long long>(adj.degree, 1));
  bound *= static_cast<unsigned __int128>(adj.vertex_count());
  if (bound > static_cast<unsigned __int128>(std::numeric_limits<long long>::max()))
    throw Error("trace_power would overflow 64-bit integers at this size");

  const long long count = adj.vertex_count();
  std::vector<long long> v(count, 0), w(count, 0);
  v[0] = 1;
  for (int round = 0; round < k; ++round) {
    std::fill(w.begin(), w.end(), 0);
    for (long long x = 0; x < count; ++x) {
      long long acc = 0;
      for (std::int32_t y : adj.neighbors[x]) acc += v[y];
      w[x] = acc;
    }
    std::swap(v, w);
  }
  return count * v[0];
}

inline long long trace_power(int k, const Modulus& m, long long vertex_budget = 100'000) {
  return trace_power(k, build_adjacency(m, vertex_budget));
}

/// The Fourier character indexed by a: x -> exp(2*pi*i*(a.x)/n).
/// Unit modulus everywhere and multiplicative over addition of arguments.
struct Character {
  FrequencyPoint a;
  Modulus m;

  std::complex<double> operator()(const FrequencyPoint& x) const {
    long long e = (a.c[0] * x.c[0] + a.c[1] * x.c[1] + a.c[2] * x.c[2]) % m.n;
    if (e < 0) e += m.n;
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    return std::polar(1.0, kTwoPi * static_cast<double>(e) / static_cast<double>(m.n));
  }
};

/// max over vertices x of |sum_{y ~ x} chi_a(y) - lambda(a) * chi_a(x)|,
/// evaluated on the literal graph in complex doubles. For a correct
/// eigenvalue this is pure roundoff, far below 1e-8 * degree.
inline double character_residual(const FrequencyPoint& a, const AdjacencyStructure& adj) {
  const Modulus m(adj.n);
  const double lambda = static_cast<double>(eigenvalue(a, m));

  std::vector<std::complex<double>> omega(m.n);
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  for (long long j = 0; j < m.n; ++j)
    omega[j] = std::polar(1.0, kTwoPi * static_cast<double>(j) / static_cast<double>(m.n));

  const long long count = adj.vertex_count();
  std::vector<std::complex<double>> chi(count);
  for (long long x = 0; x < count; ++x) {
    const FrequencyPoint p = vertex_point(x, m);
    long long e = (a.c[0] * p.c[0] + a.c[1] * p.c[1] + a.c[2] * p.c[2]) % m.n;
    chi[x] = omega[e];
  }

  double worst = 0.0;
  for (long long x = 0; x < count; ++x) {
    std::complex<double> acc{0.0, 0.0};
    for (std::int32_t y : adj.neighbors[x]) acc += chi[y];
    worst = std::max(worst, std::abs(acc - lambda * chi[x]));
  }
  return worst;
}

inline double character_residual(const FrequencyPoint& a, const Modulus& m,
                                 long long vertex_budget = 100'000) {
  require_generic_odd(m);
  return character_residual(a, build_adjacency(m, vertex_budget));
}

/// Exact evaluation of sum_{t=1}^{n-1} omega^(t*e): n-1 when e == 0 (mod n),
/// else -1 by the vanishing of the full geometric series. The float sum is
/// recomputed independently and must agree within 1e-9 * n.
struct GeometricSumResult {
  long long exact = 0;
  double float_abs_error = 0.0;
  bool within_tolerance = true;
};

inline GeometricSumResult geometric_sum_check(long long exponent, const Modulus& m) {
  long long e = exponent % m.n;
  if (e < 0) e += m.n;
  GeometricSumResult result;
  result.exact = (e == 0) ? m.n - 1 : -1;

  std::complex<double> sum{0.0, 0.0};
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  for (long long t = 1; t < m.n; ++t) {
    const long long te = (t * e) % m.n;
    sum += std::polar(1.0, kTwoPi * static_cast<double>(te) / static_cast<double>(m.n));
  }
  result.float_abs_error = std::abs(sum - std::complex<double>(static_cast<double>(result.exact), 0.0));
  result.within_tolerance = result.float_abs_error <= 1e-9 * static_cast<double>(m.n);
  return result;
}

}  // namespace queen3d
