#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "queen3d/core.hpp"
#include "queen3d/errors.hpp"

namespace queen3d {

enum class LineFamily { axis, face_diagonal, space_diagonal, skew };

inline const char* to_string(LineFamily f) {
  switch (f) {
    case LineFamily::axis: return "axis";
    case LineFamily::face_diagonal: return "face_diagonal";
    case LineFamily::space_diagonal: return "space_diagonal";
    default: return "skew";
  }
}

/// One of the 25 cyclic submodules carrying every point with orthogonality
/// count >= 2. The generator is a primitive integer vector (component gcd 1)
/// sign-normalized so its first nonzero component is positive; for the skew
/// lines whose leading component is 2 the first unit component sits later.
struct Line {
  std::array<int, 3> generator{0, 0, 0};
  LineFamily family = LineFamily::axis;

  bool operator==(const Line&) const = default;
};

/// Families are mutually exclusive coordinate patterns of the generator:
/// axis = two zeros; face diagonal = one zero, two +-1; space diagonal =
/// three +-1; skew = two +-1 and one +-2.
inline std::optional<LineFamily> family_of_generator(const std::array<int, 3>& g) {
  int zeros = 0, units = 0, twos = 0;
  for (int c : g) {
    switch (std::abs(c)) {
      case 0: ++zeros; break;
      case 1: ++units; break;
      case 2: ++twos; break;
      default: return std::nullopt;
    }
  }
  if (zeros == 2 && units == 1) return LineFamily::axis;
  if (zeros == 1 && units == 2) return LineFamily::face_diagonal;
  if (units == 3) return LineFamily::space_diagonal;
  if (units == 2 && twos == 1) return LineFamily::skew;
  return std::nullopt;
}

/// The 25 prototype lines: 3 axis, 6 face-diagonal, 4 space-diagonal and 12
/// skew, generated from (1,0,0), (1,1,0), (1,1,1), (1,1,2) under signed
/// coordinate permutations. Ordered by family, then lexicographically.
inline const std::vector<Line>& prototype_lines() {
  static const std::vector<Line> lines = [] {
    static constexpr std::array<std::array<int, 3>, 4> kPrototypes = {{
        {1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 1, 2}}};
    std::set<std::array<int, 3>> generators;
    for (const auto& proto : kPrototypes)
      for (const auto& g : signed_permutation_group())
        generators.insert(sign_normalized(g.image(proto)));
    std::vector<Line> out;
    out.reserve(generators.size());
    for (const auto& w : generators) {
      auto fam = family_of_generator(w);
      if (!fam) throw Error("prototype generator with unexpected pattern");
      out.push_back({w, *fam});
    }
    std::sort(out.begin(), out.end(), [](const Line& a, const Line& b) {
      if (a.family != b.family) return a.family < b.family;
      return a.generator < b.generator;
    });
    return out;
  }();
  return lines;
}

inline const Line* find_prototype_line(const std::array<int, 3>& generator) {
  for (const Line& l : prototype_lines())
    if (l.generator == generator) return &l;
  return nullptr;
}

/// Membership test for a in the line {t * generator : t in Z_n}. The
/// generator's first +-1 component pins the parameter t; the remaining two
/// coordinates are then checked as congruences.
inline bool line_contains(const Line& line, const FrequencyPoint& a, const Modulus& m) {
  int unit = -1;
  for (int i = 0; i < 3; ++i)
    if (std::abs(line.generator[i]) == 1) {
      unit = i;
      break;
    }
  if (unit < 0) throw Error("line generator without a unit component");
  const long long t =
      line.generator[unit] > 0 ? a.c[unit] : (m.n - a.c[unit]) % m.n;
  for (int i = 0; i < 3; ++i) {
    long long want = (t * line.generator[i]) % m.n;
    if (want < 0) want += m.n;
    if (want != a.c[i]) return false;
  }
  return true;
}

/// All n points of the line over Z_n.
inline std::vector<FrequencyPoint> line_points(const Line& line, const Modulus& m) {
  std::vector<FrequencyPoint> pts;
  pts.reserve(m.n);
  for (long long t = 0; t < m.n; ++t)
    pts.push_back(FrequencyPoint::reduced({t * line.generator[0],
                                           t * line.generator[1],
                                           t * line.generator[2]}, m));
  return pts;
}

/// Simultaneous solutions of a.u == a.v == 0 (mod n) for distinct directions:
/// the cross product u x v, reduced by the gcd of its components and
/// sign-normalized. The result always lands in the prototype line set.
inline Line solve_pair_kernel(const Direction& u, const Direction& v, const Modulus& m) {
  require_generic_odd(m);
  if (u == v) throw std::invalid_argument("solve_pair_kernel: directions must be distinct");
  std::array<int, 3> w = {u.d[1] * v.d[2] - u.d[2] * v.d[1],
                          u.d[2] * v.d[0] - u.d[0] * v.d[2],
                          u.d[0] * v.d[1] - u.d[1] * v.d[0]};
  if (w[0] == 0 && w[1] == 0 && w[2] == 0)
    throw DegenerateKernel("cross product vanished for a distinct direction pair");
  int g = std::gcd(std::gcd(std::abs(w[0]), std::abs(w[1])), std::abs(w[2]));
  for (int& c : w) c /= g;
  w = sign_normalized(w);

  // Exact integer postcondition; both dot products are zero by construction.
  const long long du = static_cast<long long>(w[0]) * u.d[0] + w[1] * u.d[1] + w[2] * u.d[2];
  const long long dv = static_cast<long long>(w[0]) * v.d[0] + w[1] * v.d[1] + w[2] * v.d[2];
  if (du != 0 || dv != 0) throw Error("kernel generator fails its congruences");

  const Line* line = find_prototype_line(w);
  if (!line) throw Error("kernel generator outside the prototype line set");
  return *line;
}

/// Validation path for solve_pair_kernel: enumerate every point of (Z_n)^3
/// satisfying both congruences and compare with the line's point set.
inline bool kernel_matches_enumeration(const Direction& u, const Direction& v,
                                       const Line& line, const Modulus& m,
                                       long long point_budget = 2'000'000) {
  if (cube_exceeds(m.n, point_budget))
    throw BudgetExceeded("kernel enumeration over n=" + std::to_string(m.n) +
                         " exceeds the point budget");
  std::set<FrequencyPoint> expected;
  for (const auto& p : line_points(line, m)) expected.insert(p);

  FrequencyPoint a;
  std::set<FrequencyPoint> solutions;
  for (long long x2 = 0; x2 < m.n; ++x2)
    for (long long x1 = 0; x1 < m.n; ++x1)
      for (long long x0 = 0; x0 < m.n; ++x0) {
        a.c = {x0, x1, x2};
        if (dot_mod(a, u, m) == 0 && dot_mod(a, v, m) == 0) solutions.insert(a);
      }
  return solutions == expected;
}

/// An unordered pair of distinct canonical directions, stored as indices into
/// direction_set() with first < second.
struct DirectionPair {
  int first = 0;
  int second = 1;

  auto operator<=>(const DirectionPair&) const = default;
};

/// One equivalence class of direction pairs under the signed permutations
/// combined with swapping the two directions. A group element acts on the
/// literal integer vectors: g.{u,v} = {g u, g v}. Closures pass through pairs
/// whose elements are negatives of canonical directions; members collects the
/// canonical pairs reached. Identifying u with -u elementwise would merge
/// these 14 classes into 9 coarser ones and is not applied.
struct PairOrbit {
  DirectionPair representative;                      // least member
  std::vector<DirectionPair> members;                // sorted, disjoint across orbits
  std::array<std::array<int, 3>, 2> reference_pair;  // distinguished signed pair
  std::array<int, 3> reference_kernel;               // kernel generator of reference_pair
};

namespace detail {

// Signed vectors are encoded as (v0+1)*9 + (v1+1)*3 + (v2+1) in [0, 27);
// a pair of codes packs into lo*27 + hi with lo < hi.
inline int encode_vec(const std::array<int, 3>& v) {
  return (v[0] + 1) * 9 + (v[1] + 1) * 3 + (v[2] + 1);
}
inline std::array<int, 3> decode_vec(int code) {
  return {code / 9 - 1, (code / 3) % 3 - 1, code % 3 - 1};
}
inline int pair_key(int a, int b) { return a < b ? a * 27 + b : b * 27 + a; }

/// A distinguished representative per orbit with its kernel generator, kept
/// in the customary listing order for report cross-referencing. Elements may
/// be negatives of canonical directions.
struct OrbitReference {
  std::array<std::array<int, 3>, 2> pair;
  std::array<int, 3> kernel;
};

inline const std::array<OrbitReference, 14>& orbit_reference_rows() {
  static const std::array<OrbitReference, 14> rows = {{
      {{{{1, 1, 1}, {1, 1, 0}}}, {1, -1, 0}},
      {{{{1, 1, 1}, {1, 1, -1}}}, {1, -1, 0}},
      {{{{1, 1, 1}, {1, 0, 0}}}, {0, 1, -1}},
      {{{{1, 1, 1}, {1, 0, -1}}}, {1, -2, 1}},
      {{{{1, 1, 1}, {1, -1, -1}}}, {0, 1, -1}},
      {{{{1, 1, 1}, {0, 0, -1}}}, {1, -1, 0}},
      {{{{1, 1, 1}, {0, -1, -1}}}, {0, 1, -1}},
      {{{{1, 1, 0}, {1, 0, 1}}}, {1, -1, -1}},
      {{{{1, 1, 0}, {1, 0, 0}}}, {0, 0, 1}},
      {{{{1, 1, 0}, {1, -1, 0}}}, {0, 0, 1}},
      {{{{1, 1, 0}, {0, 0, 1}}}, {1, -1, 0}},
      {{{{1, 1, 0}, {0, -1, 1}}}, {1, -1, -1}},
      {{{{1, 1, 0}, {0, -1, 0}}}, {0, 0, 1}},
      {{{{1, 0, 0}, {0, 1, 0}}}, {0, 0, 1}},
  }};
  return rows;
}

}  // namespace detail

/// Orbits of the 78 unordered direction pairs. Exactly 14; the member lists
/// are disjoint and cover all 78 pairs. Each orbit also carries the matching
/// reference row (see detail::orbit_reference_rows).
inline const std::vector<PairOrbit>& pair_orbits() {
  static const std::vector<PairOrbit> orbits = [] {
    using namespace detail;
    const auto& dirs = direction_set();
    const auto& group = signed_permutation_group();

    // canonical-direction index per vector code, -1 otherwise
    std::array<int, 27> dir_of_code;
    dir_of_code.fill(-1);
    for (int i = 0; i < 13; ++i) dir_of_code[encode_vec(dirs[i].d)] = i;

    // image of every code under every group element
    std::array<std::array<int, 48>, 27> image{};
    for (int code = 0; code < 27; ++code) {
      const auto v = decode_vec(code);
      for (int gi = 0; gi < 48; ++gi) image[code][gi] = encode_vec(group[gi].image(v));
    }

    std::set<int> visited;  // signed pair keys
    std::vector<PairOrbit> out;

    for (int i = 0; i < 13; ++i) {
      for (int j = i + 1; j < 13; ++j) {
        const int seed = pair_key(encode_vec(dirs[i].d), encode_vec(dirs[j].d));
        if (visited.count(seed)) continue;

        std::set<int> closure{seed};
        std::vector<int> frontier{seed};
        while (!frontier.empty()) {
          std::vector<int> next;
          for (int key : frontier) {
            const int a = key / 27, b = key % 27;
            for (int gi = 0; gi < 48; ++gi) {
              const int img = pair_key(image[a][gi], image[b][gi]);
              if (closure.insert(img).second) next.push_back(img);
            }
          }
          frontier = std::move(next);
        }

        PairOrbit orbit;
        for (int key : closure) {
          visited.insert(key);
          const int da = dir_of_code[key / 27];
          const int db = dir_of_code[key % 27];
          if (da >= 0 && db >= 0)
            orbit.members.push_back({std::min(da, db), std::max(da, db)});
        }
        std::sort(orbit.members.begin(), orbit.members.end());
        orbit.representative = orbit.members.front();

        int matched = -1;
        const auto& refs = orbit_reference_rows();
        for (int r = 0; r < 14; ++r) {
          const int key = pair_key(encode_vec(refs[r].pair[0]), encode_vec(refs[r].pair[1]));
          if (closure.count(key)) {
            if (matched >= 0) throw Error("pair orbit matches two reference rows");
            matched = r;
          }
        }
        if (matched < 0) throw Error("pair orbit matches no reference row");
        orbit.reference_pair = refs[matched].pair;
        orbit.reference_kernel = refs[matched].kernel;
        out.push_back(std::move(orbit));
      }
    }

    std::sort(out.begin(), out.end(), [](const PairOrbit& a, const PairOrbit& b) {
      return a.representative < b.representative;
    });

    std::size_t covered = 0;
    for (const auto& o : out) covered += o.members.size();
    if (out.size() != 14 || covered != 78)
      throw Error("pair orbit computation produced an unexpected partition");
    return out;
  }();
  return orbits;
}

/// Geometric type of a frequency point in the generic odd regime.
struct Classification {
  enum class Kind { zero, on_line, single_hyperplane, generic };

  Kind kind = Kind::generic;
  std::optional<Line> line;  // set iff kind == on_line
};

inline const char* to_string(Classification::Kind k) {
  switch (k) {
    case Classification::Kind::zero: return "zero";
    case Classification::Kind::on_line: return "on_line";
    case Classification::Kind::single_hyperplane: return "single_hyperplane";
    default: return "generic";
  }
}

/// Classify a point by orthogonality type. Nonzero points with mu >= 2 must
/// lie on exactly one prototype line; anything else raises
/// ClassificationViolation, which would falsify the line classification.
inline Classification classify(const FrequencyPoint& a, const Modulus& m) {
  require_generic_odd(m);
  if (a.is_zero()) return {Classification::Kind::zero, std::nullopt};
  const int mu = orthogonality_count(a, m);
  if (mu >= 2) {
    const Line* found = nullptr;
    int hits = 0;
    for (const Line& line : prototype_lines())
      if (line_contains(line, a, m)) {
        found = &line;
        ++hits;
      }
    if (hits != 1)
      throw ClassificationViolation(
          "point (" + std::to_string(a.c[0]) + "," + std::to_string(a.c[1]) + "," +
          std::to_string(a.c[2]) + ") mod " + std::to_string(m.n) + " has mu=" +
          std::to_string(mu) + " but lies on " + std::to_string(hits) + " prototype lines");
    return {Classification::Kind::on_line, *found};
  }
  return {mu == 1 ? Classification::Kind::single_hyperplane : Classification::Kind::generic,
          std::nullopt};
}

/// Expected orthogonality count at every nonzero point of a line.
inline int family_mu(LineFamily f) {
  switch (f) {
    case LineFamily::axis: return 4;
    case LineFamily::face_diagonal: return 4;
    case LineFamily::space_diagonal: return 3;
    default: return 2;
  }
}

/// Full-enumeration audit of the line decomposition. All counters are
/// violation counts except union_nonzero_size, which must equal 25(n-1).
struct CoverageReport {
  long long n = 0;
  long long union_nonzero_size = 0;
  long long expected_union_size = 0;              // 25(n-1)
  long long lines_with_wrong_point_count = 0;     // lines without exactly n points
  long long multiply_covered_nonzero_points = 0;  // nonzero points on >= 2 lines
  long long family_mu_violations = 0;             // nonzero line points with wrong mu
  long long set_mismatch_count = 0;               // {mu>=2} vs union symmetric difference

  bool pass() const {
    return union_nonzero_size == expected_union_size && lines_with_wrong_point_count == 0 &&
           multiply_covered_nonzero_points == 0 && family_mu_violations == 0 &&
           set_mismatch_count == 0;
  }
};

inline CoverageReport coverage_check(const Modulus& m, long long point_budget = 200'000'000) {
  require_generic_odd(m);
  if (cube_exceeds(m.n, point_budget))
    throw BudgetExceeded("coverage check over n=" + std::to_string(m.n) +
                         " exceeds the point budget");
  const long long n = m.n;
  CoverageReport report;
  report.n = n;
  report.expected_union_size = 25 * (n - 1);

  auto index_of = [n](const FrequencyPoint& a) {
    return a.c[0] + n * (a.c[1] + n * a.c[2]);
  };

  std::vector<unsigned char> cover(n * n * n, 0);
  for (const Line& line : prototype_lines()) {
    std::set<long long> distinct;
    for (const auto& p : line_points(line, m)) {
      const long long idx = index_of(p);
      distinct.insert(idx);
      if (cover[idx] < 255) ++cover[idx];
      if (!p.is_zero() && orthogonality_count(p, m) != family_mu(line.family))
        ++report.family_mu_violations;
    }
    if (static_cast<long long>(distinct.size()) != n) ++report.lines_with_wrong_point_count;
  }

  FrequencyPoint a;
  for (long long x2 = 0; x2 < n; ++x2)
    for (long long x1 = 0; x1 < n; ++x1)
      for (long long x0 = 0; x0 < n; ++x0) {
        a.c = {x0, x1, x2};
        const long long idx = index_of(a);
        if (a.is_zero()) continue;
        const bool on_union = cover[idx] > 0;
        if (cover[idx] > 1) ++report.multiply_covered_nonzero_points;
        if (on_union) ++report.union_nonzero_size;
        if (on_union != (orthogonality_count(a, m) >= 2)) ++report.set_mismatch_count;
      }
  return report;
}

}  // namespace queen3d
