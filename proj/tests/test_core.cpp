#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "queen3d/core.hpp"

using namespace queen3d;

namespace {

FrequencyPoint pt(long long a, long long b, long long c, const Modulus& m) {
  return FrequencyPoint::reduced({a, b, c}, m);
}

}  // namespace

TEST_CASE("modulus validation and regime predicate") {
  CHECK_THROWS_AS(Modulus(0), std::invalid_argument);
  CHECK_THROWS_AS(Modulus(-3), std::invalid_argument);

  CHECK_FALSE(Modulus(1).generic_odd());
  CHECK_FALSE(Modulus(2).generic_odd());
  CHECK_FALSE(Modulus(3).generic_odd());
  CHECK_FALSE(Modulus(9).generic_odd());
  CHECK_FALSE(Modulus(15).generic_odd());
  CHECK_FALSE(Modulus(6).generic_odd());
  CHECK(Modulus(5).generic_odd());
  CHECK(Modulus(7).generic_odd());
  CHECK(Modulus(25).generic_odd());
  CHECK(Modulus(49).generic_odd());
}

TEST_CASE("direction set has 13 canonical members in listing order") {
  const auto& dirs = direction_set();
  REQUIRE(dirs.size() == 13);
  CHECK(dirs[0] == Direction{{1, 0, 0}});
  CHECK(dirs[9] == Direction{{1, 1, 1}});

  for (const auto& u : dirs) {
    int first_nonzero = 0;
    for (int c : u.d) {
      CHECK((c == -1 || c == 0 || c == 1));
      if (first_nonzero == 0 && c != 0) first_nonzero = c;
    }
    CHECK(first_nonzero == 1);
  }

  // one representative per opposite pair: u != -v for all u, v
  for (const auto& u : dirs)
    for (const auto& v : dirs)
      CHECK_FALSE((u.d[0] == -v.d[0] && u.d[1] == -v.d[1] && u.d[2] == -v.d[2]));

  // all distinct
  std::set<std::array<int, 3>> unique;
  for (const auto& u : dirs) unique.insert(u.d);
  CHECK(unique.size() == 13);
}

TEST_CASE("frequency point reduction") {
  const Modulus m(5);
  CHECK(pt(1, -1, 2, m) == pt(1, 4, 2, m));
  CHECK(pt(6, 10, -7, m).c == std::array<long long, 3>{1, 0, 3});
  CHECK(pt(0, 0, 0, m).is_zero());
  CHECK_FALSE(pt(0, 0, 1, m).is_zero());
}

TEST_CASE("dot_mod examples") {
  const auto& dirs = direction_set();
  for (long long n : {1, 2, 5, 7}) {
    const Modulus m(n);
    for (const auto& u : dirs) CHECK(dot_mod(pt(0, 0, 0, m), u, m) == 0);
  }
  const Modulus m7(7);
  CHECK(dot_mod(pt(1, 2, 3, m7), Direction{{1, 1, -1}}, m7) == 0);
  const Modulus m5(5);
  CHECK(dot_mod(pt(1, 0, 0, m5), Direction{{1, 0, 0}}, m5) == 1);
  // negative dot lands in [0, n)
  CHECK(dot_mod(pt(0, 0, 1, m5), Direction{{1, 0, -1}}, m5) == 4);
}

TEST_CASE("orthogonality count frozen values") {
  CHECK(orthogonality_count(pt(0, 0, 0, Modulus(5)), Modulus(5)) == 13);
  CHECK(orthogonality_count(pt(0, 0, 0, Modulus(12)), Modulus(12)) == 13);
  CHECK(orthogonality_count(pt(0, 0, 1, Modulus(7)), Modulus(7)) == 4);
  CHECK(orthogonality_count(pt(1, 1, 2, Modulus(5)), Modulus(5)) == 2);
  CHECK(orthogonality_count(pt(1, 4, 2, Modulus(5)), Modulus(5)) == 2);
  CHECK(orthogonality_count(pt(1, 2, 3, Modulus(7)), Modulus(7)) == 1);
}

TEST_CASE("orthogonality count range and hyperplane mass identity") {
  // sum over all points of mu equals 13 n^2: each hyperplane has n^2 points.
  for (long long n = 1; n <= 8; ++n) {
    const Modulus m(n);
    long long total = 0;
    FrequencyPoint a;
    for (long long x2 = 0; x2 < n; ++x2)
      for (long long x1 = 0; x1 < n; ++x1)
        for (long long x0 = 0; x0 < n; ++x0) {
          a.c = {x0, x1, x2};
          const int mu = orthogonality_count(a, m);
          CHECK(mu >= 0);
          CHECK(mu <= 13);
          total += mu;
        }
    CHECK(total == 13 * n * n);
  }
}

TEST_CASE("signed permutation group structure") {
  const auto& group = signed_permutation_group();
  REQUIRE(group.size() == 48);
  CHECK(group.front() == SignedPermutation::identity());

  std::set<std::pair<std::array<int, 3>, std::array<int, 3>>> unique;
  for (const auto& g : group) unique.insert({g.perm, g.sign});
  CHECK(unique.size() == 48);

  // closed under composition and inversion
  auto member = [&](const SignedPermutation& g) {
    for (const auto& h : group)
      if (h == g) return true;
    return false;
  };
  for (const auto& g : group) {
    CHECK(member(g.inverse()));
    CHECK(g.after(g.inverse()) == SignedPermutation::identity());
  }
  for (const auto& g : group)
    for (const auto& h : group) CHECK(member(g.after(h)));
}

TEST_CASE("group action on vectors composes correctly") {
  const auto& group = signed_permutation_group();
  const std::array<int, 3> v{1, -1, 2};
  for (const auto& g : group)
    for (const auto& h : group) CHECK(g.after(h).image(v) == g.image(h.image(v)));
}

TEST_CASE("normalized action maps the direction set onto itself") {
  const auto& dirs = direction_set();
  for (const auto& g : signed_permutation_group()) {
    std::set<std::array<int, 3>> image;
    for (const auto& u : dirs) {
      const Direction w = canonical_direction(g.image(u.d));
      CHECK(direction_index(w) >= 0);
      image.insert(w.d);
    }
    CHECK(image.size() == 13);
  }
}

TEST_CASE("point action examples and group action law") {
  const Modulus m(5);
  const auto a = pt(1, 2, 3, m);

  CHECK(apply(SignedPermutation::identity(), a, m) == a);

  SignedPermutation swap01;
  swap01.perm = {1, 0, 2};
  CHECK(apply(swap01, a, m) == pt(2, 1, 3, m));

  const auto& group = signed_permutation_group();
  for (const auto& g : group)
    for (const auto& h : group) CHECK(apply(g.after(h), a, m) == apply(g, apply(h, a, m), m));
}

TEST_CASE("orthogonality count is invariant under the group action") {
  const auto& group = signed_permutation_group();

  // exhaustive at n=5
  const Modulus m5(5);
  FrequencyPoint a;
  for (long long x2 = 0; x2 < 5; ++x2)
    for (long long x1 = 0; x1 < 5; ++x1)
      for (long long x0 = 0; x0 < 5; ++x0) {
        a.c = {x0, x1, x2};
        const int mu = orthogonality_count(a, m5);
        for (const auto& g : group) CHECK(orthogonality_count(apply(g, a, m5), m5) == mu);
      }

  // sampled at n=11
  const Modulus m11(11);
  for (long long s = 0; s < 50; ++s) {
    a.c = {(s * 7 + 1) % 11, (s * 5 + 3) % 11, (s * 3 + 4) % 11};
    const int mu = orthogonality_count(a, m11);
    for (const auto& g : group) CHECK(orthogonality_count(apply(g, a, m11), m11) == mu);
  }
}

TEST_CASE("cube_exceeds guards") {
  CHECK_FALSE(cube_exceeds(5, 125));
  CHECK(cube_exceeds(5, 124));
  CHECK(cube_exceeds(3'000'000, 9'000'000'000'000'000'000LL));
  CHECK_FALSE(cube_exceeds(2'000'000, 9'000'000'000'000'000'000LL));
  CHECK(cube_exceeds(1, 0));
}
