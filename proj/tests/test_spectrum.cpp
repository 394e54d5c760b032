#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <map>
#include <set>

#include "queen3d/spectrum.hpp"

using namespace queen3d;

namespace {

FrequencyPoint pt(long long a, long long b, long long c, const Modulus& m) {
  return FrequencyPoint::reduced({a, b, c}, m);
}

// Independent brute-force oracle: histogram of mu computed with its own
// modular arithmetic, no calls into the library's counting path.
std::map<int, long long> naive_histogram(long long n) {
  static const int dirs[13][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1},  {1, 1, 0},  {1, -1, 0},
                                  {1, 0, 1}, {1, 0, -1}, {0, 1, 1}, {0, 1, -1}, {1, 1, 1},
                                  {1, 1, -1}, {1, -1, 1}, {1, -1, -1}};
  std::map<int, long long> hist;
  for (long long x2 = 0; x2 < n; ++x2)
    for (long long x1 = 0; x1 < n; ++x1)
      for (long long x0 = 0; x0 < n; ++x0) {
        int mu = 0;
        for (const auto& d : dirs)
          if (((x0 * d[0] + x1 * d[1] + x2 * d[2]) % n + n) % n == 0) ++mu;
        ++hist[mu];
      }
  return hist;
}

std::map<int, long long> rows_as_map(const SpectrumTable& t) {
  std::map<int, long long> out;
  for (const auto& r : t.rows)
    if (r.multiplicity != 0) out[r.mu] = r.multiplicity;
  return out;
}

}  // namespace

TEST_CASE("eigenvalue formula") {
  const Modulus m5(5), m7(7);
  CHECK(eigenvalue(pt(0, 0, 0, m5), m5) == 52);
  CHECK(eigenvalue(pt(1, 1, 2, m5), m5) == -3);  // mu = 2
  CHECK(eigenvalue(pt(0, 0, 1, m7), m7) == 15);  // mu = 4

  for (long long n : {1, 2, 3, 4, 6, 9, 15})
    CHECK_THROWS_AS(eigenvalue(pt(0, 0, 0, Modulus(n)), Modulus(n)), NonGenericModulus);
}

TEST_CASE("multiplicity formula frozen values") {
  CHECK(multiplicity_formula(13, Modulus(5)) == 1);
  CHECK(multiplicity_formula(13, Modulus(49)) == 1);
  CHECK(multiplicity_formula(2, Modulus(5)) == 48);
  CHECK(multiplicity_formula(0, Modulus(5)) == 0);
  CHECK(multiplicity_formula(0, Modulus(7)) == 0);
  CHECK(multiplicity_formula(1, Modulus(11)) == 840);
  CHECK(multiplicity_formula(4, Modulus(11)) == 90);
  CHECK(multiplicity_formula(3, Modulus(11)) == 40);
  CHECK(multiplicity_formula(2, Modulus(11)) == 120);
  CHECK(multiplicity_formula(0, Modulus(11)) == 240);

  CHECK_THROWS_AS(multiplicity_formula(5, Modulus(5)), UnsupportedMuValue);
  CHECK_THROWS_AS(multiplicity_formula(12, Modulus(5)), UnsupportedMuValue);
  CHECK_THROWS_AS(multiplicity_formula(-1, Modulus(5)), UnsupportedMuValue);
  CHECK_THROWS_AS(multiplicity_formula(2, Modulus(9)), NonGenericModulus);
}

TEST_CASE("formula table for n=5 matches the worked example") {
  const SpectrumTable t = spectrum_by_formula(Modulus(5));
  REQUIRE(t.rows.size() == 6);
  CHECK(t.method == Method::formula);
  CHECK(t.regime == Regime::generic_odd);
  CHECK(t.rows[0] == SpectrumRow{13, 52, 1});
  CHECK(t.rows[1] == SpectrumRow{4, 7, 36});
  CHECK(t.rows[2] == SpectrumRow{3, 2, 16});
  CHECK(t.rows[3] == SpectrumRow{2, -3, 48});
  CHECK(t.rows[4] == SpectrumRow{1, -8, 24});
  CHECK(t.rows[5] == SpectrumRow{0, -13, 0});
}

TEST_CASE("formula table for n=11") {
  const SpectrumTable t = spectrum_by_formula(Modulus(11));
  REQUIRE(t.rows.size() == 6);
  CHECK(t.rows[0] == SpectrumRow{13, 130, 1});
  CHECK(t.rows[1] == SpectrumRow{4, 31, 90});
  CHECK(t.rows[2] == SpectrumRow{3, 20, 40});
  CHECK(t.rows[3] == SpectrumRow{2, 9, 120});
  CHECK(t.rows[4] == SpectrumRow{1, -2, 840});
  CHECK(t.rows[5] == SpectrumRow{0, -13, 240});
}

TEST_CASE("lambda is congruent to -13 mod n in every formula row") {
  for (long long n : {5, 7, 11, 13, 25, 49}) {
    for (const auto& r : spectrum_by_formula(Modulus(n)).rows) {
      CHECK(((r.lambda + 13) % n) == 0);
      CHECK(r.multiplicity >= 0);
    }
  }
}

TEST_CASE("multiplicity polynomials sum to n^3") {
  // M_0 + M_1 + 25(n-1) + 1 == n^3 checked at several points
  for (long long n : {5, 7, 11, 13, 17, 25, 49, 101}) {
    const Modulus m(n);
    const long long total = multiplicity_formula(0, m) + multiplicity_formula(1, m) +
                            25 * (n - 1) + 1;
    CHECK(total == n * n * n);
  }
}

TEST_CASE("enumerated histogram equals the independent oracle") {
  for (long long n : {1, 2, 3, 4, 5, 6, 9}) {
    const auto hist = mu_histogram(Modulus(n));
    const auto expected = naive_histogram(n);
    for (int mu = 0; mu < 14; ++mu) {
      const auto it = expected.find(mu);
      CHECK(hist[mu] == (it == expected.end() ? 0 : it->second));
    }
  }
}

TEST_CASE("enumeration equals formula across the generic test range") {
  for (long long n : {5, 7, 11, 13, 17, 19, 23, 25, 29, 35, 49}) {
    const Modulus m(n);
    CHECK(tables_match(spectrum_by_formula(m), spectrum_by_enumeration(m)));
  }
}

TEST_CASE("enumeration frozen non-generic histograms") {
  // n=1: the single point scores 13
  const SpectrumTable t1 = spectrum_by_enumeration(Modulus(1));
  REQUIRE(t1.rows.size() == 1);
  CHECK(t1.rows[0] == SpectrumRow{13, 0, 1});
  CHECK(t1.regime == Regime::non_generic);

  // n=2: mu values 13,7,6,4 appear
  CHECK(rows_as_map(spectrum_by_enumeration(Modulus(2))) ==
        std::map<int, long long>{{13, 1}, {7, 3}, {6, 1}, {4, 3}});

  // n=6
  CHECK(rows_as_map(spectrum_by_enumeration(Modulus(6))) ==
        std::map<int, long long>{{13, 1}, {7, 3}, {6, 1}, {4, 47}, {3, 8}, {2, 60}, {1, 96}});

  // n=9 (3 | n)
  CHECK(rows_as_map(spectrum_by_enumeration(Modulus(9))) ==
        std::map<int, long long>{{13, 1}, {4, 80}, {3, 24}, {2, 72}, {1, 504}, {0, 48}});
}

TEST_CASE("n=7 table has the polynomial multiplicities") {
  const SpectrumTable t = spectrum_by_enumeration(Modulus(7));
  CHECK(rows_as_map(t) ==
        std::map<int, long long>{{13, 1}, {4, 54}, {3, 24}, {2, 72}, {1, 192}});
  CHECK(t.rows[4].lambda == -6);
}

TEST_CASE("at most 14 distinct classes ever appear") {
  for (long long n = 1; n <= 14; ++n)
    CHECK(spectrum_by_enumeration(Modulus(n)).rows.size() <= 14);
}

TEST_CASE("generic tables have exactly the six expected classes") {
  for (long long n : {5, 7, 11, 17, 25}) {
    std::set<int> mus;
    for (const auto& r : spectrum_by_enumeration(Modulus(n)).rows) mus.insert(r.mu);
    const std::set<int> all{0, 1, 2, 3, 4, 13};
    const std::set<int> small{1, 2, 3, 4, 13};  // mu = 0 absent at n = 5, 7
    CHECK(mus == ((n == 5 || n == 7) ? small : all));
  }
}

TEST_CASE("enumeration budget") {
  CHECK_THROWS_AS(spectrum_by_enumeration(Modulus(100), {1000, 1}), BudgetExceeded);
  CHECK_NOTHROW(spectrum_by_enumeration(Modulus(10), {1000, 1}));
}

TEST_CASE("worker count never changes the result") {
  for (long long n : {6, 7, 13}) {
    const Modulus m(n);
    const auto reference = spectrum_by_enumeration(m, {200'000'000, 1});
    for (int workers : {2, 3, 5, 8}) {
      const auto parallel = spectrum_by_enumeration(m, {200'000'000, workers});
      CHECK(reference.rows == parallel.rows);
    }
  }
}

TEST_CASE("tables_match drops zero rows before comparing") {
  const Modulus m(5);
  const auto formula = spectrum_by_formula(m);       // carries the M_0 = 0 row
  const auto enumerated = spectrum_by_enumeration(m);  // omits it
  REQUIRE(formula.rows.size() == 6);
  REQUIRE(enumerated.rows.size() == 5);
  CHECK(tables_match(formula, enumerated));

  auto tampered = enumerated;
  tampered.rows[2].multiplicity += 1;
  CHECK_FALSE(tables_match(formula, tampered));
}

TEST_CASE("identity report for the n=5 table") {
  const auto report = verify_identities(spectrum_by_formula(Modulus(5)));
  REQUIRE(report.checks.size() == 4);
  CHECK(report.all_passed());

  CHECK(report.checks[0].name == "sum_multiplicity");
  CHECK(report.checks[0].lhs == 125);
  CHECK(report.checks[1].name == "sum_mu_weighted");
  CHECK(report.checks[1].lhs == 325);
  CHECK(report.checks[2].name == "eigenvalue_sum");
  CHECK(report.checks[2].lhs == 0);
  CHECK(report.checks[3].name == "eigenvalue_square_sum");
  CHECK(report.checks[3].lhs == 6500);
  CHECK(report.checks[3].rhs == 6500);
}

TEST_CASE("identity report skips eigenvalue identities off-regime") {
  const auto report = verify_identities(spectrum_by_enumeration(Modulus(6)));
  REQUIRE(report.checks.size() == 4);
  CHECK(report.checks[0].status == CheckStatus::pass);
  CHECK(report.checks[1].status == CheckStatus::pass);
  CHECK(report.checks[2].status == CheckStatus::skipped);
  CHECK(report.checks[3].status == CheckStatus::skipped);
  CHECK(report.all_passed());  // skipped checks do not fail the report
}

TEST_CASE("identity report flags a tampered table") {
  auto table = spectrum_by_enumeration(Modulus(7));
  table.rows[1].multiplicity -= 1;
  const auto report = verify_identities(table);
  CHECK_FALSE(report.all_passed());
  CHECK(report.checks[0].status == CheckStatus::fail);
  CHECK(report.checks[0].lhs == 342);
  CHECK(report.checks[0].rhs == 343);
}

TEST_CASE("universal identities hold for every small n on enumeration output") {
  for (long long n = 1; n <= 12; ++n) {
    const auto report = verify_identities(spectrum_by_enumeration(Modulus(n)));
    CHECK(report.checks[0].status == CheckStatus::pass);
    CHECK(report.checks[1].status == CheckStatus::pass);
  }
}
