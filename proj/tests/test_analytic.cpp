#include <doctest.h>

#include <cmath>
#include <random>

#include "grhgen/analytic.hpp"
#include "grhgen/sieve.hpp"
#include "oracles.hpp"

using grhgen::IdealNormTable;
using grhgen::NumberField;
using namespace grhgen::constants;

namespace {

// reference series at long double precision, no reflection shortcuts
long double li2_series_oracle(long double x, int terms = 400) {
  long double s = 0.0L, pw = x;
  for (int k = 1; k <= terms; ++k) {
    s += pw / (static_cast<long double>(k) * k);
    pw *= x;
  }
  return s;
}

long double ti2_series_oracle(long double y, int terms = 400) {
  long double s = 0.0L, pw = y, y2 = y * y;
  for (int k = 0; k <= terms; ++k) {
    long double odd = 2.0L * k + 1.0L;
    s += (k % 2 ? -1.0L : 1.0L) * pw / (odd * odd);
    pw *= y2;
  }
  return s;
}

NumberField gauss_field() {
  return grhgen::new_field({mpz_class(1), mpz_class(0), mpz_class(1)});
}

}  // namespace

TEST_CASE("dilog endpoints and midpoint") {
  CHECK(grhgen::dilog(0.0) == 0.0);
  CHECK(grhgen::dilog(1.0) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-15));
  // direct series summation oracle at x = 1/2
  double expected = static_cast<double>(li2_series_oracle(0.5L, 60));
  CHECK(std::abs(grhgen::dilog(0.5) - expected) < 1e-13);
  CHECK(std::abs(grhgen::dilog(0.5) - 0.5822405264650125) < 1e-12);
  CHECK_THROWS_AS(grhgen::dilog(-0.1), std::domain_error);
  CHECK_THROWS_AS(grhgen::dilog(1.1), std::domain_error);
}

TEST_CASE("dilog reflection identity on a 1000-point grid") {
  for (int i = 1; i < 1000; ++i) {
    double x = i / 1000.0;
    double lhs = grhgen::dilog(x) + grhgen::dilog(1.0 - x);
    double rhs = kPi * kPi / 6.0 - std::log(x) * std::log(1.0 - x);
    CHECK(std::abs(lhs - rhs) <= 1e-12);
  }
}

TEST_CASE("dilog against the series oracle across the interval") {
  for (int i = 0; i <= 80; ++i) {
    double x = i / 100.0;  // oracle converges acceptably up to 0.8
    double expected = static_cast<double>(li2_series_oracle(x));
    CHECK(std::abs(grhgen::dilog(x) - expected) < 1e-12);
  }
}

TEST_CASE("ti2 endpoints, midpoint, and series agreement") {
  CHECK(grhgen::ti2(0.0) == 0.0);
  CHECK(grhgen::ti2(1.0) == doctest::Approx(kCatalan).epsilon(1e-15));
  double expected = static_cast<double>(ti2_series_oracle(0.5L));
  CHECK(std::abs(grhgen::ti2(0.5) - expected) < 1e-13);
  CHECK(std::abs(grhgen::ti2(0.5) - 0.4872223582945223) < 1e-12);
  for (int i = 0; i <= 95; ++i) {
    // the alternating series oracle loses accuracy very close to 1
    double y = i / 100.0;
    long double oracle = ti2_series_oracle(static_cast<long double>(y), 40000);
    CHECK(std::abs(grhgen::ti2(y) - static_cast<double>(oracle)) < 1e-12);
  }
  // near 1, compare against Catalan minus the quadrature of atan(t)/t
  for (double y : {0.96, 0.98, 0.99, 0.999}) {
    double tail = oracles::adaptive_simpson(
        [](double t) { return std::atan(t) / t; }, y, 1.0, 1e-13);
    CHECK(std::abs(grhgen::ti2(y) - (kCatalan - tail)) < 1e-11);
  }
  CHECK_THROWS_AS(grhgen::ti2(-0.5), std::domain_error);
}

TEST_CASE("arch_terms endpoints") {
  grhgen::ArchTerms zero = grhgen::arch_terms(0.0);
  CHECK(zero.arch_r1 == 0.0);
  CHECK(zero.arch_n == 0.0);
  grhgen::ArchTerms far = grhgen::arch_terms(700.0);
  CHECK(far.arch_r1 == doctest::Approx(4.0 * kCatalan).epsilon(1e-14));
  CHECK(far.arch_n == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-14));
  CHECK_THROWS_AS(grhgen::arch_terms(-1.0), std::domain_error);
}

TEST_CASE("arch_terms match adaptive quadrature of the defining integrals") {
  for (double L : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
    auto triangle = [L](double x) { return x < L ? L - x : 0.0; };
    oracles::ArchQuadrature q = oracles::arch_by_quadrature(triangle, L, L, 1.0);
    grhgen::ArchTerms a = grhgen::arch_terms(L);
    CHECK(std::abs(a.arch_r1 - q.cosh_integral) <= 1e-9);
    CHECK(std::abs(a.arch_n - q.sinh_integral) <= 1e-9);
    CHECK(a.arch_r1 >= 0.0);
    CHECK(a.arch_n >= 0.0);
  }
}

TEST_CASE("prime_sum basics") {
  // a table with no entries below its limit contributes nothing
  IdealNormTable empty = IdealNormTable::from_records("none", 50.0, {});
  CHECK(grhgen::prime_sum(empty, 0.0) == 0.0);
  CHECK(grhgen::prime_sum(empty, std::log(49.0)) == 0.0);

  // a single prime ideal of norm 4 (p = 2, f = 2)
  grhgen::SplitRecord rec;
  rec.p = 2;
  rec.degrees = {{2, 1}};
  IdealNormTable single = IdealNormTable::from_records("one", 5.0, {rec});
  double L = std::log(5.0);
  double expected = 2.0 * std::log(4.0) * (L - std::log(4.0)) / 2.0;
  CHECK(grhgen::prime_sum(single, L) == doctest::Approx(expected).epsilon(1e-14));

  // coverage contract
  CHECK_THROWS_AS(grhgen::prime_sum(single, std::log(6.0)), grhgen::table_too_small);
}

TEST_CASE("prime_sum against a double-loop oracle with brute-force splitting") {
  NumberField f = gauss_field();
  IdealNormTable t(f);
  double L = std::log(50.0);
  t = grhgen::extend_table(std::move(t), 50.0, f);

  double oracle = 0.0;
  for (uint64_t p : grhgen::sieve_primes(50)) {
    oracles::bf::Factorization fact = oracles::bf::factor(f.poly, p);
    for (auto [fdeg, count] : fact.distinct_per_degree) {
      double logq = fdeg * std::log(static_cast<double>(p));
      for (int m = 1; m <= 6; ++m) {
        double x = m * logq;
        if (x >= L) break;
        oracle += 2.0 * count * logq * (L - x) * std::exp(-0.5 * x);
      }
    }
  }
  CHECK(std::abs(grhgen::prime_sum(t, L) - oracle) <= 1e-10);
}

TEST_CASE("prime_sum is monotone in L") {
  NumberField f = gauss_field();
  IdealNormTable t(f);
  t = grhgen::extend_table(std::move(t), 120.0, f);
  double prev = 0.0;
  for (int i = 0; i <= 40; ++i) {
    double L = i * std::log(119.0) / 40.0;
    double v = grhgen::prime_sum(t, L);
    CHECK(v >= prev - 1e-12);
    prev = v;
  }
}

TEST_CASE("ell at zero and continuity on a grid") {
  NumberField f = gauss_field();
  IdealNormTable t(f);
  t = grhgen::extend_table(std::move(t), 120.0, f);
  CHECK(grhgen::ell(f, t, 0.0).value == 0.0);

  // |ell(L+h) - ell(L)| <= K h with a generous desk-scale K
  double h = 1e-4;
  double lip = 0.0;
  for (int i = 1; i < 60; ++i) {
    double L = i * 4.5 / 60.0;
    double d = std::abs(grhgen::ell(f, t, L + h).value - grhgen::ell(f, t, L).value);
    lip = std::max(lip, d / h);
  }
  CHECK(lip < 500.0);

  grhgen::EllValue v = grhgen::ell(f, t, 2.0);
  double disc_part = f.log_abs_disc - f.n * kEulerGamma - f.n * std::log(8.0 * kPi) -
                     f.r1 * kPi / 2.0;
  CHECK(v.value == doctest::Approx(-v.prime_sum + 2.0 * disc_part + f.r1 * v.arch_r1 +
                                   f.n * v.arch_n)
                       .epsilon(1e-14));
  CHECK(v.arch_r1 >= 0.0);
  CHECK(v.arch_n >= 0.0);
}

TEST_CASE("homogenized check equals ell/L and is dominated by the classical check") {
  std::mt19937 rng(13131);
  std::uniform_real_distribution<double> pick_L(0.3, 8.0);
  auto corpus = oracles::corpus30();
  for (int trial = 0; trial < 100; ++trial) {
    NumberField f = oracles::field_from_longs(corpus[static_cast<size_t>(trial) % corpus.size()]);
    IdealNormTable t(f);
    double L = pick_L(rng);
    t = grhgen::extend_table(std::move(t), std::exp(L) + 1.0, f);
    grhgen::EllValue v = grhgen::ell(f, t, L);
    double homo = grhgen::grh_check_homo(f, t, L);
    CHECK(std::abs(v.value - L * homo) <= 1e-9 * (1.0 + std::abs(v.value)));
    // the classical corollary drops nonnegative dilogarithm corrections
    double coro = grhgen::grh_check_coro(f, t, L);
    CHECK(homo <= coro + 1e-12);
  }
}

TEST_CASE("classical check is strictly decreasing in log T") {
  NumberField f = gauss_field();
  IdealNormTable t(f);
  t = grhgen::extend_table(std::move(t), 450.0, f);
  double prev = grhgen::grh_check_coro(f, t, 0.5);
  for (int i = 1; i <= 60; ++i) {
    double logt = 0.5 + i * 0.09;
    double cur = grhgen::grh_check_coro(f, t, logt);
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("scaling the test function leaves the sign decision alone") {
  // ell is linear in F: evaluating at c*F_L scales the value by c > 0
  NumberField f = gauss_field();
  IdealNormTable t(f);
  t = grhgen::extend_table(std::move(t), 60.0, f);
  double L = 3.0;
  grhgen::EllValue v = grhgen::ell(f, t, L);
  double direct = oracles::ell_by_quadrature(
      f, t, [L](double x) { return x < L ? L - x : 0.0; }, L, L, 1.0);
  CHECK(std::abs(v.value - direct) <= 1e-8 * (1.0 + std::abs(v.value)));
  double scaled = oracles::ell_by_quadrature(
      f, t, [L](double x) { return x < L ? 3.5 * (L - x) : 0.0; }, 3.5 * L, L, 3.5);
  CHECK(std::abs(scaled - 3.5 * direct) <= 1e-7 * (1.0 + std::abs(direct)));
}
