#include "grhgen/analytic.hpp"

#include <array>
#include <cmath>

namespace grhgen {

namespace {

using constants::kCatalan;
using constants::kEulerGamma;
using constants::kPi;

const double kPi2Over6 = kPi * kPi / 6.0;
const double kLog8Pi = std::log(8.0 * kPi);

struct KahanSum {
  double sum = 0.0, carry = 0.0;
  void add(double v) {
    double y = v - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// Li2 series, |x| <= 1/2
double li2_series(double x) {
  KahanSum s;
  double term = x;
  for (int k = 1; k < 200; ++k) {
    s.add(term / (static_cast<double>(k) * k));
    term *= x;
    if (std::abs(term) < 1e-18) break;
  }
  return s.sum;
}

// pi^2/6 - Li2(1-u), conditioned on u = 1 - x being known exactly
double li2_deficit(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 0.5) return kPi2Over6 - li2_series(1.0 - u);
  return li2_series(u) + std::log1p(-u) * std::log(u);
}

// Ti2 series, y <= ~0.75
double ti2_series(double y) {
  KahanSum s;
  double y2 = y * y;
  double pw = y;
  for (int k = 0; k < 200; ++k) {
    double odd = 2.0 * k + 1.0;
    double term = pw / (odd * odd);
    s.add((k & 1) ? -term : term);
    pw *= y2;
    if (pw < 1e-18) break;
  }
  return s.sum;
}

// 32-point Gauss-Legendre nodes/weights on [-1, 1], computed once by
// Newton iteration on the Legendre polynomial.
struct GaussLegendre32 {
  std::array<double, 32> node{}, weight{};
  GaussLegendre32() {
    constexpr int n = 32;
    for (int i = 0; i < n; ++i) {
      double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      node[i] = x;
      weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }
};

// integral of atan(t)/t over [y, 1]  ( = C - Ti2(y) )
double ti2_tail_integral(double y) {
  static const GaussLegendre32 gl;
  double mid = 0.5 * (1.0 + y), half = 0.5 * (1.0 - y);
  KahanSum s;
  for (int i = 0; i < 32; ++i) {
    double t = mid + half * gl.node[i];
    s.add(gl.weight[i] * std::atan(t) / t);
  }
  return half * s.sum;
}

double ti2_deficit(double y) {
  if (y >= 1.0) return 0.0;
  if (y > 0.75) return ti2_tail_integral(y);
  return kCatalan - ti2_series(y);
}

void check_coverage(const IdealNormTable& table, double L) {
  if (L > std::log(table.limit()) + 1e-9)
    throw table_too_small("norm table limit " + std::to_string(table.limit()) +
                          " does not cover e^" + std::to_string(L));
}

}  // namespace

double dilog(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("dilog domain is [0,1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return kPi2Over6;
  if (x <= 0.5) return li2_series(x);
  return kPi2Over6 - std::log(x) * std::log1p(-x) - li2_series(1.0 - x);
}

double ti2(double y) {
  if (!(y >= 0.0 && y <= 1.0)) throw std::domain_error("ti2 domain is [0,1]");
  if (y == 1.0) return kCatalan;
  if (y > 0.75) return kCatalan - ti2_tail_integral(y);
  return ti2_series(y);
}

ArchTerms arch_terms(double L) {
  if (!(L >= 0.0)) throw std::domain_error("arch_terms needs L >= 0");
  // u1 = 1 - e^{-L/2}, u2 = 1 - e^{-L}, formed without cancellation
  double u1 = -std::expm1(-0.5 * L);
  double u2 = -std::expm1(-L);
  ArchTerms a;
  a.arch_r1 = 4.0 * ti2_deficit(1.0 - u1);
  a.arch_n = 4.0 * li2_deficit(u1) - li2_deficit(u2);
  return a;
}

double prime_sum(const IdealNormTable& table, double L) {
  if (!(L >= 0.0)) throw std::domain_error("prime_sum needs L >= 0");
  check_coverage(table, L);
  KahanSum s;
  for (const IdealEntry& e : table.entries()) {
    if (e.log_norm >= L) break;  // entries are sorted by norm
    double weight = e.count * e.log_norm;
    for (int m = 1; m * e.log_norm < L; ++m) {
      double x = m * e.log_norm;
      s.add(weight * (L - x) * std::exp(-0.5 * x));
    }
  }
  return 2.0 * s.sum;
}

EllValue ell(const NumberField& field, const IdealNormTable& table, double L) {
  EllValue v;
  v.L = L;
  v.prime_sum = prime_sum(table, L);
  ArchTerms a = arch_terms(L);
  v.arch_r1 = a.arch_r1;
  v.arch_n = a.arch_n;
  double disc_part = field.log_abs_disc - field.n * kEulerGamma - field.n * kLog8Pi -
                     field.r1 * kPi / 2.0;
  v.value = -v.prime_sum + L * disc_part + field.r1 * v.arch_r1 + field.n * v.arch_n;
  return v;
}

double grh_check_coro(const NumberField& field, const IdealNormTable& table, double log_t) {
  if (!(log_t > 0.0)) throw std::domain_error("grh_check_coro needs log T > 0");
  check_coverage(table, log_t);
  KahanSum lhs;
  for (const IdealEntry& e : table.entries()) {
    if (e.log_norm >= log_t) break;
    for (int m = 1; m * e.log_norm < log_t; ++m) {
      double x = m * e.log_norm;
      lhs.add(e.count * e.log_norm * std::exp(-0.5 * x) * (1.0 - x / log_t));
    }
  }
  const double c1 = kPi * kPi / 2.0;
  const double c2 = 4.0 * kCatalan;
  double rhs = field.log_abs_disc -
               field.n * (kEulerGamma + kLog8Pi - c1 / log_t) -
               field.r1 * (kPi / 2.0 - c2 / log_t);
  return rhs - 2.0 * lhs.sum;
}

double grh_check_homo(const NumberField& field, const IdealNormTable& table, double L) {
  if (!(L > 0.0)) throw std::domain_error("grh_check_homo needs L > 0");
  return ell(field, table, L).value / L;
}

}  // namespace grhgen
