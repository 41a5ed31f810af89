#include "grhgen/family.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace grhgen {

namespace {

mpz_class next_prime_after_power_of_ten(int a) {
  if (a < 0) throw std::invalid_argument("family exponent must be >= 0");
  mpz_class base;
  mpz_ui_pow_ui(base.get_mpz_t(), 10, static_cast<unsigned long>(a));
  mpz_class p;
  mpz_nextprime(p.get_mpz_t(), base.get_mpz_t());
  return p;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::vector<mpz_class> pure_field_coeffs(int degree, int sign, int a) {
  if (degree < 2) throw std::invalid_argument("pure family needs degree >= 2");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  mpz_class p = next_prime_after_power_of_ten(a);
  std::vector<mpz_class> coeffs(static_cast<size_t>(degree) + 1, mpz_class(0));
  coeffs[0] = sign > 0 ? p : mpz_class(-p);
  coeffs[static_cast<size_t>(degree)] = 1;
  return coeffs;
}

std::vector<mpz_class> biquadratic_coeffs(int a1, int a2) {
  mpz_class p1 = next_prime_after_power_of_ten(a1);
  mpz_class p2 = next_prime_after_power_of_ten(a2);
  if (p1 == p2) mpz_nextprime(p2.get_mpz_t(), p1.get_mpz_t());
  // (x^2 - (p1+p2))^2 - 4 p1 p2
  mpz_class s = p1 + p2, d = p1 - p2;
  return {d * d, 0, -2 * s, 0, 1};
}

std::string csv_header() {
  return "label,log_disc,loglog_disc,t_basic,t_improved,ratio,scaled";
}

std::string csv_line(const FamilyRow& row) {
  std::string s = row.label;
  s += ',';
  s += fmt17(row.log_disc);
  s += ',';
  s += fmt17(row.loglog_disc);
  s += ',';
  s += std::to_string(row.t_basic);
  s += ',';
  s += std::to_string(row.t_improved);
  s += ',';
  s += fmt17(row.ratio);
  s += ',';
  s += fmt17(row.scaled);
  return s;
}

void emit_plotdata(std::vector<FamilyRow> rows, std::ostream& out) {
  std::sort(rows.begin(), rows.end(),
            [](const FamilyRow& a, const FamilyRow& b) { return a.log_disc < b.log_disc; });
  out << "# columns: log_disc scaled(=ratio*loglog_disc^2)\n";
  for (const FamilyRow& r : rows) out << fmt17(r.log_disc) << ' ' << fmt17(r.scaled) << '\n';
}

double mean_scaled(const std::vector<FamilyRow>& rows) {
  if (rows.empty()) return 0.0;
  double s = 0.0;
  for (const FamilyRow& r : rows) s += r.scaled;
  return s / static_cast<double>(rows.size());
}

}  // namespace grhgen
