#ifndef GRHGEN_FAMILY_HPP
#define GRHGEN_FAMILY_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "grhgen/number_field.hpp"

namespace grhgen {

/// One batch result: a field and how much the improved bound gained,
/// plus the scale-normalized ratio used for cross-family comparison.
struct FamilyRow {
  std::string label;
  double log_disc = 0.0;
  double loglog_disc = 0.0;
  uint64_t t_basic = 0;
  uint64_t t_improved = 0;
  double ratio = 0.0;   // t_improved / t_basic
  double scaled = 0.0;  // ratio * loglog_disc^2
};

/// x^degree +- nextprime(10^a), constant term first.
std::vector<mpz_class> pure_field_coeffs(int degree, int sign, int a);

/// Minimal polynomial of sqrt(p1) + sqrt(p2) with p_i = nextprime(10^{a_i});
/// equal exponents take the next two distinct primes.
std::vector<mpz_class> biquadratic_coeffs(int a1, int a2);

std::string csv_header();
std::string csv_line(const FamilyRow& row);

/// Two-column (log_disc, scaled) data sorted by log_disc, with a header
/// comment naming the columns.
void emit_plotdata(std::vector<FamilyRow> rows, std::ostream& out);

double mean_scaled(const std::vector<FamilyRow>& rows);

}  // namespace grhgen

#endif
