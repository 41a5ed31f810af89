#ifndef GRHGEN_INT_POLY_HPP
#define GRHGEN_INT_POLY_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace grhgen {

/// Monic integer polynomial, constant term first.  The defining polynomial
/// of a number field; degree >= 2 and leading coefficient exactly 1.
struct IntPolynomial {
  std::vector<mpz_class> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const mpz_class& leading() const { return coeffs.back(); }

  mpz_class operator()(const mpz_class& x) const;
};

/// Validates monicity and degree >= 2; throws std::invalid_argument.
IntPolynomial make_polynomial(std::vector<mpz_class> coeffs);

/// Parses "c0,c1,...,cn" (constant term first).
IntPolynomial parse_polynomial(const std::string& text);

/// "c0,c1,...,cn" in decimal; the canonical form hashed into field digests.
std::string coefficient_string(const IntPolynomial& p);

/// Resultant of two integer polynomials via the subresultant remainder
/// sequence (fraction-free; no rational arithmetic).
mpz_class resultant(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b);

/// disc(P) = (-1)^{n(n-1)/2} Res(P, P') for monic P.
mpz_class discriminant(const IntPolynomial& p);

/// Exact count of real roots of a squarefree polynomial, by Sturm chain
/// with integer pseudo-remainders evaluated at +-infinity.
int count_real_roots(const IntPolynomial& p);

/// log|v| from the bit length and the leading 64 bits; >= 15 significant
/// digits.  Throws std::domain_error on v = 0.
double log_abs(const mpz_class& v);

}  // namespace grhgen

#endif
