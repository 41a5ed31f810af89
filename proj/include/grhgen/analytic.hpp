#ifndef GRHGEN_ANALYTIC_HPP
#define GRHGEN_ANALYTIC_HPP

#include <stdexcept>

#include "grhgen/number_field.hpp"
#include "grhgen/splitting.hpp"

namespace grhgen {

namespace constants {
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kCatalan = 0.91596559417721901505;
}  // namespace constants

/// Li2(x) on [0, 1]: series below 1/2, reflection above.  Absolute
/// accuracy well under 1e-12 across the interval.
double dilog(double x);

/// Inverse tangent integral Ti2(y) = Im Li2(iy) on [0, 1]; ti2(1) is
/// Catalan's constant exactly.
double ti2(double y);

/// The two archimedean integrals of the triangle function F_L, in closed
/// form:  cosh term 4C - 4 Ti2(e^{-L/2}),  sinh term
/// pi^2/2 - 4 Li2(e^{-L/2}) + Li2(e^{-L}).  Both are >= 0 for L >= 0.
struct ArchTerms {
  double arch_r1 = 0.0;  // cosh integral, weighted by r1
  double arch_n = 0.0;   // sinh integral, weighted by n
};
ArchTerms arch_terms(double L);

/// Raised when an evaluation needs norms beyond table.limit; the caller
/// should extend the table and retry.
class table_too_small : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 2 sum over prime-ideal norms q and m >= 1 with m log q < L of
/// count * log q * (L - m log q) / q^{m/2}.   (F_L(x) = max(L - x, 0).)
double prime_sum(const IdealNormTable& table, double L);

/// The linear form evaluated at the triangle function F_L, split into the
/// pieces the quadratic-form machinery reuses.  value < 0 certifies
/// e^L as a generator-norm bound.
struct EllValue {
  double L = 0.0;
  double prime_sum = 0.0;
  double arch_r1 = 0.0;
  double arch_n = 0.0;
  double value = 0.0;
};
EllValue ell(const NumberField& field, const IdealNormTable& table, double L);

/// Classical one-function check: right side minus left side of the
/// corollary inequality with c1 = pi^2/2 and c2 = 4C.  Negative means T
/// qualifies.  Weaker than the exact check below (the 1/log T constants
/// drop the dilogarithm corrections), and the one the basic bound search
/// uses.  Strictly decreasing in log T.
double grh_check_coro(const NumberField& field, const IdealNormTable& table, double log_t);

/// Exact homogenized check: ell(F_L) / L.  Always <= grh_check_coro at
/// the same point.
double grh_check_homo(const NumberField& field, const IdealNormTable& table, double L);

}  // namespace grhgen

#endif
