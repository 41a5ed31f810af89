#ifndef GRHGEN_NUMBER_FIELD_HPP
#define GRHGEN_NUMBER_FIELD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grhgen/int_poly.hpp"

namespace grhgen {

/// A number field K = Q[x]/(P) with the invariants every analytic formula
/// consumes: degree, signature, log |disc|, and the primes whose splitting
/// cannot be read off P mod p.
struct NumberField {
  IntPolynomial poly;
  int n = 0;   // degree
  int r1 = 0;  // real embeddings
  int r2 = 0;  // complex-conjugate pairs
  mpz_class disc_poly;
  double log_abs_disc = 0.0;

  enum class DiscSource { kPolynomial, kUserSupplied };
  DiscSource disc_source = DiscSource::kPolynomial;

  /// Primes p with p^2 | disc P that Dedekind's criterion could not clear:
  /// factoring P mod p may misreport the splitting, so they are excluded
  /// from prime-ideal tables.
  std::vector<uint64_t> index_suspects;
  /// False when the unfactored discriminant cofactor (beyond the trial
  /// division limit) may hide further square divisors.
  bool suspects_complete = true;
  /// True when P is irreducible mod some prime <= 100.
  bool irreducibility_certified = false;

  /// SHA-256 (lowercase hex) of the canonical coefficient string.
  const std::string& digest() const { return digest_; }
  std::string digest_;
};

constexpr uint64_t kDefaultSuspectLimit = 1000000;

/// Builds the field from a monic squarefree polynomial of degree >= 2.
/// Throws std::invalid_argument on non-monic input, degree < 2, or
/// vanishing discriminant.
NumberField new_field(std::vector<mpz_class> coeffs,
                      std::optional<double> user_log_disc = std::nullopt,
                      uint64_t suspect_limit = kDefaultSuspectLimit);

std::string sha256_hex(const std::string& data);

}  // namespace grhgen

#endif
