#include "grhgen/number_field.hpp"

#include <openssl/evp.h>

#include <stdexcept>

#include "grhgen/modp_poly.hpp"
#include "grhgen/sieve.hpp"

namespace grhgen {

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("sha256 failure");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xf]);
  }
  return out;
}

NumberField new_field(std::vector<mpz_class> coeffs, std::optional<double> user_log_disc,
                      uint64_t suspect_limit) {
  NumberField f;
  f.poly = make_polynomial(std::move(coeffs));
  f.n = f.poly.degree();

  f.disc_poly = discriminant(f.poly);
  if (f.disc_poly == 0)
    throw std::invalid_argument("polynomial is not squarefree (discriminant is zero)");

  f.r1 = count_real_roots(f.poly);
  if ((f.n - f.r1) % 2 != 0) throw std::logic_error("real-root count has wrong parity");
  f.r2 = (f.n - f.r1) / 2;

  if (user_log_disc) {
    if (*user_log_disc <= 0) throw std::invalid_argument("log |disc| must be positive");
    f.log_abs_disc = *user_log_disc;
    f.disc_source = NumberField::DiscSource::kUserSupplied;
  } else {
    f.log_abs_disc = log_abs(f.disc_poly);
    f.disc_source = NumberField::DiscSource::kPolynomial;
  }

  // Square divisors of disc P up to the trial-division limit; Dedekind's
  // criterion clears the ones that provably do not divide the index.
  mpz_class cofactor = abs(f.disc_poly);
  primes_in_range(2, suspect_limit, [&](uint64_t p) {
    if (!mpz_divisible_ui_p(cofactor.get_mpz_t(), p)) return;
    int v = 0;
    while (mpz_divisible_ui_p(cofactor.get_mpz_t(), p)) {
      mpz_divexact_ui(cofactor.get_mpz_t(), cofactor.get_mpz_t(), p);
      ++v;
    }
    if (v >= 2 && modp::dedekind_index_divisor(f.poly, p)) f.index_suspects.push_back(p);
  });
  f.suspects_complete =
      cofactor == 1 || mpz_probab_prime_p(cofactor.get_mpz_t(), 30) != 0;

  for (uint64_t p : sieve_primes(100)) {
    if (modp::is_irreducible(modp::reduce(f.poly, p), p)) {
      f.irreducibility_certified = true;
      break;
    }
  }

  f.digest_ = sha256_hex(coefficient_string(f.poly));
  return f;
}

}  // namespace grhgen
