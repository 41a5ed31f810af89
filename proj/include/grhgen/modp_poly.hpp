#ifndef GRHGEN_MODP_POLY_HPP
#define GRHGEN_MODP_POLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "grhgen/int_poly.hpp"

namespace grhgen::modp {

// Dense polynomial over F_p, constant term first, no leading zeros.
// Machine-word moduli only: p must be an odd-or-even prime < 2^62.
using Poly = std::vector<uint64_t>;

constexpr uint64_t kMaxPrime = uint64_t{1} << 62;

Poly reduce(const IntPolynomial& p, uint64_t q);

Poly derivative(const Poly& a, uint64_t p);
Poly mul(const Poly& a, const Poly& b, uint64_t p);
Poly rem(const Poly& a, const Poly& b, uint64_t p);
Poly gcd(Poly a, Poly b, uint64_t p);  // monic result (or zero)
Poly make_monic(Poly a, uint64_t p);

/// Distinct-degree factorization of a squarefree monic polynomial:
/// (degree d, number of distinct irreducible factors of degree d),
/// ascending in d.  Factors themselves are never materialized.
std::vector<std::pair<int, int>> distinct_degree_counts(Poly squarefree, uint64_t p);

/// Product of the distinct irreducible factors, correct in positive
/// characteristic (handles multiplicities divisible by p).
Poly radical(Poly a, uint64_t p);

bool is_irreducible(const Poly& a, uint64_t p);

/// Dedekind's criterion: true iff p divides the index [O_K : Z[x]/(P)].
bool dedekind_index_divisor(const IntPolynomial& P, uint64_t p);

}  // namespace grhgen::modp

#endif
