#ifndef GRHGEN_SIEVE_HPP
#define GRHGEN_SIEVE_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace grhgen {

/// All primes <= limit, ascending.  Segmented; memory O(sqrt(limit) + segment).
std::vector<uint64_t> sieve_primes(uint64_t limit);

/// Streams the primes in [lo, hi] in ascending order.
void primes_in_range(uint64_t lo, uint64_t hi, const std::function<void(uint64_t)>& emit);

}  // namespace grhgen

#endif
