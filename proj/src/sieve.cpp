#include "grhgen/sieve.hpp"

#include <algorithm>
#include <cmath>

namespace grhgen {

namespace {

constexpr uint64_t kSegment = 1 << 16;

// simple sieve for the base primes <= limit
std::vector<uint64_t> small_primes(uint64_t limit) {
  std::vector<uint64_t> out;
  if (limit < 2) return out;
  std::vector<char> is_prime(limit + 1, 1);
  for (uint64_t i = 2; i * i <= limit; ++i)
    if (is_prime[i])
      for (uint64_t j = i * i; j <= limit; j += i) is_prime[j] = 0;
  for (uint64_t i = 2; i <= limit; ++i)
    if (is_prime[i]) out.push_back(i);
  return out;
}

}  // namespace

void primes_in_range(uint64_t lo, uint64_t hi, const std::function<void(uint64_t)>& emit) {
  if (hi < 2 || hi < lo) return;
  lo = std::max<uint64_t>(lo, 2);
  uint64_t root = static_cast<uint64_t>(std::sqrt(static_cast<double>(hi)));
  while ((root + 1) * (root + 1) <= hi) ++root;
  std::vector<uint64_t> base = small_primes(root);

  std::vector<char> seg(kSegment);
  for (uint64_t low = lo; low <= hi; low += kSegment) {
    uint64_t high = std::min(low + kSegment - 1, hi);
    std::fill(seg.begin(), seg.begin() + (high - low + 1), 1);
    for (uint64_t p : base) {
      if (p * p > high) break;
      uint64_t start = std::max(p * p, (low + p - 1) / p * p);
      for (uint64_t j = start; j <= high; j += p) seg[j - low] = 0;
    }
    for (uint64_t v = low; v <= high; ++v)
      if (seg[v - low]) emit(v);
  }
}

std::vector<uint64_t> sieve_primes(uint64_t limit) {
  std::vector<uint64_t> out;
  primes_in_range(2, limit, [&out](uint64_t p) { out.push_back(p); });
  return out;
}

}  // namespace grhgen
