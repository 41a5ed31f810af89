#ifndef GRHGEN_SEARCH_HPP
#define GRHGEN_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "grhgen/quadform.hpp"

namespace grhgen {

class cap_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// What a full bound run reports.
struct BoundReport {
  uint64_t t_basic = 0;
  uint64_t t_improved = 0;
  StepParams witness;  // final K-good pair backing t_improved
  double t0_cap = 0.0;
  uint64_t ideal_count_basic = 0;
  uint64_t ideal_count_improved = 0;
  struct Timings {
    double basic_ms = 0.0;
    double improved_ms = 0.0;
  } timings;
  std::vector<std::string> flags;

  /// Everything but the timings, which vary run to run.
  bool same_results(const BoundReport& o) const {
    return t_basic == o.t_basic && t_improved == o.t_improved && witness == o.witness &&
           t0_cap == o.t0_cap && ideal_count_basic == o.ideal_count_basic &&
           ideal_count_improved == o.ideal_count_improved && flags == o.flags;
  }
};

/// Smallest integer T >= 2 with grh_check_coro(log T) < 0, by exponential
/// bracketing, binary search, and a downward snap.  Extends the table as
/// needed; throws cap_exceeded if no bound is found below 10^12.
uint64_t bdydf(const NumberField& field, IdealNormTable& table);

/// Smallest integer T in [t_lo, t_hi] (clamped to >= 2) such that
/// ndelta(log T / (2N), N) > 0, assuming the predicate is monotone in T.
/// The caller guarantees the predicate at ceil(t_hi).  The result is
/// re-verified; a non-monotone pocket triggers an upward linear scan and
/// sets *fallback_taken.
uint64_t optimal_t(const NumberField& field, IdealNormTable& table, int N, double t_lo,
                   double t_hi, bool* fallback_taken = nullptr);

/// Initializer/cap T0: min of the explicit degree-aware square formula and
/// 4.01 log^2 |disc|.  When log |disc| <= e the first formula is skipped
/// and *cap_only_taken is set.
double t0_init(const NumberField& field, bool* cap_only_taken = nullptr);

struct BoundOptions {
  double delta_grid = 0.0625;
  int n0 = 8;
  int n_cap = 1 << 14;  // dimension abort threshold
  bool basic_only = false;
};

/// The full driver: basic bound, then the delta-scan plus dimension
/// doubling search for the improved bound.
BoundReport bound(const NumberField& field, IdealNormTable& table,
                  const BoundOptions& options = {});

}  // namespace grhgen

#endif
