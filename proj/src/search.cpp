#include "grhgen/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace grhgen {

namespace {

constexpr uint64_t kBracketCap = 1000000000000ULL;  // 10^12

double check_at(const NumberField& field, IdealNormTable& table, uint64_t t) {
  double need = static_cast<double>(t);
  if (need > table.limit()) table = extend_table(std::move(table), need, field);
  return grh_check_coro(field, table, std::log(static_cast<double>(t)));
}

double now_ms() {
  using namespace std::chrono;
  return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

}  // namespace

uint64_t bdydf(const NumberField& field, IdealNormTable& table) {
  uint64_t hi = 2;
  while (check_at(field, table, hi) >= 0.0) {
    if (hi >= kBracketCap)
      throw cap_exceeded("no basic bound found below 10^12 for this field");
    hi *= 2;
  }
  if (hi > 2) {
    uint64_t lo = hi / 2;  // check(lo) >= 0
    while (hi - lo > 1) {
      uint64_t mid = lo + (hi - lo) / 2;
      if (check_at(field, table, mid) < 0.0)
        hi = mid;
      else
        lo = mid;
    }
    // guard against non-monotone jumps at prime-power thresholds
    while (hi > 2 && check_at(field, table, hi - 1) < 0.0) --hi;
  }
  return hi;
}

uint64_t optimal_t(const NumberField& field, IdealNormTable& table, int N, double t_lo,
                   double t_hi, bool* fallback_taken) {
  if (!(t_lo >= 1.0 && t_hi >= t_lo)) throw std::invalid_argument("optimal_t: bad range");
  uint64_t lo = std::max<uint64_t>(2, static_cast<uint64_t>(std::ceil(t_lo)));
  uint64_t hi = std::max(lo, static_cast<uint64_t>(std::ceil(t_hi)));

  auto good = [&](uint64_t t) {
    double need = static_cast<double>(t);
    if (need > table.limit()) table = extend_table(std::move(table), need, field);
    double delta = std::log(static_cast<double>(t)) / (2.0 * N);
    return ndelta(field, table, delta, N) > 0;
  };

  uint64_t hi0 = hi;
  if (!good(hi)) throw std::logic_error("optimal_t: predicate false at upper end");
  while (lo < hi) {
    uint64_t mid = lo + (hi - lo) / 2;
    if (good(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  if (!good(hi)) {
    // non-monotone pocket: scan upward to the nearest good integer
    if (fallback_taken) *fallback_taken = true;
    while (hi < hi0 && !good(hi)) ++hi;
  }
  return hi;
}

double t0_init(const NumberField& field, bool* cap_only_taken) {
  double ld = field.log_abs_disc;
  double cap = 4.01 * ld * ld;
  if (!(ld > std::exp(1.0))) {
    if (cap_only_taken) *cap_only_taken = true;
    return cap;
  }
  double inner = ld + std::log(ld) -
                 (constants::kEulerGamma + std::log(2.0 * constants::kPi)) * field.n + 1.0 +
                 (field.n + 1) * std::log(7.0 * ld) / ld;
  return std::min(4.0 * inner * inner, cap);
}

BoundReport bound(const NumberField& field, IdealNormTable& table, const BoundOptions& options) {
  BoundReport report;
  if (!field.index_suspects.empty()) report.flags.push_back("untrusted-primes-excluded");
  if (!field.irreducibility_certified) report.flags.push_back("irreducibility-unverified");
  if (!field.suspects_complete) report.flags.push_back("suspect-scan-incomplete");

  double t_start = now_ms();
  report.t_basic = bdydf(field, table);
  report.ideal_count_basic = table.count_up_to(static_cast<double>(report.t_basic));
  report.timings.basic_ms = now_ms() - t_start;
  if (options.basic_only) return report;

  t_start = now_ms();
  bool cap_only = false;
  report.t0_cap = t0_init(field, &cap_only);
  if (cap_only) report.flags.push_back("t0-init-cap-only");

  // scan the delta grid at the starting dimension
  int n_cur = options.n0;
  double grid = options.delta_grid;
  double delta = grid;
  bool mono_fallback = false;
  uint64_t t_cur = 0;
  while (t_cur == 0) {
    if (ndelta(field, table, delta, n_cur) != 0) {
      try {
        t_cur = optimal_t(field, table, n_cur, std::exp(2.0 * n_cur * (delta - grid)),
                          std::exp(2.0 * n_cur * delta), &mono_fallback);
        break;
      } catch (const std::logic_error&) {
        // the grid point was good but its integer ceiling was not; widen
      }
    }
    delta += grid;
  }

  // double the dimension while the bound keeps improving
  while (true) {
    int n_next = 2 * n_cur;
    if (n_next > options.n_cap)
      throw cap_exceeded("dimension doubling exceeded the cap without converging");
    uint64_t t_next =
        optimal_t(field, table, n_next, 1.0, static_cast<double>(t_cur), &mono_fallback);
    if (t_next >= t_cur) break;
    t_cur = t_next;
    n_cur = n_next;
  }
  if (mono_fallback) report.flags.push_back("monotonicity-fallback");

  report.witness = StepParams{n_cur, std::log(static_cast<double>(t_cur)) / (2.0 * n_cur)};
  report.t_improved = t_cur;
  uint64_t t0_ceil = static_cast<uint64_t>(std::ceil(report.t0_cap));
  if (report.t_improved > t0_ceil) {
    report.t_improved = t0_ceil;
    report.flags.push_back("t0-capped");
  }
  if (static_cast<double>(report.t_improved) > table.limit())
    table = extend_table(std::move(table), static_cast<double>(report.t_improved), field);
  report.ideal_count_improved = table.count_up_to(static_cast<double>(report.t_improved));
  report.timings.improved_ms = now_ms() - t_start;
  return report;
}

}  // namespace grhgen
