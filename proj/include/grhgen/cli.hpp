#ifndef GRHGEN_CLI_HPP
#define GRHGEN_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "grhgen/search.hpp"

namespace grhgen {

/// Exit statuses shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCapExceeded = 3;

struct RunConfig {
  enum class Command { kBound, kPrimes, kBatch };
  Command command = Command::kBound;

  // polynomial source: a comma-separated coefficient list (constant term
  // first) or the path of a one-line file holding one
  std::string poly_arg;
  std::optional<double> log_disc;

  double delta_grid = 0.0625;
  int n0 = 8;
  bool basic_only = false;
  bool json = false;
  bool timings_in_json = false;
  std::string cache_dir;
  std::string split_override_file;

  uint64_t up_to = 0;  // primes
  bool list = false;

  // batch family
  std::string family;  // "pure" or "biquadratic"
  int degree = 2;
  int sign = -1;
  int a_min = 1, a_max = 0;
  int a1_min = 1, a1_max = 0;
  int a2_min = 1, a2_max = 0;
  std::string csv_out;
  std::string plot_out;
  bool force = false;
};

int cmd_bound(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_primes(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_batch(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Shared by the commands and the tests: turns the --poly argument
/// (inline list or file) into a field.
NumberField field_from_config(const RunConfig& config);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace grhgen

#endif
