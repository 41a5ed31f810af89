#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "grhgen/cli.hpp"

namespace {

// "lo:hi" -> pair of ints
bool parse_range(const std::string& text, int& lo, int& hi) {
  size_t colon = text.find(':');
  if (colon == std::string::npos) return false;
  try {
    lo = std::stoi(text.substr(0, colon));
    hi = std::stoi(text.substr(colon + 1));
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grhgen: GRH-conditional norm bounds for class group generators"};
  app.require_subcommand(1);

  grhgen::RunConfig config;
  std::string sign_str = "-";
  std::string a1_range, a2_range;

  auto add_common = [&config](CLI::App* cmd) {
    cmd->add_option("--poly", config.poly_arg,
                    "comma-separated coefficients, constant term first, or a file")
        ->required();
    cmd->add_option("--log-disc", config.log_disc, "override log |disc K|");
    cmd->add_option("--cache-dir", config.cache_dir, "splitting cache directory");
    cmd->add_option("--split-override", config.split_override_file,
                    "file of trusted split records for index-suspect primes");
  };

  CLI::App* bound_cmd = app.add_subcommand("bound", "compute the generator-norm bounds");
  add_common(bound_cmd);
  bound_cmd->add_flag("--basic-only", config.basic_only, "stop after the basic bound");
  bound_cmd->add_flag("--json", config.json, "machine-readable output");
  bound_cmd->add_flag("--timings", config.timings_in_json, "include timings in JSON output");
  bound_cmd->add_option("--delta-grid", config.delta_grid, "step-width scan grid")
      ->default_val(0.0625);
  bound_cmd->add_option("--n0", config.n0, "starting dimension")->default_val(8);

  CLI::App* primes_cmd = app.add_subcommand("primes", "count/list prime-ideal norms");
  add_common(primes_cmd);
  primes_cmd->add_option("--up-to", config.up_to, "norm limit")->required();
  primes_cmd->add_flag("--list", config.list, "list every (norm, p, f, count)");
  primes_cmd->add_flag("--json", config.json, "machine-readable output");

  CLI::App* batch_cmd = app.add_subcommand("batch", "bound a family of fields");
  batch_cmd->add_option("--family", config.family, "pure or biquadratic")->required();
  batch_cmd->add_option("--degree", config.degree, "degree for pure families")
      ->default_val(2);
  batch_cmd->add_option("--sign", sign_str, "+ or - for pure families")->default_val("-");
  batch_cmd->add_option("--a-min", config.a_min, "smallest exponent a")->default_val(1);
  batch_cmd->add_option("--a-max", config.a_max, "largest exponent a")->default_val(0);
  batch_cmd->add_option("--a1-range", a1_range, "biquadratic a1 range lo:hi");
  batch_cmd->add_option("--a2-range", a2_range, "biquadratic a2 range lo:hi");
  batch_cmd->add_option("--csv", config.csv_out, "CSV output file (default stdout)");
  batch_cmd->add_option("--plot-data", config.plot_out, "two-column plot data file");
  batch_cmd->add_flag("--force", config.force, "skip the per-field cost guard");
  batch_cmd->add_option("--delta-grid", config.delta_grid, "step-width scan grid")
      ->default_val(0.0625);
  batch_cmd->add_option("--n0", config.n0, "starting dimension")->default_val(8);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return grhgen::kExitInputError;
  }

  if (bound_cmd->parsed()) config.command = grhgen::RunConfig::Command::kBound;
  if (primes_cmd->parsed()) config.command = grhgen::RunConfig::Command::kPrimes;
  if (batch_cmd->parsed()) {
    config.command = grhgen::RunConfig::Command::kBatch;
    if (sign_str == "+")
      config.sign = 1;
    else if (sign_str == "-")
      config.sign = -1;
    else {
      std::cerr << "error: --sign must be + or -\n";
      return grhgen::kExitInputError;
    }
    if (!a1_range.empty() && !parse_range(a1_range, config.a1_min, config.a1_max)) {
      std::cerr << "error: bad --a1-range (expected lo:hi)\n";
      return grhgen::kExitInputError;
    }
    if (!a2_range.empty() && !parse_range(a2_range, config.a2_min, config.a2_max)) {
      std::cerr << "error: bad --a2-range (expected lo:hi)\n";
      return grhgen::kExitInputError;
    }
  }

  return grhgen::run(config, std::cout, std::cerr);
}
