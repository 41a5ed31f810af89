#include "grhgen/cli.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>
#include <thread>
#include <variant>

#include "grhgen/family.hpp"
#include "grhgen/report_io.hpp"

namespace grhgen {

namespace {

constexpr double kBatchT0Guard = 1e8;

std::string read_poly_source(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::string line;
    std::getline(in, line);
    if (line.empty()) throw std::invalid_argument("polynomial file is empty: " + arg);
    return line;
  }
  return arg;
}

// quick certain-reducibility check: small integer roots
bool has_small_integer_root(const IntPolynomial& p) {
  for (long r = -1000; r <= 1000; ++r)
    if (p(mpz_class(r)) == 0) return true;
  return false;
}

std::vector<SplitRecord> parse_split_overrides(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read split override file: " + path);
  std::vector<SplitRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    SplitRecord rec;
    int ram = 0;
    std::string degs;
    if (!(ls >> rec.p >> ram >> degs))
      throw std::invalid_argument("malformed split override line: " + line);
    rec.ramified = ram != 0;
    std::istringstream ds(degs);
    std::string pair;
    while (std::getline(ds, pair, ',')) {
      size_t colon = pair.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("malformed split override line: " + line);
      rec.degrees.emplace_back(std::stoi(pair.substr(0, colon)),
                               std::stoi(pair.substr(colon + 1)));
    }
    rec.trusted = true;
    out.push_back(std::move(rec));
  }
  return out;
}

IdealNormTable make_table(const RunConfig& config, const NumberField& field) {
  IdealNormTable table = config.cache_dir.empty()
                             ? IdealNormTable(field)
                             : load_cache(config.cache_dir, field);
  if (!config.split_override_file.empty()) {
    auto overrides = parse_split_overrides(config.split_override_file);
    uint64_t max_p = 0;
    for (const auto& r : overrides) max_p = std::max(max_p, r.p);
    if (static_cast<double>(max_p) > table.limit())
      table = extend_table(std::move(table), static_cast<double>(max_p), field);
    table = apply_split_overrides(std::move(table), overrides);
  }
  return table;
}

void maybe_save_cache(const RunConfig& config, const IdealNormTable& table, std::ostream& err) {
  if (config.cache_dir.empty()) return;
  try {
    save_cache(table, config.cache_dir);
  } catch (const cache_error& e) {
    err << "warning: " << e.what() << '\n';
  }
}

struct BatchJob {
  bool biquadratic = false;
  int degree = 0, sign = 0, a = 0;  // pure
  int a1 = 0, a2 = 0;               // biquadratic

  std::string name() const {
    if (biquadratic)
      return "biquadratic a1=" + std::to_string(a1) + " a2=" + std::to_string(a2);
    return "x^" + std::to_string(degree) + (sign > 0 ? "+" : "-") + "nextprime(1e" +
           std::to_string(a) + ")";
  }

  // log |disc| from the family parameters alone, good enough for the cost
  // guard (nextprime(10^a) is within a sliver of 10^a)
  double log_disc_estimate() const {
    const double ln10 = std::log(10.0);
    if (biquadratic) return std::log(4096.0) + 2.0 * (a1 + 2 * a2) * ln10;
    return degree * std::log(static_cast<double>(degree)) + (degree - 1) * a * ln10;
  }
};

std::vector<BatchJob> build_jobs(const RunConfig& config) {
  std::vector<BatchJob> jobs;
  if (config.family == "pure") {
    for (int a = config.a_min; a <= config.a_max; ++a) {
      BatchJob job;
      job.degree = config.degree;
      job.sign = config.sign;
      job.a = a;
      jobs.push_back(job);
    }
  } else if (config.family == "biquadratic") {
    for (int a1 = config.a1_min; a1 <= config.a1_max; ++a1)
      for (int a2 = std::max(a1, config.a2_min); a2 <= config.a2_max; ++a2) {
        BatchJob job;
        job.biquadratic = true;
        job.a1 = a1;
        job.a2 = a2;
        jobs.push_back(job);
      }
  } else {
    throw std::invalid_argument("unknown family: '" + config.family +
                                "' (expected pure or biquadratic)");
  }
  return jobs;
}

}  // namespace

NumberField field_from_config(const RunConfig& config) {
  IntPolynomial poly = parse_polynomial(read_poly_source(config.poly_arg));
  if (has_small_integer_root(poly))
    throw std::invalid_argument("polynomial is reducible (integer root found)");
  return new_field(std::move(poly.coeffs), config.log_disc);
}

int cmd_bound(const RunConfig& config, std::ostream& out, std::ostream& err) {
  NumberField field;
  IdealNormTable table;
  try {
    field = field_from_config(config);
    table = make_table(config, field);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  if (!field.irreducibility_certified)
    err << "warning: irreducibility not certified by any prime <= 100; "
           "the bound is meaningless if the polynomial is reducible\n";

  BoundOptions options;
  options.delta_grid = config.delta_grid;
  options.n0 = config.n0;
  options.basic_only = config.basic_only;
  BoundReport report;
  try {
    report = bound(field, table, options);
  } catch (const cap_exceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapExceeded;
  }
  maybe_save_cache(config, table, err);

  if (config.json)
    out << report_to_json(report, config.timings_in_json) << '\n';
  else
    out << report_to_text(field, report);
  return kExitOk;
}

int cmd_primes(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.up_to < 2) {
    err << "error: --up-to must be at least 2\n";
    return kExitInputError;
  }
  NumberField field;
  IdealNormTable table;
  try {
    field = field_from_config(config);
    table = make_table(config, field);
    table = extend_table(std::move(table), static_cast<double>(config.up_to), field);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  maybe_save_cache(config, table, err);

  uint64_t count = table.count_up_to(static_cast<double>(config.up_to));
  if (config.json) {
    nlohmann::ordered_json j;
    j["up_to"] = config.up_to;
    j["count"] = count;
    if (config.list) {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const IdealEntry& e : table.entries()) {
        if (e.norm > config.up_to) break;
        arr.push_back({{"norm", e.norm}, {"p", e.p}, {"f", e.f}, {"count", e.count}});
      }
      j["ideals"] = arr;
    }
    out << j.dump() << '\n';
  } else {
    out << "prime ideals with norm <= " << config.up_to << ": " << count << '\n';
    if (config.list) {
      out << "norm p f count\n";
      for (const IdealEntry& e : table.entries()) {
        if (e.norm > config.up_to) break;
        out << e.norm << ' ' << e.p << ' ' << e.f << ' ' << e.count << '\n';
      }
    }
  }
  return kExitOk;
}

int cmd_batch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<BatchJob> jobs;
  try {
    jobs = build_jobs(config);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  // cost guard: refuse desk-hostile inputs before touching any big number
  if (!config.force) {
    for (const BatchJob& job : jobs) {
      double ld = job.log_disc_estimate();
      if (4.01 * ld * ld > kBatchT0Guard) {
        err << "error: " << job.name() << " has an estimated search cap above 1e8; "
            << "rerun with --force if that cost is intended\n";
        return kExitInputError;
      }
    }
  }

  std::ofstream csv_file;
  std::ostream* csv = &out;
  if (!config.csv_out.empty()) {
    csv_file.open(config.csv_out, std::ios::trunc);
    if (!csv_file) {
      err << "error: cannot write " << config.csv_out << '\n';
      return kExitInputError;
    }
    csv = &csv_file;
  }
  *csv << csv_header() << '\n' << std::flush;

  using RowResult = std::variant<FamilyRow, std::string>;
  auto run_one = [&config](const BatchJob& job) -> RowResult {
    try {
      std::vector<mpz_class> coeffs;
      std::string label;
      if (job.biquadratic) {
        coeffs = biquadratic_coeffs(job.a1, job.a2);
        mpz_class s = -coeffs[2] / 2;
        mpz_class d = sqrt(mpz_class(abs(coeffs[0])));
        mpz_class p1 = (s - d) / 2, p2 = (s + d) / 2;
        label = "sqrt(" + p1.get_str() + ")+sqrt(" + p2.get_str() + ")";
      } else {
        coeffs = pure_field_coeffs(job.degree, job.sign, job.a);
        label = "x^" + std::to_string(job.degree) + (job.sign > 0 ? "+" : "-") +
                mpz_class(abs(coeffs[0])).get_str();
      }
      NumberField field = new_field(std::move(coeffs));
      IdealNormTable table(field);
      BoundOptions options;
      options.delta_grid = config.delta_grid;
      options.n0 = config.n0;
      BoundReport rep = bound(field, table, options);
      FamilyRow row;
      row.label = label;
      row.log_disc = field.log_abs_disc;
      row.loglog_disc = std::log(field.log_abs_disc);
      row.t_basic = rep.t_basic;
      row.t_improved = rep.t_improved;
      row.ratio = static_cast<double>(rep.t_improved) / static_cast<double>(rep.t_basic);
      row.scaled = row.ratio * row.loglog_disc * row.loglog_disc;
      return row;
    } catch (const std::exception& e) {
      return std::string(e.what());
    }
  };

  size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<RowResult>> futures(jobs.size());
  std::vector<FamilyRow> rows;
  size_t launched = 0;
  for (size_t i = 0; i < jobs.size(); ++i) {
    while (launched < jobs.size() && launched < i + workers) {
      futures[launched] =
          std::async(std::launch::async, run_one, std::cref(jobs[launched]));
      ++launched;
    }
    RowResult result = futures[i].get();
    if (std::holds_alternative<FamilyRow>(result)) {
      rows.push_back(std::get<FamilyRow>(result));
      *csv << csv_line(rows.back()) << '\n' << std::flush;
    } else {
      err << "skip " << jobs[i].name() << ": " << std::get<std::string>(result) << '\n';
    }
  }
  *csv << "# mean_scaled=" << mean_scaled(rows) << " rows=" << rows.size() << '\n';

  if (!config.plot_out.empty()) {
    std::ofstream plot(config.plot_out, std::ios::trunc);
    if (!plot) {
      err << "error: cannot write " << config.plot_out << '\n';
      return kExitInputError;
    }
    emit_plotdata(rows, plot);
  }
  return kExitOk;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.command) {
    case RunConfig::Command::kBound:
      return cmd_bound(config, out, err);
    case RunConfig::Command::kPrimes:
      return cmd_primes(config, out, err);
    case RunConfig::Command::kBatch:
      return cmd_batch(config, out, err);
  }
  return kExitInputError;
}

}  // namespace grhgen
