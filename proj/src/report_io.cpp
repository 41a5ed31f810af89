#include "grhgen/report_io.hpp"

#include <json.hpp>

#include <sstream>

namespace grhgen {

std::string report_to_json(const BoundReport& report, bool include_timings) {
  nlohmann::ordered_json j;
  j["t_basic"] = report.t_basic;
  j["t_improved"] = report.t_improved;
  j["witness"] = {{"n", report.witness.N}, {"delta", report.witness.delta}};
  j["t0_cap"] = report.t0_cap;
  j["ideal_count_basic"] = report.ideal_count_basic;
  j["ideal_count_improved"] = report.ideal_count_improved;
  j["flags"] = report.flags;
  if (include_timings)
    j["timings_ms"] = {{"basic", report.timings.basic_ms},
                       {"improved", report.timings.improved_ms}};
  return j.dump();
}

BoundReport report_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  BoundReport r;
  r.t_basic = j.at("t_basic").get<uint64_t>();
  r.t_improved = j.at("t_improved").get<uint64_t>();
  r.witness.N = j.at("witness").at("n").get<int>();
  r.witness.delta = j.at("witness").at("delta").get<double>();
  r.t0_cap = j.at("t0_cap").get<double>();
  r.ideal_count_basic = j.at("ideal_count_basic").get<uint64_t>();
  r.ideal_count_improved = j.at("ideal_count_improved").get<uint64_t>();
  r.flags = j.at("flags").get<std::vector<std::string>>();
  if (j.contains("timings_ms")) {
    r.timings.basic_ms = j["timings_ms"].value("basic", 0.0);
    r.timings.improved_ms = j["timings_ms"].value("improved", 0.0);
  }
  return r;
}

std::string report_to_text(const NumberField& field, const BoundReport& report) {
  std::ostringstream out;
  out << "field: degree " << field.n << ", signature (" << field.r1 << "," << field.r2
      << "), log|disc| = " << field.log_abs_disc;
  if (field.disc_source == NumberField::DiscSource::kUserSupplied) out << " (user supplied)";
  out << '\n';
  out << "t_basic    = " << report.t_basic << "  (" << report.ideal_count_basic
      << " prime ideals, " << report.timings.basic_ms << " ms)\n";
  if (report.t_improved != 0) {
    out << "t_improved = " << report.t_improved << "  (" << report.ideal_count_improved
        << " prime ideals, " << report.timings.improved_ms << " ms)\n";
    out << "witness    = (N = " << report.witness.N << ", delta = " << report.witness.delta
        << "), t0 cap = " << report.t0_cap << '\n';
  }
  if (!report.flags.empty()) {
    out << "flags      =";
    for (const auto& f : report.flags) out << ' ' << f;
    out << '\n';
  }
  return out.str();
}

}  // namespace grhgen
