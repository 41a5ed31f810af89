#ifndef GRHGEN_REPORT_IO_HPP
#define GRHGEN_REPORT_IO_HPP

#include <string>

#include "grhgen/search.hpp"

namespace grhgen {

/// Deterministic JSON rendering: timings are included only on request so
/// repeated runs stay byte-identical.
std::string report_to_json(const BoundReport& report, bool include_timings = false);

BoundReport report_from_json(const std::string& text);

std::string report_to_text(const NumberField& field, const BoundReport& report);

}  // namespace grhgen

#endif
