#pragma once

#include <string>

#include "cli/table.hpp"
#include "qcat/states.hpp"

namespace qcat::cli {

/// Number of photon levels shown in a report.
inline constexpr std::size_t kReportLevels = 32;

/// Full single-point report. Throws the library's domain errors.
std::string render_report(const StateSpec& spec, Format format);

}  // namespace qcat::cli
