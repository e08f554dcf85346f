#pragma once

#include <string>

#include <json.hpp>

#include "phinewton/criteria.hpp"

namespace phinewton {

inline constexpr const char* kVersion = "0.1.0";

/// Certificate in the documented JSON schema (snake_case keys).
nlohmann::ordered_json report_to_json(const AnalysisReport& report);

std::string render_text(const AnalysisReport& report);

/// One panel per phi: points (hollow when strictly above the polygon), hull,
/// slope labels and residual polynomial per principal side.
std::string render_svg(const AnalysisReport& report);

}  // namespace phinewton
