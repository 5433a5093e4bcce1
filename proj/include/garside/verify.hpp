#pragma once

#include <string>
#include <vector>

#include "garside/report.hpp"

namespace garside {

/// Recomputes every witness of a report from its stored words and checks
/// that each reported constant is attained by a witness. Returns one line
/// per discrepancy; empty means the report checks out.
std::vector<std::string> verify_report(const ScanReport& report);

/// Parses and verifies; throws InvalidInput listing the discrepancies.
ScanReport load_report(const nlohmann::ordered_json& j);

}  // namespace garside
