#include "garside/report.hpp"

#include "garside/error.hpp"

namespace garside {

using json = nlohmann::ordered_json;

void ScanReport::violation(const std::string& law, std::vector<std::string> witness,
                           const std::string& detail) {
  json v = {{"law", law}, {"witness", std::move(witness)}};
  if (!detail.empty()) v["detail"] = detail;
  violations.push_back(std::move(v));
}

json ScanReport::to_json() const {
  json j;
  j["kind"] = kind;
  j["structure"] = structure;
  j["axis"] = axis;
  j["window"] = window;
  j["constants"] = constants;
  j["witnesses"] = witnesses;
  j["violations"] = violations;
  j["details"] = details;
  j["notes"] = notes;
  return j;
}

ScanReport ScanReport::from_json(const json& j) {
  try {
    ScanReport r;
    r.kind = j.at("kind").get<std::string>();
    r.structure = j.at("structure").get<std::string>();
    r.axis = j.at("axis").get<std::string>();
    r.window = j.at("window");
    r.constants = j.at("constants");
    r.witnesses = j.at("witnesses").get<std::vector<json>>();
    r.violations = j.at("violations").get<std::vector<json>>();
    r.details = j.at("details");
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed report: ") + e.what());
  }
}

}  // namespace garside
