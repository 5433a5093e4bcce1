#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace garside {

/// Structured output of every scan and certificate command.
///
/// `constants` holds the empirical stand-ins C_hat, D_hat, M_hat, F_hat
/// (null when a scan does not produce them). Each witness is an object with
/// a `kind` tag and enough data to recompute the value it claims.
struct ScanReport {
  std::string kind;
  std::string structure;
  std::string axis;
  nlohmann::ordered_json window = nlohmann::ordered_json::object();
  nlohmann::ordered_json constants = {
      {"C_hat", nullptr}, {"D_hat", nullptr}, {"M_hat", nullptr}, {"F_hat", nullptr}};
  std::vector<nlohmann::ordered_json> witnesses;
  std::vector<nlohmann::ordered_json> violations;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  std::vector<std::string> notes;

  bool ok() const { return violations.empty(); }
  void violation(const std::string& law, std::vector<std::string> witness,
                 const std::string& detail = {});

  nlohmann::ordered_json to_json() const;
  static ScanReport from_json(const nlohmann::ordered_json& j);
};

}  // namespace garside
