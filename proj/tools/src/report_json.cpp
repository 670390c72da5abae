#include <json.hpp>

#include "smoothfano_cli/cli.hpp"

namespace sfano::cli {

namespace {

nlohmann::ordered_json to_json(const std::string& file, const BoundsReport& r) {
  nlohmann::ordered_json j;
  j["file"] = file;
  j["d"] = r.d;
  j["n"] = r.n;
  j["k"] = r.k;
  j["mode"] = to_string(r.mode);
  j["special_facet"] = r.special_facet;
  j["overall"] = r.overall ? "pass" : "fail";
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    j["checks"].push_back({{"name", c.name}, {"status", to_string(c.status)}, {"witness", c.witness}});
  }
  return j;
}

}  // namespace

std::string report_json(const std::string& file, const BoundsReport& report) {
  return to_json(file, report).dump(2) + "\n";
}

std::string reports_json(const std::vector<std::pair<std::string, BoundsReport>>& reports) {
  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  for (const auto& [file, report] : reports) all.push_back(to_json(file, report));
  return all.dump(2) + "\n";
}

}  // namespace sfano::cli
