#include "leib/report.hpp"

#include <json.hpp>

namespace leib {

std::size_t VerificationReport::passed() const {
  std::size_t n = 0;
  for (const auto& e : entries)
    if (e.pass) ++n;
  return n;
}

std::string to_markdown(const VerificationReport& report) {
  std::string out;
  out += "# Verification report (registry v" + report.registry_version + ")\n\n";
  out += "Total: " + std::to_string(report.total()) + ", passed: " +
         std::to_string(report.passed()) + ", failed: " + std::to_string(report.failed()) +
         "\n";
  std::string current_id;
  for (const auto& e : report.entries) {
    if (e.id != current_id) {
      current_id = e.id;
      out += "\n## " + e.id + "\n\n";
      if (!e.anchor.empty()) out += e.anchor + "\n\n";
      out += "| params | status | lhs | rhs | note |\n";
      out += "| --- | --- | --- | --- | --- |\n";
    }
    out += "| " + e.params + " | " + (e.pass ? "pass" : "FAIL") + " | " + e.lhs + " | " +
           e.rhs + " | " + e.note + " |\n";
  }
  return out;
}

std::string to_csv(const VerificationReport& report) {
  // Every field is comma-free by construction (canonical rationals and
  // polynomial renderings contain no commas), so no quoting is needed.
  std::string out = "id,params,status,lhs,rhs,note\n";
  for (const auto& e : report.entries) {
    out += e.id + "," + e.params + "," + (e.pass ? "pass" : "fail") + "," + e.lhs + "," +
           e.rhs + "," + e.note + "\n";
  }
  return out;
}

std::string to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["registry_version"] = report.registry_version;
  j["summary"] = {{"total", report.total()},
                  {"passed", report.passed()},
                  {"failed", report.failed()}};
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries) {
    nlohmann::json je = {{"id", e.id},
                         {"anchor", e.anchor},
                         {"params", e.params},
                         {"status", e.pass ? "pass" : "fail"}};
    if (!e.pass || !e.lhs.empty() || !e.rhs.empty())
      je["witness"] = {{"lhs", e.lhs}, {"rhs", e.rhs}};
    if (!e.note.empty()) je["note"] = e.note;
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  return j.dump(2);
}

}  // namespace leib
