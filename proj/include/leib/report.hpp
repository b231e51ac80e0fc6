#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace leib {

/// One verified parameter point of one identity. Failed entries always carry
/// both computed values (lhs/rhs) in canonical text; `note` is extra context
/// some checks attach (e.g. which closed form an adjudication confirmed).
struct ReportEntry {
  std::string id;
  std::string anchor;  // the identity's statement
  std::string params;
  bool pass = true;
  std::string lhs;
  std::string rhs;
  std::string note;
};

struct VerificationReport {
  std::string registry_version;
  std::vector<ReportEntry> entries;

  std::size_t total() const { return entries.size(); }
  std::size_t passed() const;
  std::size_t failed() const { return total() - passed(); }
  bool all_pass() const { return passed() == total(); }
};

std::string to_markdown(const VerificationReport& report);
std::string to_csv(const VerificationReport& report);
std::string to_json(const VerificationReport& report);

}  // namespace leib
