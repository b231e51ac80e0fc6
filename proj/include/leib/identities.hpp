#pragma once

#include <functional>
#include <string>
#include <vector>

#include "leib/parallel.hpp"
#include "leib/rational.hpp"
#include "leib/report.hpp"

namespace leib {

inline constexpr const char* kRegistryVersion = "1";

struct RunConfig {
  unsigned depth = 20;
  /// Sample points for identities stated in t. Empty means the default
  /// enumeration (depth+2 points). Checks with a 1/(1+t) factor reject -1.
  std::vector<Rational> t_samples;
  /// Sample parameters for the Y family. Empty means {-1, 2, -3, 5/2}.
  /// The lambda = 1 pole is rejected.
  std::vector<Rational> lambda_samples;
};

/// Fixed enumeration of distinct rationals (never -1) used for default
/// t sampling: 1, 2, then blocks -(j+1)/(j+2), (4j+3)/(4j+7), 3j+5.
std::vector<Rational> default_t_samples(std::size_t count);
std::vector<Rational> default_lambda_samples();

struct IdentityCheck {
  std::string id;
  std::string statement;        // rendered as the report "anchor"
  std::string parameter_space;  // human description of the swept ranges
  bool fixture = false;         // excluded from run_all; runnable by explicit id
  bool uses_t = false;
  bool uses_lambda = false;
  std::function<std::vector<ReportEntry>(const RunConfig&)> run;
};

const std::vector<IdentityCheck>& identity_registry();
std::vector<std::string> registered_ids(bool include_fixtures = false);
bool is_registered(const std::string& id);

/// Runs one registered identity. Throws std::invalid_argument for an
/// unknown id or sample sets violating a check's preconditions.
VerificationReport run_identity(const std::string& id, const RunConfig& cfg);

/// Runs an explicit id subset (fixtures allowed when named).
VerificationReport run_identities(const std::vector<std::string>& ids, const RunConfig& cfg,
                                  Exec exec = Exec::serial);

/// Runs every registered non-fixture identity. Entries are assembled in
/// id-sorted order regardless of execution policy, so serial and parallel
/// runs produce identical reports.
VerificationReport run_all(const RunConfig& cfg, Exec exec = Exec::serial);

}  // namespace leib
