#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sparsehg {

struct PropertyResult {
  std::string name;
  std::size_t total = 0;
  std::size_t passed = 0;
  std::vector<std::string> counterexamples;  ///< first few failing cases, multi-line

  bool ok() const { return passed == total; }
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;

  const PropertyResult* find(const std::string& name) const;
};

/// Suite names: "oracle", "lemmas", "pipeline". `cases` overrides the number
/// of random instances per property; 0 gives an empty report. Throws
/// InvalidArgument for an unknown name.
SuiteReport run_suite(const std::string& name, std::uint64_t seed,
                      std::optional<std::size_t> cases = std::nullopt);

/// Names of the properties each suite checks, in report order.
std::vector<std::string> suite_properties(const std::string& name);

/// `suite <name> seed <s>` header, then `PASS|FAIL <property> <passed>/<total>`
/// lines, each failure followed by indented counterexamples.
std::string format_report(const SuiteReport& r);

}  // namespace sparsehg
