#pragma once

// Seeded property suites over the library's algebraic laws, shared by the
// `check` CLI command and the test suite.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace zrq::check {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

struct SuiteReport {
  std::string suite;
  std::vector<PropertyResult> properties;
  bool passed() const;
};

/// axioms, lattice, metric, action, valuation.
const std::vector<std::string>& suite_names();

bool is_suite(const std::string& name);

/// `name` may also be "all". Throws RangeError for an unknown suite.
std::vector<SuiteReport> run(const std::string& name, std::uint64_t seed, std::size_t cases);

nlohmann::json to_json(const std::vector<SuiteReport>& reports, std::uint64_t seed, std::size_t cases);

}  // namespace zrq::check
