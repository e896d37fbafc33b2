#pragma once

// Property suites behind `lcmtool check` and the acceptance run.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcm/instance.hpp"
#include "lcm/parallel.hpp"

namespace lcm {

struct SuiteParams {
  std::size_t depth = 2;
  std::int64_t group_bound = 2;
  std::size_t delta_depth = 3;
  std::uint64_t seed = 1;
  std::size_t random_words = 1000;
  // exhaustive sweeps larger than this are replaced by a seeded sample
  std::size_t sample_cap = 2'000'000;
  Exec exec = Exec::parallel;
};

struct PropertyResult {
  std::string suite;
  std::string name;
  SweepResult result;
  // failures that a bounded search may explain; only set on uncertified instances
  bool inconclusive = false;
  bool passed() const { return result.failures == 0 || inconclusive; }
};

struct CheckReport {
  std::vector<std::string> suites;
  std::string instance;
  SuiteParams params;
  bool certified = true;
  std::vector<PropertyResult> properties;  // sorted by (suite, name)
  std::vector<std::string> notes;

  bool passed() const;
  std::size_t cases() const;
  PropertyResult const* find(std::string const& suite, std::string const& name) const;
};

std::vector<std::string> const& suite_names();

// "all" expands to every suite; unknown names throw UsageError.
std::vector<std::string> expand_suites(std::vector<std::string> const& names);

CheckReport run_check(std::vector<std::string> const& names,
                      Instance const& inst,
                      SuiteParams const& params);

// Byte-identical for identical inputs unless a wall time is supplied.
std::string report_json(CheckReport const& rep, std::optional<double> wall_ms = {});
std::string report_text(CheckReport const& rep, std::optional<double> wall_ms = {});

}  // namespace lcm
