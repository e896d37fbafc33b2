#pragma once

// Runtime selection of a concrete monoid from its command-line name.

#include <cstdint>
#include <string>
#include <variant>

#include "lcm/free_monoid.hpp"
#include "lcm/grid_monoid.hpp"
#include "lcm/self_similar.hpp"

namespace lcm {

class UsageError : public Error {
 public:
  using Error::Error;
};

using Instance = std::variant<FreeMonoid, GridMonoid, OdometerMonoid, AutomatonMonoid>;

// "free:<k>", "grid:<k>", "odometer", "automaton:<path>". The group bound
// sizes the unit window of the self-similar instances.
Instance parse_instance(std::string const& text, std::int64_t group_bound);

std::string instance_name(Instance const& inst);

// false when some answers come from bounded searches
bool instance_certified(Instance const& inst);

}  // namespace lcm
