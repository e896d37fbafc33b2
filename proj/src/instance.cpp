#include "lcm/instance.hpp"

#include <charconv>

namespace lcm {

namespace {

int parse_count(std::string const& text, std::string const& what) {
  int value = 0;
  auto const* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw UsageError("bad " + what + " '" + text + "'");
  }
  return value;
}

}  // namespace

Instance parse_instance(std::string const& text, std::int64_t group_bound) {
  if (group_bound < 0) {
    throw UsageError("group bound must be nonnegative");
  }
  auto const colon = text.find(':');
  std::string const kind = text.substr(0, colon);
  std::string const arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  try {
    if (kind == "free") {
      int const k = arg.empty() ? 2 : parse_count(arg, "alphabet size");
      return FreeMonoid(k);
    }
    if (kind == "grid") {
      int const k = arg.empty() ? 2 : parse_count(arg, "grid rank");
      return GridMonoid(k);
    }
    if (kind == "odometer" && arg.empty()) {
      return OdometerMonoid(OdometerBackend(group_bound));
    }
    if (kind == "automaton" && !arg.empty()) {
      return AutomatonMonoid(AutomatonBackend(AutomatonSpec::from_file(arg), 6,
                                              static_cast<std::size_t>(group_bound)));
    }
  } catch (UsageError const&) {
    throw;
  } catch (Error const& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown monoid '" + text
                   + "' (expected free:<k>, grid:<k>, odometer or automaton:<path>)");
}

std::string instance_name(Instance const& inst) {
  return std::visit([](auto const& m) { return m.name(); }, inst);
}

bool instance_certified(Instance const& inst) {
  if (auto const* a = std::get_if<AutomatonMonoid>(&inst)) {
    return a->backend().certified();
  }
  return true;
}

}  // namespace lcm
