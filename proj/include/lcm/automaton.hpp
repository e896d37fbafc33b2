#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcm/word.hpp"

namespace lcm {

// An element of an automaton group: a freely reduced word over the states
// and their inverses (+(i+1) is state i, -(i+1) its inverse), together with
// its action on all words of the comparison depth. Equality and hashing use
// the action signature only, so `==` means "equal to depth d".
struct AutomatonElement {
  std::vector<int> generators;
  std::vector<std::uint32_t> signature;

  friend bool operator==(AutomatonElement const& a, AutomatonElement const& b) {
    return a.signature == b.signature;
  }
  friend std::strong_ordering operator<=>(AutomatonElement const& a,
                                          AutomatonElement const& b) {
    return a.signature <=> b.signature;
  }
};

// Mealy automaton read from JSON:
//
//   {"alphabet": 2,
//    "states": ["e", "a"],
//    "transitions": [{"state": "a", "letter": 0, "output": 1, "next": "e"}, ...]}
//
// Every (state, letter) pair needs exactly one transition and every state must
// permute the alphabet. The state named "e", when present, must be the
// identity.
struct AutomatonSpec {
  int alphabet = 2;
  std::vector<std::string> states;
  // output[s][x], next[s][x]
  std::vector<std::vector<int>> output;
  std::vector<std::vector<int>> next;
  int identity_state = -1;

  static AutomatonSpec from_json_text(std::string const& text);
  static AutomatonSpec from_file(std::string const& path);
};

// Self-similar action generated by a Mealy automaton. Group equality is
// decided only to a configurable depth and transport is a bounded search, so
// results from this backend are labelled non-certifying.
class AutomatonBackend {
 public:
  using group_type = AutomatonElement;

  explicit AutomatonBackend(AutomatonSpec spec,
                            std::size_t compare_depth = 6,
                            std::size_t group_bound = 4,
                            std::size_t search_radius = 16);

  int alphabet() const noexcept { return _spec->alphabet; }
  std::size_t group_bound() const noexcept { return _bound; }
  std::size_t compare_depth() const noexcept { return _depth; }
  bool certified() const noexcept { return false; }
  std::string name() const { return "automaton"; }
  AutomatonSpec const& spec() const noexcept { return *_spec; }

  group_type group_identity() const { return make({}); }
  group_type group_mul(group_type const& g, group_type const& h) const;
  group_type group_inv(group_type const& g) const;
  bool is_group_identity(group_type const& g) const { return g == _identity; }

  std::pair<Word, group_type> act_restrict(group_type const& g, Word const& w) const;

  // Breadth-first search over group elements up to the search radius.
  // Absent means inconclusive, not impossible.
  std::optional<group_type> transport(Word const& alpha,
                                      Word const& delta,
                                      group_type const& k) const;

  // distinct elements (to depth) reachable by reduced words of length <= bound
  std::vector<group_type> enumerate_group() const;

  std::string group_to_string(group_type const& g) const;
  // "e", "a", "a.b^-1"
  group_type parse_group(std::string const& s) const;

  group_type make(std::vector<int> generators) const;

 private:
  // single generator on a single letter
  std::pair<int, int> step(int generator, int letter) const;
  std::vector<group_type> ball(std::size_t radius) const;

  std::shared_ptr<AutomatonSpec const> _spec;
  std::size_t _depth;
  std::size_t _bound;
  std::size_t _radius;
  std::vector<Word> _probe;
  group_type _identity;
  std::shared_ptr<std::vector<group_type> const> _search;
  std::shared_ptr<std::vector<group_type> const> _group;
};

}  // namespace lcm

template <>
struct std::hash<lcm::AutomatonElement> {
  std::size_t operator()(lcm::AutomatonElement const& g) const noexcept {
    std::size_t seed = g.signature.size();
    for (auto v : g.signature) {
      seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    }
    return seed;
  }
};
