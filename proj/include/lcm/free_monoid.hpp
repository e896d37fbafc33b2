#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lcm/core.hpp"
#include "lcm/word.hpp"

namespace lcm {

// The free monoid X* on k letters. Right LCMs exist iff one word is a prefix
// of the other, left LCMs iff one is a suffix of the other. No nontrivial
// units.
class FreeMonoid {
 public:
  using element_type = Word;

  explicit FreeMonoid(int alphabet = 2,
                      std::size_t ceiling = default_enumeration_ceiling);

  int alphabet() const noexcept { return _alphabet; }

  Word identity() const { return Word(); }
  Word mul(Word const& a, Word const& b) const { return a + b; }
  std::size_t length(Word const& a) const { return a.size(); }

  std::optional<LcmWitness<Word>> right_lcm(Word const& p, Word const& q) const;
  std::optional<LcmWitness<Word>> left_lcm(Word const& p, Word const& q) const;
  std::optional<Word> divide(Side side, Word const& p, Word const& q) const;
  bool is_unit(Word const& a) const { return a.empty(); }

  std::vector<Word> enumerate_up_to(std::size_t n) const;

  Word canonical_right(Word const& a) const { return a; }
  Word canonical_left(Word const& a) const { return a; }

  std::string to_string(Word const& a) const { return lcm::to_string(a); }
  Word parse(std::string const& s) const { return parse_word(s, _alphabet); }
  std::string name() const { return "free:" + std::to_string(_alphabet); }

 private:
  int _alphabet;
  std::size_t _ceiling;
};

}  // namespace lcm
