#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcm/word.hpp"

namespace lcm {

// a^m in the infinite cyclic group generated by the adding machine a.
struct OdometerElement {
  std::int64_t exponent = 0;
  friend auto operator<=>(OdometerElement const&, OdometerElement const&) = default;
};

// The binary odometer, least-significant bit first: a.(0w) = 1w with
// restriction e, a.(1w) = 0(a.w) with restriction a. On a word of length n
// with binary value v, a^m writes (v + m) mod 2^n and restricts to
// a^floor((v + m) / 2^n). Pseudo-free and recurrent, so every query below is
// exact.
class OdometerBackend {
 public:
  using group_type = OdometerElement;

  explicit OdometerBackend(std::int64_t group_bound = 8) : _bound(group_bound) {}

  int alphabet() const noexcept { return 2; }
  std::int64_t group_bound() const noexcept { return _bound; }
  bool certified() const noexcept { return true; }
  std::string name() const { return "odometer"; }

  group_type group_identity() const { return {0}; }
  group_type group_mul(group_type g, group_type h) const {
    return {g.exponent + h.exponent};
  }
  group_type group_inv(group_type g) const { return {-g.exponent}; }
  bool is_group_identity(group_type g) const { return g.exponent == 0; }

  // (g.w, g|_w)
  std::pair<Word, group_type> act_restrict(group_type g, Word const& w) const;

  // j with j.alpha = delta and j|_alpha = k; requires |alpha| = |delta|.
  std::optional<group_type> transport(Word const& alpha,
                                      Word const& delta,
                                      group_type k) const;

  // exponents -bound..bound in increasing order
  std::vector<group_type> enumerate_group() const;

  std::string group_to_string(group_type g) const {
    return std::to_string(g.exponent);
  }
  group_type parse_group(std::string const& s) const;

  static std::int64_t value(Word const& w);
  static Word from_value(std::uint64_t v, std::size_t n);

 private:
  std::int64_t _bound;
};

}  // namespace lcm

template <>
struct std::hash<lcm::OdometerElement> {
  std::size_t operator()(lcm::OdometerElement g) const noexcept {
    return std::hash<std::int64_t>{}(g.exponent);
  }
};
