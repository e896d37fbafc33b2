#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcm/core.hpp"

namespace lcm {

// A point of N^k.
struct GridVector {
  std::vector<std::uint32_t> coords;

  std::size_t total() const noexcept {
    std::size_t s = 0;
    for (auto c : coords) {
      s += c;
    }
    return s;
  }

  // coordinate sum first; within a sum, lexicographically larger first, so
  // N^2 enumerates as (0,0), (1,0), (0,1), (2,0), ...
  friend std::strong_ordering operator<=>(GridVector const& a, GridVector const& b) {
    if (auto c = a.total() <=> b.total(); c != 0) {
      return c;
    }
    return b.coords <=> a.coords;
  }
  friend bool operator==(GridVector const&, GridVector const&) = default;
};

// The commutative grid monoid N^k; both LCMs are the coordinatewise maximum.
class GridMonoid {
 public:
  using element_type = GridVector;

  explicit GridMonoid(int rank = 2,
                      std::size_t ceiling = default_enumeration_ceiling);

  int rank() const noexcept { return _rank; }

  GridVector identity() const;
  GridVector mul(GridVector const& a, GridVector const& b) const;
  std::size_t length(GridVector const& a) const { return a.total(); }

  std::optional<LcmWitness<GridVector>> right_lcm(GridVector const& p,
                                                  GridVector const& q) const;
  std::optional<LcmWitness<GridVector>> left_lcm(GridVector const& p,
                                                 GridVector const& q) const {
    return right_lcm(p, q);
  }
  std::optional<GridVector> divide(Side side,
                                   GridVector const& p,
                                   GridVector const& q) const;
  bool is_unit(GridVector const& a) const { return a.total() == 0; }

  std::vector<GridVector> enumerate_up_to(std::size_t n) const;

  GridVector canonical_right(GridVector const& a) const { return a; }
  GridVector canonical_left(GridVector const& a) const { return a; }

  std::string to_string(GridVector const& a) const;
  // "(1,0)"; "ε" is the identity
  GridVector parse(std::string const& s) const;
  std::string name() const { return "grid:" + std::to_string(_rank); }

 private:
  int _rank;
  std::size_t _ceiling;
};

}  // namespace lcm

template <>
struct std::hash<lcm::GridVector> {
  std::size_t operator()(lcm::GridVector const& v) const noexcept {
    std::size_t seed = v.coords.size();
    for (auto c : v.coords) {
      lcm::hash_combine(seed, c);
    }
    return seed;
  }
};
