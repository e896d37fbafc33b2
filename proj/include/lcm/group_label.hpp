#pragma once

// ψ[p, q, r] = p q^{-1} r evaluated in a group containing P: the free group
// for X*, Z^k for N^k. No ambient group is shipped for Zappa–Szép products.

#include <cstdint>
#include <string>
#include <vector>

#include "lcm/core.hpp"
#include "lcm/free_monoid.hpp"
#include "lcm/grid_monoid.hpp"
#include "lcm/isg.hpp"

namespace lcm {

// Freely reduced word; letter x is +(x+1), its inverse -(x+1).
struct FreeGroupWord {
  std::vector<int> letters;

  static FreeGroupWord from_word(Word const& w);
  FreeGroupWord inverse() const;
  bool is_identity() const noexcept { return letters.empty(); }

  friend FreeGroupWord operator*(FreeGroupWord const& a, FreeGroupWord const& b);
  friend bool operator==(FreeGroupWord const&, FreeGroupWord const&) = default;
};

// "ε", "0", "01^-1" (the last is 0 followed by the inverse of 1)
std::string to_string(FreeGroupWord const& g);

struct IntVector {
  std::vector<std::int64_t> coords;

  static IntVector from_grid(GridVector const& v);
  IntVector inverse() const;
  bool is_identity() const noexcept;

  friend IntVector operator*(IntVector const& a, IntVector const& b);
  friend bool operator==(IntVector const&, IntVector const&) = default;
};

std::string to_string(IntVector const& v);

template <LcmMonoid M>
struct GroupLabels {
  static constexpr bool supported = false;
};

template <>
struct GroupLabels<FreeMonoid> {
  static constexpr bool supported = true;
  using label_type = FreeGroupWord;
  static label_type embed(FreeMonoid const&, Word const& w) {
    return FreeGroupWord::from_word(w);
  }
};

template <>
struct GroupLabels<GridMonoid> {
  static constexpr bool supported = true;
  using label_type = IntVector;
  static label_type embed(GridMonoid const&, GridVector const& v) {
    return IntVector::from_grid(v);
  }
};

template <LcmMonoid M>
auto group_label(M const& m, Triple<element_t<M>> const& s) {
  if constexpr (GroupLabels<M>::supported) {
    if (s.is_zero()) {
      throw Error("group label of the zero element is undefined");
    }
    using L = GroupLabels<M>;
    return L::embed(m, s.p()) * L::embed(m, s.q()).inverse() * L::embed(m, s.r());
  } else {
    throw UnsupportedInstance("no ambient group arithmetic for " + m.name());
    return 0;
  }
}

}  // namespace lcm
