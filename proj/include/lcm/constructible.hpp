#pragma once

// Constructible subsets of Δ = {(a, x) : x ∈ I_a}. For an LCM monoid every
// nonempty one is Δ_p ∩ Δ^q = {(c q p x, p x)}, stored as the pair (p, q) of
// unit-class representatives.

#include <optional>
#include <string>
#include <utility>

#include "lcm/core.hpp"

namespace lcm {

template <class E>
class ConstructibleSet {
 public:
  ConstructibleSet() = default;  // empty

  static ConstructibleSet empty() { return ConstructibleSet(); }
  static ConstructibleSet raw(E p, E q) {
    ConstructibleSet y;
    y._pq = std::make_pair(std::move(p), std::move(q));
    return y;
  }

  bool is_empty() const noexcept { return !_pq.has_value(); }
  E const& p() const { return _pq->first; }
  E const& q() const { return _pq->second; }

  bool operator==(ConstructibleSet const&) const = default;

 private:
  std::optional<std::pair<E, E>> _pq;
};

// (a, x) with x a right divisor of a
template <class E>
struct DeltaPair {
  E a;
  E x;
  bool operator==(DeltaPair const&) const = default;
};

enum class Translate { push, pull };

// Δ_p ∩ Δ^q with p, q replaced by their unit-class representatives
template <LcmMonoid M>
ConstructibleSet<element_t<M>> cs_make(M const& m,
                                       element_t<M> const& p,
                                       element_t<M> const& q) {
  return ConstructibleSet<element_t<M>>::raw(m.canonical_right(p),
                                             m.canonical_left(q));
}

template <LcmMonoid M>
ConstructibleSet<element_t<M>> cs_full(M const& m) {
  return cs_make(m, m.identity(), m.identity());
}

// same set iff pP = p'P and Pq = Pq'
template <LcmMonoid M>
bool cs_eq(M const& m,
           ConstructibleSet<element_t<M>> const& y,
           ConstructibleSet<element_t<M>> const& z) {
  if (y.is_empty() || z.is_empty()) {
    return y.is_empty() && z.is_empty();
  }
  return unit_solve(m, Side::right, y.p(), z.p()).has_value()
         && unit_solve(m, Side::left, y.q(), z.q()).has_value();
}

template <LcmMonoid M>
ConstructibleSet<element_t<M>> cs_intersect(M const& m,
                                            ConstructibleSet<element_t<M>> const& y,
                                            ConstructibleSet<element_t<M>> const& z) {
  if (y.is_empty() || z.is_empty()) {
    return {};
  }
  auto right = m.right_lcm(y.p(), z.p());
  if (!right) {
    return {};
  }
  auto left = m.left_lcm(y.q(), z.q());
  if (!left) {
    return {};
  }
  return cs_make(m, right->r, left->r);
}

// push: Y_r = {(a, r x) : (a, x) ∈ Y}.  pull: Y^r = {(a, x) : (a, r x) ∈ Y}.
template <LcmMonoid M>
ConstructibleSet<element_t<M>> cs_translate(M const& m,
                                            Translate dir,
                                            ConstructibleSet<element_t<M>> const& y,
                                            element_t<M> const& r) {
  if (y.is_empty()) {
    return {};
  }
  if (dir == Translate::push) {
    // r1 r = q1 q generates Pr ∩ Pq: Δ_{rp} ∩ Δ^{r1}
    auto left = m.left_lcm(r, y.q());
    if (!left) {
      return {};
    }
    return cs_make(m, m.mul(r, y.p()), left->w1);
  }
  // p p1 = r r1 generates pP ∩ rP: Δ_{r1} ∩ Δ^{qr}
  auto right = m.right_lcm(y.p(), r);
  if (!right) {
    return {};
  }
  return cs_make(m, right->w2, m.mul(y.q(), r));
}

template <LcmMonoid M>
bool in_delta(M const& m, DeltaPair<element_t<M>> const& d) {
  return m.divide(Side::right, d.x, d.a).has_value();
}

// (a, y) ∈ Δ_p ∩ Δ^q iff y ∈ pP and a ∈ P q y
template <LcmMonoid M>
bool cs_member(M const& m,
               DeltaPair<element_t<M>> const& d,
               ConstructibleSet<element_t<M>> const& y) {
  if (y.is_empty()) {
    return false;
  }
  if (!m.divide(Side::left, y.p(), d.x)) {
    return false;
  }
  return m.divide(Side::right, m.mul(y.q(), d.x), d.a).has_value();
}

template <LcmMonoid M>
std::string cs_to_string(M const& m, ConstructibleSet<element_t<M>> const& y) {
  if (y.is_empty()) {
    return "∅";
  }
  return "e(" + m.to_string(y.p()) + ";" + m.to_string(y.q()) + ")";
}

}  // namespace lcm
