#pragma once

// The inverse semigroup S_P of an LCM monoid P: classes [p, q, r] with
// q ∈ Pp ∩ rP, modulo (p, q, r) ~ (pu, vqu, vr) for units u, v, plus a zero.
// [p, q, r] stands for the partial bijection v_p v_q^* v_r.

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lcm/core.hpp"

namespace lcm {

template <class E>
class Triple {
 public:
  Triple() = default;  // zero

  static Triple zero() { return Triple(); }

  // No validation; InverseSemigroup::make is the checked constructor.
  static Triple unchecked(E p, E q, E r, E p1, E r1) {
    Triple t;
    t._slots = Slots{std::move(p), std::move(q), std::move(r), std::move(p1),
                     std::move(r1)};
    return t;
  }

  bool is_zero() const noexcept { return !_slots.has_value(); }

  E const& p() const { return _slots->p; }
  E const& q() const { return _slots->q; }
  E const& r() const { return _slots->r; }
  // p1 * p = q
  E const& p1() const { return _slots->p1; }
  // r * r1 = q
  E const& r1() const { return _slots->r1; }

  // Slot-wise identity of representatives (not the S_P equality).
  friend bool operator==(Triple const& a, Triple const& b) {
    if (a.is_zero() || b.is_zero()) {
      return a.is_zero() == b.is_zero();
    }
    return a.p() == b.p() && a.q() == b.q() && a.r() == b.r();
  }

 private:
  struct Slots {
    E p, q, r, p1, r1;
  };
  std::optional<Slots> _slots;
};

template <LcmMonoid M>
class InverseSemigroup {
 public:
  using element_type = element_t<M>;
  using triple_type = Triple<element_type>;

  explicit InverseSemigroup(M monoid) : _m(std::move(monoid)) {}

  M const& monoid() const noexcept { return _m; }

  triple_type make(element_type const& p,
                   element_type const& q,
                   element_type const& r) const {
    auto p1 = _m.divide(Side::right, p, q);
    if (!p1) {
      throw InvalidTriple("q = " + _m.to_string(q) + " is not in P·"
                          + _m.to_string(p));
    }
    auto r1 = _m.divide(Side::left, r, q);
    if (!r1) {
      throw InvalidTriple("q = " + _m.to_string(q) + " is not in "
                          + _m.to_string(r) + "·P");
    }
    return triple_type::unchecked(p, q, r, std::move(*p1), std::move(*r1));
  }

  std::optional<triple_type> try_make(element_type const& p,
                                      element_type const& q,
                                      element_type const& r) const {
    auto p1 = _m.divide(Side::right, p, q);
    if (!p1) {
      return std::nullopt;
    }
    auto r1 = _m.divide(Side::left, r, q);
    if (!r1) {
      return std::nullopt;
    }
    return triple_type::unchecked(p, q, r, std::move(*p1), std::move(*r1));
  }

  // [p] = [p, p, p], the image of v_p
  triple_type generator(element_type const& p) const { return make(p, p, p); }

  // [p, qp, q]: the idempotent with ideal pair (Pq, pP)
  triple_type idempotent(element_type const& p, element_type const& q) const {
    return make(p, _m.mul(q, p), q);
  }

  triple_type top() const { return generator(_m.identity()); }

  // (p, q, r) ~ (a, b, c) iff p = a u, q = v b u, r = v c for units u, v
  bool eq(triple_type const& s, triple_type const& t) const {
    if (s.is_zero() || t.is_zero()) {
      return s.is_zero() && t.is_zero();
    }
    auto u = unit_solve(_m, Side::right, s.p(), t.p());
    if (!u) {
      return false;
    }
    auto v = unit_solve(_m, Side::left, s.r(), t.r());
    if (!v) {
      return false;
    }
    return _m.mul(_m.mul(*v, t.q()), *u) == s.q();
  }

  // [p,q,r][a,b,c] = [p q1, r1 r a a1, b1 c] where r a a1 = q q1 generates
  // raP ∩ qP and r1 r a = b1 b generates Pra ∩ Pb; zero if either is empty.
  triple_type product(triple_type const& s, triple_type const& t) const {
    if (s.is_zero() || t.is_zero()) {
      return triple_type::zero();
    }
    element_type const ra = _m.mul(s.r(), t.p());
    auto right = _m.right_lcm(ra, s.q());
    if (!right) {
      return triple_type::zero();
    }
    auto left = _m.left_lcm(ra, t.q());
    if (!left) {
      return triple_type::zero();
    }
    element_type const& a1 = right->w1;
    element_type const& q1 = right->w2;
    element_type const& r1 = left->w1;
    element_type const& b1 = left->w2;
    // witnesses: (r1 p1)(p q1) = r1 q q1 and (b1 c)(c1 a1) = b1 b a1
    return triple_type::unchecked(_m.mul(s.p(), q1),
                                  _m.mul(r1, _m.mul(ra, a1)),
                                  _m.mul(b1, t.r()),
                                  _m.mul(r1, s.p1()),
                                  _m.mul(t.r1(), a1));
  }

  // [p, q, r]^* = [r1, q, p1]
  triple_type star(triple_type const& s) const {
    if (s.is_zero()) {
      return s;
    }
    return triple_type::unchecked(s.r1(), s.q(), s.p1(), s.r(), s.p());
  }

  // s <= t iff s = t s^* s
  bool leq(triple_type const& s, triple_type const& t) const {
    if (s.is_zero()) {
      return true;
    }
    return eq(product(t, product(star(s), s)), s);
  }

  bool is_idempotent(triple_type const& s) const {
    if (s.is_zero()) {
      return true;
    }
    if (_m.mul(s.r(), s.p()) == s.q()) {
      return true;
    }
    return eq(product(s, s), s);
  }

  // Ideal-containment criterion for idempotents:
  // [p,qp,q] <= [a,ba,b] iff pP ⊆ aP and Pq ⊆ Pb.
  bool idempotent_leq(element_type const& p,
                      element_type const& q,
                      element_type const& a,
                      element_type const& b) const {
    return _m.divide(Side::left, a, p).has_value()
           && _m.divide(Side::right, b, q).has_value();
  }

  // s s^* = [p, p1 p, p1]
  triple_type range_idempotent(triple_type const& s) const {
    return product(s, star(s));
  }
  // s^* s = [r1, r r1, r]
  triple_type domain_idempotent(triple_type const& s) const {
    return product(star(s), s);
  }

  // All classes [p, q, r] with every slot of length <= n, one representative
  // per class, in enumeration order of the first representative found.
  std::vector<triple_type> enumerate(std::size_t n) const {
    auto const elems = _m.enumerate_up_to(n);
    std::vector<triple_type> out;
    // bucket by class invariants: pU, Ur and the length of q
    struct Key {
      element_type p;
      element_type r;
      std::size_t qlen;
      bool operator==(Key const&) const = default;
    };
    struct KeyHash {
      std::size_t operator()(Key const& k) const noexcept {
        std::size_t seed = std::hash<element_type>{}(k.p);
        hash_combine(seed, std::hash<element_type>{}(k.r));
        hash_combine(seed, k.qlen);
        return seed;
      }
    };
    std::unordered_map<Key, std::vector<std::size_t>, KeyHash> buckets;
    for (auto const& q : elems) {
      for (auto const& p : elems) {
        auto p1 = _m.divide(Side::right, p, q);
        if (!p1) {
          continue;
        }
        for (auto const& r : elems) {
          auto r1 = _m.divide(Side::left, r, q);
          if (!r1) {
            continue;
          }
          auto t = triple_type::unchecked(p, q, r, *p1, std::move(*r1));
          Key key{_m.canonical_right(p), _m.canonical_left(r), _m.length(q)};
          auto& bucket = buckets[key];
          bool seen = false;
          for (auto idx : bucket) {
            if (eq(out[idx], t)) {
              seen = true;
              break;
            }
          }
          if (!seen) {
            bucket.push_back(out.size());
            out.push_back(std::move(t));
          }
        }
      }
    }
    return out;
  }

  std::string to_string(triple_type const& s) const {
    if (s.is_zero()) {
      return "0";
    }
    return "[" + _m.to_string(s.p()) + "," + _m.to_string(s.q()) + ","
           + _m.to_string(s.r()) + "]";
  }

 private:
  M _m;
};

// [p, q, r] ↦ [r, q, p], an anti-isomorphism S_P → S_{P^op}
template <LcmMonoid M>
Triple<element_t<M>> to_opposite(InverseSemigroup<Opposite<M>> const& op,
                                 Triple<element_t<M>> const& s) {
  if (s.is_zero()) {
    return s;
  }
  return op.make(s.r(), s.q(), s.p());
}

}  // namespace lcm
