#pragma once

// The LCM-monoid contract shared by every concrete instance, plus the generic
// helpers (unit solving, opposite monoid) that only need the contract.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcm {

// Error hierarchy. Everything thrown by the library derives from `Error`.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string const& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), _pos(pos) {}
  std::size_t position() const noexcept { return _pos; }

 private:
  std::size_t _pos;
};

class InvalidTriple : public Error {
 public:
  using Error::Error;
};

class UnsupportedInstance : public Error {
 public:
  using Error::Error;
};

// Which factor of a product is known. `left`: the known element p is the left
// factor, solve p*x = q. `right`: solve x*p = q.
enum class Side { left, right };

constexpr Side other(Side s) noexcept {
  return s == Side::left ? Side::right : Side::left;
}

// Result of an LCM query. For a right LCM of (p, q): p*w1 = q*w2 = r.
// For a left LCM: w1*p = w2*q = r.
template <class E>
struct LcmWitness {
  E r;
  E w1;
  E w2;
  bool operator==(LcmWitness const&) const = default;
};

inline constexpr std::size_t default_enumeration_ceiling = 1'000'000;

// The contract every concrete monoid implements. Elements are values; the
// monoid object carries the runtime parameters (alphabet size, rank, ...).
template <class M>
concept LcmMonoid = requires(M const& m,
                             typename M::element_type const& a,
                             typename M::element_type const& b,
                             std::size_t n,
                             std::string const& s) {
  typename M::element_type;
  { m.identity() } -> std::convertible_to<typename M::element_type>;
  { m.mul(a, b) } -> std::convertible_to<typename M::element_type>;
  { m.length(a) } -> std::convertible_to<std::size_t>;
  { m.right_lcm(a, b) }
      -> std::convertible_to<std::optional<LcmWitness<typename M::element_type>>>;
  { m.left_lcm(a, b) }
      -> std::convertible_to<std::optional<LcmWitness<typename M::element_type>>>;
  { m.divide(Side::left, a, b) }
      -> std::convertible_to<std::optional<typename M::element_type>>;
  { m.is_unit(a) } -> std::convertible_to<bool>;
  { m.enumerate_up_to(n) }
      -> std::convertible_to<std::vector<typename M::element_type>>;
  // Canonical representatives of the unit classes aU and Ua.
  { m.canonical_right(a) } -> std::convertible_to<typename M::element_type>;
  { m.canonical_left(a) } -> std::convertible_to<typename M::element_type>;
  { m.to_string(a) } -> std::convertible_to<std::string>;
  { m.parse(s) } -> std::convertible_to<typename M::element_type>;
  { m.name() } -> std::convertible_to<std::string>;
  { a == b } -> std::convertible_to<bool>;
  { a < b } -> std::convertible_to<bool>;
  { std::hash<typename M::element_type>{}(a) } -> std::convertible_to<std::size_t>;
};

template <class M>
using element_t = typename M::element_type;

// side = right: unit u with p = q*u.  side = left: unit u with p = u*q.
template <LcmMonoid M>
std::optional<element_t<M>> unit_solve(M const& m,
                                       Side side,
                                       element_t<M> const& p,
                                       element_t<M> const& q) {
  auto x = side == Side::right ? m.divide(Side::left, q, p)
                               : m.divide(Side::right, q, p);
  if (x && m.is_unit(*x)) {
    return x;
  }
  return std::nullopt;
}

// The opposite monoid: same elements, mul'(p, q) = mul(q, p). The two LCM
// operations and the two division sides trade places.
template <LcmMonoid M>
class Opposite {
 public:
  using element_type = element_t<M>;
  using base_type = M;

  explicit Opposite(M base) : _base(std::move(base)) {}

  M const& base() const noexcept { return _base; }

  element_type identity() const { return _base.identity(); }
  element_type mul(element_type const& a, element_type const& b) const {
    return _base.mul(b, a);
  }
  std::size_t length(element_type const& a) const { return _base.length(a); }
  std::optional<LcmWitness<element_type>> right_lcm(element_type const& a,
                                                    element_type const& b) const {
    return _base.left_lcm(a, b);
  }
  std::optional<LcmWitness<element_type>> left_lcm(element_type const& a,
                                                   element_type const& b) const {
    return _base.right_lcm(a, b);
  }
  std::optional<element_type> divide(Side side,
                                     element_type const& p,
                                     element_type const& q) const {
    return _base.divide(other(side), p, q);
  }
  bool is_unit(element_type const& a) const { return _base.is_unit(a); }
  std::vector<element_type> enumerate_up_to(std::size_t n) const {
    return _base.enumerate_up_to(n);
  }
  element_type canonical_right(element_type const& a) const {
    return _base.canonical_left(a);
  }
  element_type canonical_left(element_type const& a) const {
    return _base.canonical_right(a);
  }
  std::string to_string(element_type const& a) const { return _base.to_string(a); }
  element_type parse(std::string const& s) const { return _base.parse(s); }
  std::string name() const { return "op(" + _base.name() + ")"; }

 private:
  M _base;
};

template <LcmMonoid M>
Opposite<M> opposite(M m) {
  return Opposite<M>(std::move(m));
}

// opposite(opposite(M)) is M again.
template <LcmMonoid M>
M opposite(Opposite<M> m) {
  return m.base();
}

// Throws ResourceLimit when an enumeration would exceed `ceiling` elements.
inline void check_ceiling(std::size_t count,
                          std::size_t ceiling,
                          char const* what) {
  if (count > ceiling) {
    throw ResourceLimit(std::string(what) + ": " + std::to_string(count)
                        + " elements exceeds the ceiling of "
                        + std::to_string(ceiling));
  }
}

// boost-style hash combine
inline void hash_combine(std::size_t& seed, std::size_t v) noexcept {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace lcm
