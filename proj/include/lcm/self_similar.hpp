#pragma once

// Zappa–Szép product X* ⋈ G of a self-similar action:
//   (α, g)(β, h) = (α (g·β), g|_β h).
// Right LCMs exist iff the word parts agree, since (α, g)P = (α, e)P. For
// pseudo-free recurrent actions the principal left ideals are the sets
// I_n = {(β, h) : |β| >= n}, so the left LCM is the argument with the longer
// word part.

#include <compare>
#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcm/automaton.hpp"
#include "lcm/core.hpp"
#include "lcm/odometer.hpp"
#include "lcm/word.hpp"

namespace lcm {

template <class B>
concept SelfSimilarBackend = requires(B const& b,
                                      typename B::group_type const& g,
                                      Word const& w) {
  typename B::group_type;
  { b.alphabet() } -> std::convertible_to<int>;
  { b.certified() } -> std::convertible_to<bool>;
  { b.group_identity() } -> std::convertible_to<typename B::group_type>;
  { b.group_mul(g, g) } -> std::convertible_to<typename B::group_type>;
  { b.group_inv(g) } -> std::convertible_to<typename B::group_type>;
  { b.is_group_identity(g) } -> std::convertible_to<bool>;
  { b.act_restrict(g, w) }
      -> std::convertible_to<std::pair<Word, typename B::group_type>>;
  { b.transport(w, w, g) }
      -> std::convertible_to<std::optional<typename B::group_type>>;
  { b.enumerate_group() }
      -> std::convertible_to<std::vector<typename B::group_type>>;
  { b.group_to_string(g) } -> std::convertible_to<std::string>;
  { b.name() } -> std::convertible_to<std::string>;
};

template <class G>
struct ZsElement {
  Word word;
  G g;

  friend auto operator<=>(ZsElement const&, ZsElement const&) = default;
  friend bool operator==(ZsElement const&, ZsElement const&) = default;
};

template <SelfSimilarBackend B>
class ZappaSzep {
 public:
  using group_type = typename B::group_type;
  using element_type = ZsElement<group_type>;
  using backend_type = B;

  explicit ZappaSzep(B backend, std::size_t ceiling = default_enumeration_ceiling)
      : _backend(std::move(backend)), _ceiling(ceiling) {}

  B const& backend() const noexcept { return _backend; }

  element_type identity() const { return {Word(), _backend.group_identity()}; }
  element_type unit(group_type g) const { return {Word(), std::move(g)}; }

  element_type mul(element_type const& x, element_type const& y) const {
    auto [moved, restricted] = _backend.act_restrict(x.g, y.word);
    return {x.word + moved, _backend.group_mul(restricted, y.g)};
  }

  std::size_t length(element_type const& x) const { return x.word.size(); }
  bool is_unit(element_type const& x) const { return x.word.empty(); }

  std::pair<Word, group_type> act_restrict(group_type const& g, Word const& w) const {
    return _backend.act_restrict(g, w);
  }

  std::optional<group_type> transport(Word const& alpha,
                                      Word const& delta,
                                      group_type const& k) const {
    return _backend.transport(alpha, delta, k);
  }

  std::optional<element_type> divide(Side side,
                                     element_type const& p,
                                     element_type const& q) const {
    if (side == Side::left) {
      // (α, g)(ω', h') = (β, k): ω' = g^{-1}·ω, h' = (g|_{ω'})^{-1} k
      if (!q.word.starts_with(p.word)) {
        return std::nullopt;
      }
      Word const omega = q.word.drop_front(p.word.size());
      Word const omega_pre = _backend.act_restrict(_backend.group_inv(p.g), omega).first;
      group_type const restr = _backend.act_restrict(p.g, omega_pre).second;
      return element_type{omega_pre,
                          _backend.group_mul(_backend.group_inv(restr), q.g)};
    }
    // (γ, j)(α, g) = (β, k): γ = β minus its last |α| letters, j.α = δ,
    // j|_α = k g^{-1}
    if (q.word.size() < p.word.size()) {
      return std::nullopt;
    }
    std::size_t const cut = q.word.size() - p.word.size();
    auto j = _backend.transport(p.word,
                                q.word.drop_front(cut),
                                _backend.group_mul(q.g, _backend.group_inv(p.g)));
    if (!j) {
      return std::nullopt;
    }
    return element_type{q.word.prefix(cut), *j};
  }

  std::optional<LcmWitness<element_type>> right_lcm(element_type const& x,
                                                    element_type const& y) const {
    if (y.word.starts_with(x.word)) {
      auto w1 = divide(Side::left, x, y);
      return LcmWitness<element_type>{y, *w1, identity()};
    }
    if (x.word.starts_with(y.word)) {
      auto w2 = divide(Side::left, y, x);
      return LcmWitness<element_type>{x, identity(), *w2};
    }
    return std::nullopt;
  }

  // Longer word part wins (ties: the first argument). Absent only when the
  // backend cannot produce the transport witness.
  std::optional<LcmWitness<element_type>> left_lcm(element_type const& x,
                                                   element_type const& y) const {
    if (x.word.size() >= y.word.size()) {
      auto w2 = divide(Side::right, y, x);
      if (!w2) {
        return std::nullopt;
      }
      return LcmWitness<element_type>{x, identity(), *w2};
    }
    auto w1 = divide(Side::right, x, y);
    if (!w1) {
      return std::nullopt;
    }
    return LcmWitness<element_type>{y, *w1, identity()};
  }

  std::vector<element_type> enumerate_up_to(std::size_t n) const {
    auto const group = _backend.enumerate_group();
    auto const words = words_up_to(_backend.alphabet(), n);
    check_ceiling(words.size() * group.size(), _ceiling, "Zappa–Szép enumeration");
    std::vector<element_type> out;
    out.reserve(words.size() * group.size());
    for (auto const& w : words) {
      for (auto const& g : group) {
        out.push_back({w, g});
      }
    }
    return out;
  }

  // (α, g)U = {(α, h)}: representative (α, e)
  element_type canonical_right(element_type const& x) const {
    return {x.word, _backend.group_identity()};
  }

  // U(α, g) = {(u·α, u|_α g)}: representative (0^n, e), reached by the
  // transport u with u·α = 0^n and u|_α = g^{-1}
  element_type canonical_left(element_type const& x) const {
    Word const zeros(std::string(x.word.size(), '0'));
    auto u = _backend.transport(x.word, zeros, _backend.group_inv(x.g));
    if (!u) {
      return x;
    }
    return mul(unit(*u), x);
  }

  std::string to_string(element_type const& x) const {
    return "(" + lcm::to_string(x.word) + "," + _backend.group_to_string(x.g) + ")";
  }

  // "(01,2)", "(,1)", "(ε,-3)"
  element_type parse(std::string const& s) const {
    if (s.size() < 3 || s.front() != '(' || s.back() != ')') {
      throw ParseError("Zappa–Szép element must look like (word,group)", 0);
    }
    auto comma = s.rfind(',');
    if (comma == std::string::npos) {
      throw ParseError("missing ',' in Zappa–Szép element", 0);
    }
    Word w = parse_word(s.substr(1, comma - 1), _backend.alphabet());
    return {w, _backend.parse_group(s.substr(comma + 1, s.size() - comma - 2))};
  }

  std::string name() const { return _backend.name(); }

 private:
  B _backend;
  std::size_t _ceiling;
};

using OdometerMonoid = ZappaSzep<OdometerBackend>;
using AutomatonMonoid = ZappaSzep<AutomatonBackend>;

}  // namespace lcm

template <class G>
struct std::hash<lcm::ZsElement<G>> {
  std::size_t operator()(lcm::ZsElement<G> const& x) const noexcept {
    std::size_t seed = std::hash<lcm::Word>{}(x.word);
    lcm::hash_combine(seed, std::hash<G>{}(x.g));
    return seed;
  }
};
