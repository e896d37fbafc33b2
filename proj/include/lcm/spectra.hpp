#pragma once

// Depth-truncated models of E(S_P), of the ideal semilattices P_l (principal
// left ideals Pq) and P_r (principal right ideals pP), the isomorphism
// [p, qp, q] ↦ (Pq, pP) between them, and the action of S_P on pairs of
// filters.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcm/core.hpp"
#include "lcm/isg.hpp"
#include "lcm/semilattice.hpp"

namespace lcm {

inline constexpr std::size_t default_semilattice_ceiling = 4096;

template <LcmMonoid M>
struct IdempotentSemilattice {
  FiniteSemilattice lattice;
  std::vector<Triple<element_t<M>>> elements;  // index 0 is zero
  std::size_t generators = 0;                  // nonzero idempotents before closure
};

// The sub-semilattice of E(S_P) generated by the [p, qp, q] with
// length(p), length(q) <= depth, closed under products, plus zero.
template <LcmMonoid M>
IdempotentSemilattice<M> build_semilattice(InverseSemigroup<M> const& isg,
                                           std::size_t depth,
                                           std::size_t ceiling = default_semilattice_ceiling) {
  using E = element_t<M>;
  auto const& m = isg.monoid();
  IdempotentSemilattice<M> out;
  out.elements.push_back(Triple<E>::zero());
  std::map<std::pair<E, E>, std::vector<std::size_t>> buckets;
  auto find_or_add = [&](Triple<E> const& t) -> std::size_t {
    if (t.is_zero()) {
      return 0;
    }
    auto& bucket = buckets[{m.canonical_right(t.p()), m.canonical_left(t.r())}];
    for (auto i : bucket) {
      if (isg.eq(out.elements[i], t)) {
        return i;
      }
    }
    check_ceiling(out.elements.size() + 1, ceiling, "idempotent semilattice");
    bucket.push_back(out.elements.size());
    out.elements.push_back(t);
    return out.elements.size() - 1;
  };
  auto const elems = m.enumerate_up_to(depth);
  for (auto const& p : elems) {
    for (auto const& q : elems) {
      find_or_add(isg.idempotent(p, q));
    }
  }
  out.generators = out.elements.size() - 1;
  std::vector<std::vector<std::size_t>> meet;
  // close under products; the table grows with the element list
  for (std::size_t a = 0; a < out.elements.size(); ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      find_or_add(isg.product(out.elements[a], out.elements[b]));
    }
  }
  std::size_t const n = out.elements.size();
  meet.assign(n, std::vector<std::size_t>(n, 0));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(isg.to_string(out.elements[a]));
    for (std::size_t b = 0; b < n; ++b) {
      meet[a][b] = find_or_add(isg.product(out.elements[a], out.elements[b]));
    }
  }
  if (out.elements.size() != n) {
    throw Error("idempotent semilattice did not close");
  }
  std::size_t const top = find_or_add(isg.top());
  out.lattice = FiniteSemilattice(std::move(labels), std::move(meet), 0, top);
  return out;
}

// Principal left ideals Pq (side = left) or right ideals pP (side = right)
// with length(q) <= depth, closed under intersection, plus ∅ at index 0.
template <LcmMonoid M>
struct IdealSemilattice {
  Side side = Side::right;
  FiniteSemilattice lattice;
  std::vector<element_t<M>> generators;  // generators[0] is unused (∅)

  std::optional<std::size_t> index_of(M const& m, element_t<M> const& x) const {
    for (std::size_t i = 1; i < generators.size(); ++i) {
      // Px = Pg iff x = u g; xP = gP iff x = g u
      auto u = side == Side::left ? unit_solve(m, Side::left, x, generators[i])
                                  : unit_solve(m, Side::right, x, generators[i]);
      if (u) {
        return i;
      }
    }
    return std::nullopt;
  }
};

template <LcmMonoid M>
IdealSemilattice<M> build_ideal_semilattice(M const& m,
                                            Side side,
                                            std::size_t depth,
                                            std::size_t ceiling = default_semilattice_ceiling) {
  using E = element_t<M>;
  IdealSemilattice<M> out;
  out.side = side;
  out.generators.push_back(m.identity());
  auto canonical = [&](E const& x) {
    return side == Side::left ? m.canonical_left(x) : m.canonical_right(x);
  };
  auto find_or_add = [&](E const& x) -> std::size_t {
    if (auto i = out.index_of(m, x)) {
      return *i;
    }
    check_ceiling(out.generators.size() + 1, ceiling, "ideal semilattice");
    out.generators.push_back(canonical(x));
    return out.generators.size() - 1;
  };
  auto intersect = [&](std::size_t a, std::size_t b) -> std::size_t {
    if (a == 0 || b == 0) {
      return 0;
    }
    auto l = side == Side::left ? m.left_lcm(out.generators[a], out.generators[b])
                                : m.right_lcm(out.generators[a], out.generators[b]);
    return l ? find_or_add(l->r) : 0;
  };
  for (auto const& x : m.enumerate_up_to(depth)) {
    find_or_add(x);
  }
  for (std::size_t a = 1; a < out.generators.size(); ++a) {
    for (std::size_t b = 1; b <= a; ++b) {
      intersect(a, b);
    }
  }
  std::size_t const n = out.generators.size();
  std::vector<std::vector<std::size_t>> meet(n, std::vector<std::size_t>(n, 0));
  std::vector<std::string> labels{"∅"};
  for (std::size_t a = 1; a < n; ++a) {
    auto const g = m.to_string(out.generators[a]);
    labels.push_back(side == Side::left ? "P" + g : g + "P");
    for (std::size_t b = 1; b < n; ++b) {
      meet[a][b] = intersect(a, b);
    }
  }
  if (out.generators.size() != n) {
    throw Error("ideal semilattice did not close");
  }
  std::size_t const top = *out.index_of(m, m.identity());
  out.lattice = FiniteSemilattice(std::move(labels), std::move(meet), 0, top);
  return out;
}

// φ[p, qp, q] = (Pq, pP)
template <LcmMonoid M>
std::pair<element_t<M>, element_t<M>> phi_ideal_pairs(InverseSemigroup<M> const& isg,
                                                      Triple<element_t<M>> const& e) {
  if (e.is_zero() || !isg.is_idempotent(e)) {
    throw Error("φ is defined on nonzero idempotents only");
  }
  return {e.r(), e.p()};
}

struct PhiReport {
  bool bijective = false;
  bool meet_preserving = false;
  std::size_t idempotents = 0;     // nonzero
  std::size_t ideal_pairs = 0;     // nonzero pairs
  std::optional<std::string> counterexample;
};

// φ against E ×₀ F built from the two ideal semilattices of the same depth.
template <LcmMonoid M>
PhiReport check_phi(InverseSemigroup<M> const& isg,
                    IdempotentSemilattice<M> const& es,
                    IdealSemilattice<M> const& left,
                    IdealSemilattice<M> const& right) {
  auto const& m = isg.monoid();
  PhiReport rep;
  auto prod = product_semilattice(left.lattice, right.lattice);
  std::size_t const n = es.elements.size();
  rep.idempotents = n - 1;
  rep.ideal_pairs = prod.lattice.size() - 1;
  std::vector<std::size_t> image(n, 0);
  std::vector<bool> hit(prod.lattice.size(), false);
  rep.bijective = true;
  for (std::size_t i = 1; i < n; ++i) {
    auto [lq, rp] = phi_ideal_pairs(isg, es.elements[i]);
    auto li = left.index_of(m, lq);
    auto ri = right.index_of(m, rp);
    if (!li || !ri) {
      rep.bijective = false;
      rep.counterexample = "no ideal pair for " + isg.to_string(es.elements[i]);
      continue;
    }
    image[i] = prod.pair_index[*li][*ri];
    if (hit[image[i]]) {
      rep.bijective = false;
      rep.counterexample = "two idempotents share the pair of "
                           + isg.to_string(es.elements[i]);
    }
    hit[image[i]] = true;
  }
  if (rep.idempotents != rep.ideal_pairs) {
    rep.bijective = false;
  }
  rep.meet_preserving = true;
  for (std::size_t a = 1; a < n; ++a) {
    for (std::size_t b = 1; b < n; ++b) {
      if (image[es.lattice.meet(a, b)] != prod.lattice.meet(image[a], image[b])) {
        rep.meet_preserving = false;
        rep.counterexample = "meet of " + isg.to_string(es.elements[a]) + " and "
                             + isg.to_string(es.elements[b]);
      }
    }
  }
  return rep;
}

// A pair (ξ, η) of filters in P_l and P_r, each given by the generators of
// its member ideals. Members of length <= the exact depth are known exactly;
// longer ones are not tracked.
template <class E>
struct FilterState {
  std::vector<E> left;
  std::vector<E> right;
  long left_exact = 0;
  long right_exact = 0;
};

template <class E>
struct ActionResult {
  std::optional<FilterState<E>> state;
  bool truncated = false;
};

namespace detail {

template <LcmMonoid M>
bool contains_ideal(M const& m, Side side, std::vector<element_t<M>> const& gens,
                    element_t<M> const& x) {
  return std::any_of(gens.begin(), gens.end(), [&](auto const& g) {
    return unit_solve(m, side, x, g).has_value();
  });
}

// all ideals of length <= depth containing some member of `gens`
template <LcmMonoid M>
std::vector<element_t<M>> upward_close(M const& m,
                                       Side side,
                                       std::vector<element_t<M>> const& gens,
                                       long depth) {
  std::vector<element_t<M>> out;
  if (depth < 0) {
    return out;
  }
  for (auto const& z : m.enumerate_up_to(static_cast<std::size_t>(depth))) {
    auto const c = side == Side::left ? m.canonical_left(z) : m.canonical_right(z);
    if (contains_ideal(m, side, out, c)) {
      continue;
    }
    // Pz ⊇ Px iff x ∈ Pz;  zP ⊇ xP iff x ∈ zP
    bool above = std::any_of(gens.begin(), gens.end(), [&](auto const& x) {
      return side == Side::left ? m.divide(Side::right, c, x).has_value()
                                : m.divide(Side::left, c, x).has_value();
    });
    if (above) {
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// The filter ↑g of an ideal semilattice, as a FilterState side.
template <LcmMonoid M>
std::vector<element_t<M>> principal_filter(M const& m,
                                           Side side,
                                           element_t<M> const& g,
                                           std::size_t depth) {
  return detail::upward_close(m, side, {g}, static_cast<long>(depth));
}

// θ_[p,q,r](ξ, η) = (ξ r^{-1} q p^{-1}, p q^{-1} r η), defined when Pr ∈ ξ and
// r1 P ∈ η. Images longer than `depth` are dropped and flagged.
template <LcmMonoid M>
ActionResult<element_t<M>> act_on_filter(InverseSemigroup<M> const& isg,
                                         Triple<element_t<M>> const& s,
                                         FilterState<element_t<M>> const& x,
                                         std::size_t depth) {
  using E = element_t<M>;
  auto const& m = isg.monoid();
  ActionResult<E> res;
  if (s.is_zero()) {
    return res;
  }
  long const lp = static_cast<long>(m.length(s.p()));
  long const lq = static_cast<long>(m.length(s.q()));
  long const lr = static_cast<long>(m.length(s.r()));
  long const d = static_cast<long>(depth);
  if (static_cast<long>(m.length(s.r())) > x.left_exact
      || static_cast<long>(m.length(s.r1())) > x.right_exact) {
    res.truncated = true;
    return res;
  }
  if (!detail::contains_ideal(m, Side::left, x.left, s.r())
      || !detail::contains_ideal(m, Side::right, x.right, s.r1())) {
    return res;
  }
  FilterState<E> out;
  std::vector<E> left_images;
  for (auto const& g : x.left) {
    // P g r^{-1} = P w1 with w1 r = w2 g
    auto a = m.left_lcm(s.r(), g);
    if (!a) {
      continue;
    }
    E const wq = m.mul(a->w1, s.q());
    // P wq p^{-1} = P c with c p = c' wq
    auto b = m.left_lcm(s.p(), wq);
    if (!b) {
      continue;
    }
    E const c = m.canonical_left(b->w1);
    if (static_cast<long>(m.length(c)) > d) {
      res.truncated = true;
      continue;
    }
    left_images.push_back(c);
  }
  std::vector<E> right_images;
  for (auto const& g : x.right) {
    // q^{-1} r g P = w1 P with q w1 = r g w2
    auto a = m.right_lcm(s.q(), m.mul(s.r(), g));
    if (!a) {
      continue;
    }
    E const z = m.canonical_right(m.mul(s.p(), a->w1));
    if (static_cast<long>(m.length(z)) > d) {
      res.truncated = true;
      continue;
    }
    right_images.push_back(z);
  }
  out.left_exact = std::min(d, x.left_exact + lq - lp - lr);
  out.right_exact = std::min(d, x.right_exact + lp + lr - lq);
  out.left = detail::upward_close(m, Side::left, left_images, out.left_exact);
  out.right = detail::upward_close(m, Side::right, right_images, out.right_exact);
  res.state = std::move(out);
  return res;
}

// Members of length <= the given depths agree.
template <LcmMonoid M>
bool filter_states_agree(M const& m,
                         FilterState<element_t<M>> const& a,
                         FilterState<element_t<M>> const& b,
                         long left_depth,
                         long right_depth) {
  auto cut = [&](std::vector<element_t<M>> const& v, long depth) {
    std::vector<element_t<M>> out;
    for (auto const& x : v) {
      if (static_cast<long>(m.length(x)) <= depth) {
        out.push_back(x);
      }
    }
    return out;
  };
  return cut(a.left, left_depth) == cut(b.left, left_depth)
         && cut(a.right, right_depth) == cut(b.right, right_depth);
}

}  // namespace lcm
