#pragma once

// Finite shadows of the operators on ℓ²(Δ): the truncation Δ_n of pairs
// (a, x) with length(a) <= n, the partial isometries J_p, the projections e_Y,
// and the normal-form reduction of words in J_p, J_p^*.

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lcm/constructible.hpp"
#include "lcm/core.hpp"
#include "lcm/isg.hpp"
#include "lcm/sparse.hpp"

namespace lcm {

template <LcmMonoid M>
class DeltaTruncation {
 public:
  using element_type = element_t<M>;
  using pair_type = DeltaPair<element_type>;

  DeltaTruncation(M monoid, std::size_t n) : _m(std::move(monoid)), _n(n) {
    auto const elems = _m.enumerate_up_to(n);
    for (auto const& a : elems) {
      for (auto const& x : elems) {
        if (_m.length(x) <= _m.length(a) && _m.divide(Side::right, x, a)) {
          _index.emplace(pair_type{a, x}, _basis.size());
          _basis.push_back(pair_type{a, x});
        }
      }
    }
  }

  M const& monoid() const noexcept { return _m; }
  std::size_t depth() const noexcept { return _n; }
  std::size_t dim() const noexcept { return _basis.size(); }
  std::vector<pair_type> const& basis() const noexcept { return _basis; }

  std::optional<std::size_t> index_of(element_type const& a,
                                      element_type const& x) const {
    auto it = _index.find(pair_type{a, x});
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

 private:
  struct PairHash {
    std::size_t operator()(pair_type const& d) const noexcept {
      std::size_t seed = std::hash<element_type>{}(d.a);
      hash_combine(seed, std::hash<element_type>{}(d.x));
      return seed;
    }
  };

  M _m;
  std::size_t _n;
  std::vector<pair_type> _basis;
  std::unordered_map<pair_type, std::size_t, PairHash> _index;
};

// J_p δ_x^a = δ_{px}^a when px ∈ I_a, else 0.  J_p^* δ_{px}^a = δ_x^a.
// A column whose image is a genuine basis vector missing from the window is
// flagged as boundary.
template <LcmMonoid M>
SparseOp j_matrix(DeltaTruncation<M> const& t,
                  element_t<M> const& p,
                  bool adjoint = false) {
  auto const& m = t.monoid();
  std::vector<SparseOp::Entry> entries;
  std::vector<std::size_t> boundary;
  auto const& basis = t.basis();
  for (std::size_t col = 0; col < basis.size(); ++col) {
    auto const& [a, x] = basis[col];
    std::optional<element_t<M>> image;
    if (!adjoint) {
      auto px = m.mul(p, x);
      if (m.divide(Side::right, px, a)) {
        image = std::move(px);
      }
    } else {
      image = m.divide(Side::left, p, x);
    }
    if (!image) {
      continue;
    }
    if (auto row = t.index_of(a, *image)) {
      entries.push_back({*row, col, 1});
    } else {
      boundary.push_back(col);
    }
  }
  auto op = SparseOp::from_entries(t.dim(), std::move(entries));
  for (auto c : boundary) {
    op.mark_boundary(c);
  }
  return op;
}

template <LcmMonoid M>
SparseOp e_matrix(DeltaTruncation<M> const& t,
                  ConstructibleSet<element_t<M>> const& y) {
  std::vector<SparseOp::Entry> entries;
  auto const& basis = t.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (cs_member(t.monoid(), basis[i], y)) {
      entries.push_back({i, i, 1});
    }
  }
  return SparseOp::from_entries(t.dim(), std::move(entries));
}

// J_p J_q^* J_r; the zero triple gives the zero matrix
template <LcmMonoid M>
SparseOp represent_triple(DeltaTruncation<M> const& t,
                          Triple<element_t<M>> const& s) {
  if (s.is_zero()) {
    return SparseOp(t.dim());
  }
  return j_matrix(t, s.p()) * j_matrix(t, s.q(), true) * j_matrix(t, s.r());
}

// E_Δ(J_p J_q^* J_r) is the operator itself when the triple is idempotent
// (q = rp up to units) and zero otherwise.
template <LcmMonoid M>
SparseOp expectation(DeltaTruncation<M> const& t,
                     InverseSemigroup<M> const& isg,
                     Triple<element_t<M>> const& s) {
  SparseOp rep = represent_triple(t, s);
  if (s.is_zero() || isg.is_idempotent(s)) {
    return rep;
  }
  SparseOp zero(t.dim());
  for (std::size_t c = 0; c < t.dim(); ++c) {
    if (rep.is_boundary(c)) {
      zero.mark_boundary(c);
    }
  }
  return zero;
}

// J(p) or J(p)^*
template <class E>
struct Token {
  E p;
  bool adjoint = false;
};

template <LcmMonoid M>
SparseOp word_matrix(DeltaTruncation<M> const& t,
                     std::vector<Token<element_t<M>>> const& word) {
  SparseOp acc = SparseOp::identity(t.dim());
  for (auto const& tok : word) {
    acc = acc * j_matrix(t, tok.p, tok.adjoint);
  }
  return acc;
}

// Normal form of a word in the J_p, J_p^*: adjacent letters of the same kind
// merge, each J_a^* J_b J_c^* collapses to J_{a1} J_{b2 b b1}^* J_{c1} (with
// a a1 = b b1 and b2 b = c1 c the two LCMs), and the surviving J_p J_q^* J_r
// is rewritten as J_{p a1} J_k^* J_{q1 r} with p1 p = q1 q = a and
// a a1 = q1 r r1 = k. Any missing LCM makes the word zero.
template <LcmMonoid M>
Triple<element_t<M>> reduce_word(InverseSemigroup<M> const& isg,
                                 std::vector<Token<element_t<M>>> const& word) {
  using E = element_t<M>;
  auto const& m = isg.monoid();
  std::vector<Token<E>> w;
  for (auto const& tok : word) {
    if (!w.empty() && w.back().adjoint == tok.adjoint) {
      // J_a J_b = J_{ab};  J_a^* J_b^* = J_{ba}^*
      w.back().p = tok.adjoint ? m.mul(tok.p, w.back().p) : m.mul(w.back().p, tok.p);
    } else {
      w.push_back(tok);
    }
  }
  if (w.empty() || w.front().adjoint) {
    w.insert(w.begin(), Token<E>{m.identity(), false});
  }
  if (w.back().adjoint) {
    w.push_back(Token<E>{m.identity(), false});
  }
  // w = J_{p0} J_{q1}^* J_{p1} ... J_{qn}^* J_{pn}
  while (w.size() > 3) {
    std::size_t const i = w.size() - 5;  // J_a^* at i+1, J_b at i+2, J_c^* at i+3
    E const& a = w[i + 1].p;
    E const& b = w[i + 2].p;
    E const& c = w[i + 3].p;
    auto right = m.right_lcm(a, b);
    if (!right) {
      return Triple<E>::zero();
    }
    auto left = m.left_lcm(b, c);
    if (!left) {
      return Triple<E>::zero();
    }
    E const middle = m.mul(m.mul(left->w1, b), right->w2);
    E const head = m.mul(w[i].p, right->w1);
    E const tail = m.mul(left->w2, w[i + 4].p);
    w.resize(i);
    w.push_back(Token<E>{head, false});
    w.push_back(Token<E>{middle, true});
    w.push_back(Token<E>{tail, false});
  }
  E const p = w[0].p;
  E const q = w.size() == 3 ? w[1].p : m.identity();
  E const r = w.size() == 3 ? w[2].p : m.identity();
  auto left = m.left_lcm(p, q);
  if (!left) {
    return Triple<E>::zero();
  }
  E const q1r = m.mul(left->w2, r);
  auto right = m.right_lcm(left->r, q1r);
  if (!right) {
    return Triple<E>::zero();
  }
  return isg.make(m.mul(p, right->w1), right->r, q1r);
}

}  // namespace lcm
