#pragma once

// Monomials s_α u_g s_β* of the self-similar (Cuntz–Pimsner type) algebra,
// with the relations
//   s_x* s_y = δ_xy,  u_g u_h = u_gh,  u_g s_x = s_{g·x} u_{g|x},
// and the representation of S_{X*⋈G} sending v_(α,g) to s_α u_g.

#include <optional>
#include <string>
#include <utility>

#include "lcm/isg.hpp"
#include "lcm/self_similar.hpp"

namespace lcm {

template <class G>
class Monomial {
 public:
  Monomial() = default;  // zero

  static Monomial zero() { return Monomial(); }
  static Monomial make(Word alpha, G g, Word beta) {
    Monomial m;
    m._body = Body{std::move(alpha), std::move(g), std::move(beta)};
    return m;
  }

  bool is_zero() const noexcept { return !_body.has_value(); }
  Word const& alpha() const { return _body->alpha; }
  G const& g() const { return _body->g; }
  Word const& beta() const { return _body->beta; }

  friend bool operator==(Monomial const& a, Monomial const& b) {
    if (a.is_zero() || b.is_zero()) {
      return a.is_zero() == b.is_zero();
    }
    return a.alpha() == b.alpha() && a.g() == b.g() && a.beta() == b.beta();
  }

 private:
  struct Body {
    Word alpha;
    G g;
    Word beta;
  };
  std::optional<Body> _body;
};

template <SelfSimilarBackend B>
using MonomialOf = Monomial<typename B::group_type>;

template <SelfSimilarBackend B>
MonomialOf<B> mono_identity(B const& b) {
  return MonomialOf<B>::make(Word(), b.group_identity(), Word());
}

// (α,g,β)(γ,h,δ):
//   γ = βω:  (α (g·ω), g|_ω h, δ)
//   β = γμ:  (α, g (h⁻¹|_μ)⁻¹, δ (h⁻¹·μ))
//   else zero
template <SelfSimilarBackend B>
MonomialOf<B> mono_mul(B const& b, MonomialOf<B> const& x, MonomialOf<B> const& y) {
  if (x.is_zero() || y.is_zero()) {
    return MonomialOf<B>::zero();
  }
  if (y.alpha().starts_with(x.beta())) {
    Word const omega = y.alpha().drop_front(x.beta().size());
    auto [moved, restricted] = b.act_restrict(x.g(), omega);
    return MonomialOf<B>::make(x.alpha() + moved, b.group_mul(restricted, y.g()), y.beta());
  }
  if (x.beta().starts_with(y.alpha())) {
    Word const mu = x.beta().drop_front(y.alpha().size());
    auto [moved, restricted] = b.act_restrict(b.group_inv(y.g()), mu);
    return MonomialOf<B>::make(x.alpha(), b.group_mul(x.g(), b.group_inv(restricted)),
                               y.beta() + moved);
  }
  return MonomialOf<B>::zero();
}

template <SelfSimilarBackend B>
MonomialOf<B> mono_star(B const& b, MonomialOf<B> const& x) {
  if (x.is_zero()) {
    return x;
  }
  return MonomialOf<B>::make(x.beta(), b.group_inv(x.g()), x.alpha());
}

template <SelfSimilarBackend B>
std::string to_string(B const& b, MonomialOf<B> const& x) {
  if (x.is_zero()) {
    return "0";
  }
  return "(" + to_string(x.alpha()) + "," + b.group_to_string(x.g()) + ","
         + to_string(x.beta()) + ")";
}

// π[(α,g),(β,h),(γ,k)] = s_α u_g u_h* s_β* s_γ u_k
template <SelfSimilarBackend B>
MonomialOf<B> pi_represent(InverseSemigroup<ZappaSzep<B>> const& isg,
                           Triple<ZsElement<typename B::group_type>> const& s) {
  if (s.is_zero()) {
    return MonomialOf<B>::zero();
  }
  B const& b = isg.monoid().backend();
  auto const left = MonomialOf<B>::make(s.p().word, s.p().g, Word());
  auto const middle = MonomialOf<B>::make(Word(), b.group_inv(s.q().g), s.q().word);
  auto const right = MonomialOf<B>::make(s.r().word, s.r().g, Word());
  return mono_mul(b, mono_mul(b, left, middle), right);
}

// f_β = [1, (β,e), (β,e)]
template <SelfSimilarBackend B>
Triple<ZsElement<typename B::group_type>> f_beta(InverseSemigroup<ZappaSzep<B>> const& isg,
                                                 Word const& beta) {
  auto const& m = isg.monoid();
  auto const x = ZsElement<typename B::group_type>{beta, m.backend().group_identity()};
  return isg.make(m.identity(), x, x);
}

}  // namespace lcm
