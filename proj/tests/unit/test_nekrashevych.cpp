#include <doctest.h>

#include "lcm/nekrashevych.hpp"
#include "rewriting.hpp"

using namespace lcm;

namespace {

using G = OdometerElement;
using M = Monomial<G>;

M mono(char const* a, std::int64_t g, char const* b) {
  return M::make(Word(a), G{g}, Word(b));
}

M by_rewriting(OdometerBackend const& b, M const& x, M const& y) {
  if (x.is_zero() || y.is_zero()) {
    return M::zero();
  }
  oracle::Tokens<OdometerBackend> word;
  oracle::append_monomial<OdometerBackend>(word, x.alpha().letters, x.g(), x.beta().letters);
  oracle::append_monomial<OdometerBackend>(word, y.alpha().letters, y.g(), y.beta().letters);
  G g;
  auto n = oracle::rewrite(b, word, g);
  if (n.zero) {
    return M::zero();
  }
  return M::make(Word(n.alpha), g, Word(n.beta));
}

std::vector<M> monomials(OdometerBackend const& b, std::size_t len) {
  std::vector<M> out{M::zero()};
  for (auto const& a : words_up_to(2, len)) {
    for (auto const& g : b.enumerate_group()) {
      for (auto const& c : words_up_to(2, len)) {
        out.push_back(M::make(a, g, c));
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("monomial product examples") {
  OdometerBackend b(2);
  CHECK(mono_mul(b, mono("", 1, "1"), mono("1", 0, "")) == mono("", 1, ""));
  CHECK(mono_mul(b, mono("", 0, "0"), mono("1", 0, "")).is_zero());
  auto m = mono("01", -1, "1");
  CHECK(mono_mul(b, mono_identity(b), m) == m);
  CHECK(mono_mul(b, m, mono_identity(b)) == m);
  CHECK(mono_star(b, mono("0", 1, "")) == mono("", -1, "0"));
  CHECK(mono_star(b, mono_star(b, m)) == m);
  CHECK(mono_star(b, M::zero()).is_zero());
}

TEST_CASE("monomial product agrees with rewriting") {
  OdometerBackend b(2);
  auto ms = monomials(b, 2);
  for (auto const& x : ms) {
    for (auto const& y : ms) {
      auto xy = mono_mul(b, x, y);
      REQUIRE(xy == by_rewriting(b, x, y));
      CHECK(mono_star(b, xy) == mono_mul(b, mono_star(b, y), mono_star(b, x)));
    }
  }
}

TEST_CASE("monomial product is associative") {
  OdometerBackend b(2);
  auto ms = monomials(b, 1);
  for (auto const& x : ms) {
    for (auto const& y : ms) {
      auto xy = mono_mul(b, x, y);
      for (auto const& z : ms) {
        CHECK(mono_mul(b, xy, z) == mono_mul(b, x, mono_mul(b, y, z)));
      }
    }
  }
}

TEST_CASE("representation of the odometer S_P") {
  OdometerBackend b(2);
  OdometerMonoid m(b);
  InverseSemigroup<OdometerMonoid> s(m);
  using E = ZsElement<G>;
  auto v0 = s.generator(E{Word("0"), G{0}});
  CHECK(pi_represent(s, v0) == mono("0", 0, ""));
  CHECK(pi_represent(s, Triple<E>::zero()).is_zero());
  for (auto const& beta : words_up_to(2, 3)) {
    CHECK(pi_represent(s, f_beta(s, beta)) == mono_identity(b));
  }

  auto ts = s.enumerate(1);
  for (auto const& x : ts) {
    auto px = pi_represent(s, x);
    CHECK(pi_represent(s, s.star(x)) == mono_star(b, px));
    if (!x.is_zero() && s.is_idempotent(x)) {
      CHECK(px == M::make(x.p().word, G{0}, x.p().word));
    }
    for (auto const& y : ts) {
      CHECK(pi_represent(s, s.product(x, y)) == mono_mul(b, px, pi_represent(s, y)));
      if (s.eq(x, y)) {
        CHECK(px == pi_represent(s, y));
      }
    }
  }
}
