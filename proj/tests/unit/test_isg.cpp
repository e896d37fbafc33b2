#include <doctest.h>

#include "lcm/constructible.hpp"
#include "lcm/free_monoid.hpp"
#include "lcm/grid_monoid.hpp"
#include "lcm/group_label.hpp"
#include "lcm/isg.hpp"
#include "lcm/self_similar.hpp"
#include "oracles.hpp"

using namespace lcm;

namespace {

Word w(char const* s) { return Word(s); }
ZsElement<OdometerElement> od(char const* s, std::int64_t m) {
  return {Word(s), {m}};
}

}  // namespace

TEST_CASE("constructible set operations") {
  FreeMonoid m;
  auto y = cs_make(m, w("0"), w("1"));
  auto z = cs_make(m, w("01"), w("11"));
  CHECK(cs_intersect(m, y, z) == z);
  CHECK(cs_intersect(m, cs_make(m, w("0"), w("")), cs_make(m, w("1"), w(""))).is_empty());
  CHECK(cs_intersect(m, y, cs_full(m)) == y);

  CHECK(cs_translate(m, Translate::push, y, w("1")) == cs_make(m, w("10"), w("")));
  CHECK(cs_translate(m, Translate::push, cs_make(m, w(""), w("0")), w("1")).is_empty());
  CHECK(cs_translate(m, Translate::push, cs_full(m), w("01")) == cs_make(m, w("01"), w("")));

  CHECK(cs_member(m, {w("110"), w("0")}, y));
  CHECK_FALSE(cs_member(m, {w("0"), w("0")}, cs_make(m, w("1"), w(""))));
  for (auto const& a : m.enumerate_up_to(3)) {
    for (std::size_t k = 0; k <= a.size(); ++k) {
      CHECK(cs_member(m, {a, a.suffix(k)}, cs_full(m)));
    }
  }
}

TEST_CASE("constructible calculus agrees with explicit sets") {
  FreeMonoid m;
  std::size_t const n = 4;
  auto const elems = m.enumerate_up_to(2);
  auto extensional = [&](ConstructibleSet<Word> const& y) {
    std::set<oracle::Pair> out;
    if (y.is_empty()) {
      return out;
    }
    return oracle::constructible(y.p().letters, y.q().letters, n);
  };
  for (auto const& p : elems) {
    for (auto const& q : elems) {
      auto y = cs_make(m, p, q);
      auto ey = extensional(y);
      for (auto const& [a, x] : oracle::delta(n)) {
        CHECK(cs_member(m, {Word(a), Word(x)}, y) == ey.contains({a, x}));
      }
      for (auto const& r : elems) {
        // push: (a, r x) for (a, x) ∈ Y
        std::set<oracle::Pair> push;
        std::set<oracle::Pair> pull;
        for (auto const& [a, x] : oracle::delta(n)) {
          if (ey.contains({a, x}) && oracle::is_suffix(r.letters + x, a)) {
            push.insert({a, r.letters + x});
          }
          if (ey.contains({a, r.letters + x})) {
            pull.insert({a, x});
          }
        }
        CHECK(extensional(cs_translate(m, Translate::push, y, r)) == push);
        CHECK(extensional(cs_translate(m, Translate::pull, y, r)) == pull);
        for (auto const& s : elems) {
          auto z = cs_make(m, r, s);
          auto ez = extensional(z);
          std::set<oracle::Pair> meet;
          std::set_intersection(ey.begin(), ey.end(), ez.begin(), ez.end(),
                                std::inserter(meet, meet.begin()));
          CHECK(extensional(cs_intersect(m, y, z)) == meet);
        }
      }
    }
  }
}

TEST_CASE("make_triple validation") {
  InverseSemigroup<FreeMonoid> s{FreeMonoid{}};
  auto t = s.make(w("0"), w("00"), w("00"));
  CHECK(t.p1() == w("0"));
  CHECK(t.r1() == w(""));
  for (auto const& p : FreeMonoid{}.enumerate_up_to(2)) {
    CHECK_NOTHROW(s.generator(p));
  }
  CHECK_THROWS_AS(s.make(w("0"), w("1"), w("1")), InvalidTriple);
}

TEST_CASE("free S_P product, star, order") {
  InverseSemigroup<FreeMonoid> s{FreeMonoid{}};
  auto t = [&](char const* a, char const* b, char const* c) {
    return s.make(w(a), w(b), w(c));
  };
  CHECK(s.product(t("", "0", "0"), t("0", "0", "0")) == t("0", "00", "00"));
  CHECK(s.product(t("0", "0", "0"), t("1", "1", "1")) == t("01", "01", "01"));
  CHECK(s.product(t("", "0", "0"), t("", "1", "1")).is_zero());

  CHECK(s.star(t("0", "00", "00")) == t("", "00", "0"));
  CHECK(s.star(t("01", "01", "01")) == t("", "01", ""));
  CHECK(s.star(Triple<Word>::zero()).is_zero());

  CHECK(s.leq(t("01", "1101", "11"), t("0", "10", "1")));
  CHECK_FALSE(s.leq(t("0", "10", "1"), t("01", "1101", "11")));
  CHECK(s.idempotent_leq(w("01"), w("11"), w("0"), w("1")));
  auto x = t("0", "00", "00");
  CHECK(s.leq(x, x));
}

TEST_CASE("free S_P product matches composition of partial bijections") {
  InverseSemigroup<FreeMonoid> s{FreeMonoid{}};
  auto const triples = s.enumerate(2);
  CHECK(triples.size() == 45);
  std::size_t const n = 5;
  for (auto const& a : triples) {
    auto fa = oracle::triple_map(a.p().letters, a.q().letters, a.r().letters, n);
    for (auto const& b : triples) {
      auto fb = oracle::triple_map(b.p().letters, b.q().letters, b.r().letters, n);
      auto prod = s.product(a, b);
      auto expected = oracle::compose(fa, fb);
      if (prod.is_zero()) {
        CHECK(expected.empty());
      } else {
        CHECK(oracle::triple_map(prod.p().letters, prod.q().letters,
                                 prod.r().letters, n)
              == expected);
      }
    }
  }
}

TEST_CASE("odometer triple equality up to units") {
  InverseSemigroup<OdometerMonoid> s{OdometerMonoid{OdometerBackend{}}};
  auto a = s.make(od("0", 1), od("0", 1), od("0", 1));
  auto b = s.make(od("0", 0), od("0", 0), od("0", 1));
  CHECK(s.eq(a, b));
  CHECK(s.eq(a, a));
  CHECK_FALSE(s.eq(a, s.make(od("0", 0), od("0", 0), od("0", 0))));
}

TEST_CASE("group label") {
  FreeMonoid m;
  InverseSemigroup<FreeMonoid> s{m};
  CHECK(to_string(group_label(m, s.make(w("0"), w("00"), w("00")))) == "0");
  CHECK(group_label(m, s.idempotent(w("01"), w("1"))).is_identity());
  CHECK(to_string(group_label(m, s.generator(w("011")))) == "011");
  CHECK(to_string(group_label(m, s.make(w(""), w("0"), w(""))))
        == "0^-1");

  GridMonoid g;
  InverseSemigroup<GridMonoid> sg{g};
  auto e = sg.idempotent(GridVector{{1, 0}}, GridVector{{0, 2}});
  CHECK(group_label(g, e).is_identity());

  OdometerMonoid o{OdometerBackend{}};
  InverseSemigroup<OdometerMonoid> so{o};
  CHECK_THROWS_AS(group_label(o, so.top()), UnsupportedInstance);
}
