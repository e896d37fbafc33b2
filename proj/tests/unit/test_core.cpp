#include <doctest.h>

#include "lcm/free_monoid.hpp"
#include "lcm/grid_monoid.hpp"
#include "lcm/self_similar.hpp"

using namespace lcm;

namespace {

Word w(char const* s) { return Word(s); }
GridVector gv(std::uint32_t a, std::uint32_t b) { return GridVector{{a, b}}; }
ZsElement<OdometerElement> od(char const* s, std::int64_t m) {
  return {Word(s), {m}};
}

}  // namespace

TEST_CASE("free monoid lcm and division") {
  FreeMonoid m;
  auto r = m.right_lcm(w("0"), w("01"));
  REQUIRE(r);
  CHECK(r->r == w("01"));
  CHECK(r->w1 == w("1"));
  CHECK(r->w2 == w(""));
  CHECK_FALSE(m.right_lcm(w("0"), w("1")));

  auto l = m.left_lcm(w("0"), w("10"));
  REQUIRE(l);
  CHECK(l->r == w("10"));
  CHECK(l->w1 == w("1"));
  CHECK(l->w2 == w(""));
  CHECK_FALSE(m.left_lcm(w("0"), w("1")));

  auto same = m.left_lcm(w("01"), w("01"));
  REQUIRE(same);
  CHECK(same->w1.empty());
  CHECK(same->w2.empty());

  auto id = m.right_lcm(m.identity(), w("011"));
  REQUIRE(id);
  CHECK(id->r == w("011"));
  CHECK(id->w1 == w("011"));
  CHECK(id->w2.empty());

  CHECK(m.divide(Side::left, w("0"), w("01")) == w("1"));
  CHECK(m.divide(Side::right, w("0"), w("10")) == w("1"));
  CHECK_FALSE(m.divide(Side::left, w("0"), w("11")));

  CHECK(unit_solve(m, Side::right, w("01"), w("01")) == w(""));
  CHECK_FALSE(unit_solve(m, Side::right, w("01"), w("0")));
}

TEST_CASE("free monoid enumeration") {
  FreeMonoid m;
  auto e1 = m.enumerate_up_to(1);
  REQUIRE(e1.size() == 3);
  CHECK(e1[0] == w(""));
  CHECK(e1[1] == w("0"));
  CHECK(e1[2] == w("1"));
  CHECK(m.enumerate_up_to(2).size() == 7);
  FreeMonoid tiny(2, 10);
  CHECK_THROWS_AS(tiny.enumerate_up_to(3), ResourceLimit);
}

TEST_CASE("grid monoid") {
  GridMonoid m;
  auto r = m.right_lcm(gv(1, 0), gv(0, 2));
  REQUIRE(r);
  CHECK(r->r == gv(1, 2));
  CHECK(r->w1 == gv(0, 2));
  CHECK(r->w2 == gv(1, 0));
  auto e = m.enumerate_up_to(1);
  REQUIRE(e.size() == 3);
  CHECK(e[0] == gv(0, 0));
  CHECK(e[1] == gv(1, 0));
  CHECK(e[2] == gv(0, 1));
  CHECK(m.parse("(1,2)") == gv(1, 2));
  CHECK(m.to_string(gv(1, 0)) == "(1,0)");
}

TEST_CASE("opposite monoid") {
  FreeMonoid m;
  auto op = opposite(m);
  CHECK(op.mul(w("0"), w("1")) == w("10"));
  auto back = opposite(op);
  for (auto const& a : m.enumerate_up_to(2)) {
    for (auto const& b : m.enumerate_up_to(2)) {
      CHECK(back.mul(a, b) == m.mul(a, b));
      CHECK(op.right_lcm(a, b) == m.left_lcm(a, b));
      CHECK(op.left_lcm(a, b) == m.right_lcm(a, b));
    }
  }
  GridMonoid g;
  auto gop = opposite(g);
  for (auto const& a : g.enumerate_up_to(2)) {
    for (auto const& b : g.enumerate_up_to(2)) {
      CHECK(gop.mul(a, b) == g.mul(a, b));
      CHECK(gop.right_lcm(a, b) == g.right_lcm(a, b));
    }
  }
}

TEST_CASE("odometer action") {
  OdometerBackend b;
  auto [w1, g1] = b.act_restrict({1}, w("1"));
  CHECK(w1 == w("0"));
  CHECK(g1.exponent == 1);
  auto [w2, g2] = b.act_restrict({2}, w("0"));
  CHECK(w2 == w("0"));
  CHECK(g2.exponent == 1);
  auto [w3, g3] = b.act_restrict({0}, w("0110"));
  CHECK(w3 == w("0110"));
  CHECK(g3.exponent == 0);

  CHECK(b.transport(w("0"), w("1"), {0})->exponent == 1);
  CHECK(b.transport(w("0"), w("0"), {1})->exponent == 2);
  CHECK(b.transport(w("011"), w("011"), {0})->exponent == 0);
  // val(δ) < val(α)
  auto j = b.transport(w("1"), w("0"), {0});
  REQUIRE(j);
  auto [img, res] = b.act_restrict(*j, w("1"));
  CHECK(img == w("0"));
  CHECK(res.exponent == 0);
}

TEST_CASE("odometer Zappa-Szep monoid") {
  OdometerMonoid m{OdometerBackend{}};
  CHECK(m.mul(od("0", 1), od("1", 0)) == od("00", 1));
  CHECK(m.mul(od("", 1), od("0", 0)) == od("1", 0));
  CHECK(m.mul(m.identity(), od("01", 3)) == od("01", 3));

  CHECK(unit_solve(m, Side::right, od("", 2), od("", 1)) == od("", 1));

  auto r = m.right_lcm(od("0", 0), od("01", 1));
  REQUIRE(r);
  CHECK(r->r == od("01", 1));
  CHECK(r->w1 == od("1", 1));
  CHECK(r->w2 == m.identity());
  CHECK_FALSE(m.right_lcm(od("0", 0), od("1", 0)));
  CHECK(m.right_lcm(m.identity(), od("10", 2))->r == od("10", 2));

  auto l = m.left_lcm(od("0", 0), od("11", 1));
  REQUIRE(l);
  CHECK(l->r == od("11", 1));
  CHECK(l->w1 == od("1", 3));
  CHECK(l->w2 == m.identity());
  CHECK(m.mul(od("1", 3), od("0", 0)) == od("11", 1));

  auto same = m.left_lcm(od("10", 2), od("10", 2));
  REQUIRE(same);
  CHECK(same->w1 == m.identity());
  CHECK(same->w2 == m.identity());

  auto unit = m.left_lcm(od("", 3), od("01", -1));
  REQUIRE(unit);
  CHECK(unit->r == od("01", -1));

  CHECK(m.parse("(01,2)") == od("01", 2));
  CHECK(m.parse("(,1)") == od("", 1));
  CHECK(m.to_string(od("01", -2)) == "(01,-2)");
}
