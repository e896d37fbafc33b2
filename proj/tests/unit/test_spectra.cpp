#include <doctest.h>

#include "lcm/free_monoid.hpp"
#include "lcm/grid_monoid.hpp"
#include "lcm/self_similar.hpp"
#include "lcm/spectra.hpp"
#include "oracles.hpp"

using namespace lcm;

namespace {

Word w(char const* s) { return Word(s); }

std::size_t index_of(IdempotentSemilattice<FreeMonoid> const& es,
                     InverseSemigroup<FreeMonoid> const& s,
                     Triple<Word> const& t) {
  for (std::size_t i = 0; i < es.elements.size(); ++i) {
    if (s.eq(es.elements[i], t)) {
      return i;
    }
  }
  FAIL("element not in the semilattice");
  return 0;
}

}  // namespace

TEST_CASE("idempotent semilattice sizes") {
  InverseSemigroup<FreeMonoid> s{FreeMonoid{}};
  auto es1 = build_semilattice(s, 1);
  CHECK(es1.lattice.size() == 10);
  CHECK_FALSE(es1.lattice.validate());
  auto es0 = build_semilattice(s, 0);
  CHECK(es0.lattice.size() == 2);

  InverseSemigroup<GridMonoid> g{GridMonoid{}};
  auto eg = build_semilattice(g, 1);
  CHECK(eg.generators == 9);
  CHECK(eg.lattice.size() == 17);
  // no two nonzero idempotents meet in zero
  for (std::size_t a = 1; a < eg.lattice.size(); ++a) {
    for (std::size_t b = 1; b < eg.lattice.size(); ++b) {
      CHECK(eg.lattice.meet(a, b) != 0);
    }
  }
}

TEST_CASE("phi identifies E(S_P) with the ideal pairs") {
  FreeMonoid m;
  InverseSemigroup<FreeMonoid> s{m};
  auto [lq, rp] = phi_ideal_pairs(s, s.idempotent(w("0"), w("1")));
  CHECK(lq == w("1"));
  CHECK(rp == w("0"));
  auto [tl, tr] = phi_ideal_pairs(s, s.top());
  CHECK(tl.empty());
  CHECK(tr.empty());
  CHECK_THROWS(phi_ideal_pairs(s, s.generator(w("0"))));

  for (std::size_t depth : {1U, 2U}) {
    auto es = build_semilattice(s, depth);
    auto left = build_ideal_semilattice(m, Side::left, depth);
    auto right = build_ideal_semilattice(m, Side::right, depth);
    auto rep = check_phi(s, es, left, right);
    CHECK(rep.bijective);
    CHECK(rep.meet_preserving);
  }
  GridMonoid g;
  InverseSemigroup<GridMonoid> sg{g};
  for (std::size_t depth : {1U, 2U}) {
    auto rep = check_phi(sg, build_semilattice(sg, depth),
                         build_ideal_semilattice(g, Side::left, depth),
                         build_ideal_semilattice(g, Side::right, depth));
    CHECK(rep.bijective);
    CHECK(rep.meet_preserving);
  }

  // φ(e f) = φ(e) φ(f)
  auto e = s.idempotent(w("0"), w("1"));
  auto f = s.idempotent(w("01"), w("11"));
  auto [el, er] = phi_ideal_pairs(s, e);
  auto [fl, fr] = phi_ideal_pairs(s, f);
  auto [gl, gr] = phi_ideal_pairs(s, s.product(e, f));
  CHECK(gl == m.left_lcm(el, fl)->r);
  CHECK(gr == m.right_lcm(er, fr)->r);
}

TEST_CASE("filters and ultrafilters") {
  FreeMonoid m;
  auto right = build_ideal_semilattice(m, Side::right, 1);
  CHECK(right.lattice.size() == 4);
  auto fs = enumerate_filters(right.lattice);
  CHECK(fs.filters.size() == 3);
  CHECK(fs.ultrafilters.size() == 2);

  FiniteSemilattice two({"0", "1"}, {{0, 0}, {0, 1}}, 0, 1);
  auto f2 = enumerate_filters(two);
  CHECK(f2.filters.size() == 1);
  CHECK(f2.ultrafilters.size() == 1);

  // exhaustive subset enumeration agrees
  InverseSemigroup<FreeMonoid> s{m};
  for (auto const* lat : {&right.lattice}) {
    auto brute = oracle::all_filters(lat->table(), lat->zero());
    CHECK(brute.size() == enumerate_filters(*lat).filters.size());
    CHECK(oracle::maximal(brute).size() == enumerate_filters(*lat).ultrafilters.size());
  }
  auto es = build_semilattice(s, 1);
  auto brute = oracle::all_filters(es.lattice.table(), es.lattice.zero());
  auto fe = enumerate_filters(es.lattice);
  CHECK(brute.size() == fe.filters.size());
  CHECK(oracle::maximal(brute).size() == fe.ultrafilters.size());
  for (auto const& f : fe.filters) {
    auto mem = members(es.lattice, f);
    CHECK(std::find(brute.begin(), brute.end(), std::set<std::size_t>(mem.begin(), mem.end()))
          != brute.end());
  }
}

TEST_CASE("product semilattice") {
  FreeMonoid m;
  auto right = build_ideal_semilattice(m, Side::right, 1);
  auto left = build_ideal_semilattice(m, Side::left, 1);
  auto corr = check_product_correspondence(left.lattice, right.lattice);
  CHECK(corr.product_filters == 9);
  CHECK(corr.product_ultrafilters == 4);
  CHECK(corr.bijective);
  CHECK(corr.ultrafilters_preserved);

  auto prod = product_semilattice(left.lattice, right.lattice);
  CHECK_FALSE(prod.lattice.validate());
  auto brute = oracle::all_filters(prod.lattice.table(), prod.lattice.zero());
  CHECK(brute.size() == 9);

  FiniteSemilattice two({"0", "1"}, {{0, 0}, {0, 1}}, 0, 1);
  auto with_two = product_semilattice(right.lattice, two);
  CHECK(with_two.lattice.size() == right.lattice.size());
  CHECK(enumerate_filters(with_two.lattice).filters.size() == 3);
}

TEST_CASE("covers") {
  FreeMonoid m;
  InverseSemigroup<FreeMonoid> s{m};
  auto es = build_semilattice(s, 2);
  auto e0 = index_of(es, s, s.make(w("0"), w("0"), w("")));
  auto e1 = index_of(es, s, s.make(w("1"), w("1"), w("")));
  auto top = es.lattice.top();
  CHECK(is_cover(es.lattice, {e0, e1}, top));
  auto witness = cover_counterexample(es.lattice, {e0}, top);
  REQUIRE(witness);
  CHECK(es.lattice.meet(*witness, e0) == es.lattice.zero());
  CHECK(is_cover(es.lattice, {e1}, e1));
}

TEST_CASE("action on filters") {
  FreeMonoid m;
  InverseSemigroup<FreeMonoid> s{m};
  std::size_t const d = 3;
  auto v0 = s.generator(w("0"));
  FilterState<Word> x;
  x.left = principal_filter(m, Side::left, w("0"), d);
  x.right = principal_filter(m, Side::right, w("1"), d);
  x.left_exact = x.right_exact = d;
  auto res = act_on_filter(s, v0, x, d);
  REQUIRE(res.state);
  CHECK(res.state->right == std::vector<Word>{w(""), w("0"), w("01")});
  CHECK(res.state->left == std::vector<Word>{w("")});

  // top idempotent acts trivially
  auto same = act_on_filter(s, s.top(), x, d);
  REQUIRE(same.state);
  CHECK(same.state->left == x.left);
  CHECK(same.state->right == x.right);

  // v_0 needs P0 in the left filter
  FilterState<Word> y = x;
  y.left = {w("")};
  CHECK_FALSE(act_on_filter(s, v0, y, d).state);
}
