#include <doctest.h>

#include <random>

#include "lcm/free_monoid.hpp"
#include "lcm/grid_monoid.hpp"
#include "lcm/operator_model.hpp"
#include "lcm/self_similar.hpp"

using namespace lcm;

namespace {

Word w(char const* s) { return Word(s); }
using Tok = Token<Word>;

}  // namespace

TEST_CASE("delta truncation") {
  DeltaTruncation<FreeMonoid> t1(FreeMonoid{}, 1);
  REQUIRE(t1.dim() == 5);
  auto const& b = t1.basis();
  CHECK((b[0].a == w("") && b[0].x == w("")));
  CHECK((b[1].a == w("0") && b[1].x == w("")));
  CHECK((b[2].a == w("0") && b[2].x == w("0")));
  CHECK((b[3].a == w("1") && b[3].x == w("")));
  CHECK((b[4].a == w("1") && b[4].x == w("1")));
  CHECK(DeltaTruncation<FreeMonoid>(FreeMonoid{}, 0).dim() == 1);
  CHECK(DeltaTruncation<FreeMonoid>(FreeMonoid{}, 4).dim() == 129);
  CHECK(DeltaTruncation<GridMonoid>(GridMonoid{}, 1).dim() == 5);
}

TEST_CASE("J matrices") {
  DeltaTruncation<FreeMonoid> t1(FreeMonoid{}, 1);
  auto j0 = j_matrix(t1, w("0"));
  REQUIRE(j0.nnz() == 1);
  CHECK(j0.at(2, 1) == 1);
  CHECK(j_matrix(t1, w("")) == SparseOp::identity(5));

  DeltaTruncation<FreeMonoid> t(FreeMonoid{}, 4);
  auto const elems = FreeMonoid{}.enumerate_up_to(2);
  for (auto const& p : elems) {
    auto jp = j_matrix(t, p);
    auto js = j_matrix(t, p, true);
    CHECK(jp * js * jp == jp);
    CHECK(js == jp.transpose());
    for (auto const& q : elems) {
      CHECK(jp * j_matrix(t, q) == j_matrix(t, p + q));
    }
  }
}

TEST_CASE("projections and the relation catalog") {
  FreeMonoid m;
  DeltaTruncation<FreeMonoid> t1(m, 1);
  auto e0 = e_matrix(t1, cs_make(m, w("0"), w("")));
  CHECK(e0.nnz() == 1);
  CHECK(e0.at(2, 2) == 1);
  CHECK(e_matrix(t1, cs_full(m)) == SparseOp::identity(5));
  CHECK(e_matrix(t1, ConstructibleSet<Word>::empty()).nnz() == 0);

  DeltaTruncation<FreeMonoid> t(m, 3);
  auto const elems = m.enumerate_up_to(2);
  for (auto const& p : elems) {
    for (auto const& q : elems) {
      auto y = cs_make(m, p, q);
      auto ey = e_matrix(t, y);
      for (auto const& r : elems) {
        auto jr = j_matrix(t, r);
        auto jrs = j_matrix(t, r, true);
        CHECK(jr * ey * jrs == e_matrix(t, cs_translate(m, Translate::push, y, r)));
        CHECK(jrs * ey * jr == e_matrix(t, cs_translate(m, Translate::pull, y, r)));
        for (auto const& s : elems) {
          auto z = cs_make(m, r, s);
          CHECK(ey * e_matrix(t, z) == e_matrix(t, cs_intersect(m, y, z)));
        }
      }
    }
  }
}

TEST_CASE("represent and expectation") {
  FreeMonoid m;
  InverseSemigroup<FreeMonoid> s{m};
  DeltaTruncation<FreeMonoid> t2(m, 2);
  auto x = s.make(w("0"), w("00"), w("00"));
  CHECK(represent_triple(t2, x)
        == j_matrix(t2, w("0")) * j_matrix(t2, w("00"), true) * j_matrix(t2, w("00")));

  DeltaTruncation<FreeMonoid> t3(m, 3);
  auto a = s.make(w(""), w("0"), w("0"));
  auto b = s.generator(w("0"));
  CHECK(represent_triple(t3, s.product(a, b))
        == represent_triple(t3, a) * represent_triple(t3, b));
  CHECK(represent_triple(t3, s.star(x)) == represent_triple(t3, x).transpose());

  auto e = s.make(w("0"), w("00"), w("0"));
  CHECK(expectation(t2, s, e) == represent_triple(t2, e));
  CHECK(expectation(t2, s, b).nnz() == 0);
  CHECK(represent_triple(t2, b).diagonal().nnz() == 0);
  CHECK(expectation(t2, s, s.top()) == SparseOp::identity(t2.dim()));
}

TEST_CASE("reduce_word examples") {
  FreeMonoid m;
  InverseSemigroup<FreeMonoid> s{m};
  CHECK(reduce_word(s, {Tok{w("0"), true}, Tok{w("0")}, Tok{w("1"), true}}).is_zero());
  CHECK(reduce_word(s, {Tok{w("0"), true}, Tok{w("0")}}) == s.make(w(""), w("0"), w("0")));
  CHECK(reduce_word(s, {Tok{w("01")}}) == s.generator(w("01")));
  CHECK(reduce_word(s, {}) == s.top());
}

TEST_CASE("reduce_word agrees with the matrix product") {
  FreeMonoid m;
  InverseSemigroup<FreeMonoid> s{m};
  DeltaTruncation<FreeMonoid> t(m, 4);
  auto const letters = m.enumerate_up_to(2);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Tok> word;
    auto len = std::uniform_int_distribution<int>(0, 8)(rng);
    for (int i = 0; i < len; ++i) {
      word.push_back(Tok{letters[rng() % letters.size()], (rng() & 1U) != 0});
    }
    auto nf = reduce_word(s, word);
    CHECK(represent_triple(t, nf) == word_matrix(t, word));
    // the same element as the S_P product of the letters
    auto prod = s.top();
    for (auto const& tok : word) {
      auto g = s.generator(tok.p);
      prod = s.product(prod, tok.adjoint ? s.star(g) : g);
    }
    CHECK(s.eq(prod, nf));
  }
}

TEST_CASE("odometer window marks boundary columns") {
  OdometerMonoid m{OdometerBackend{2}};
  DeltaTruncation<OdometerMonoid> t(m, 1);
  auto j = j_matrix(t, ZsElement<OdometerElement>{Word(""), {2}});
  CHECK(j.has_boundary());
  auto id = j_matrix(t, m.identity());
  CHECK_FALSE(id.has_boundary());
  CHECK(id == SparseOp::identity(t.dim()));
}
