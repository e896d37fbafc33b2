// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lcm/instance.hpp"
#include "lcm/shift_groupoid.hpp"
#include "lcm/spectra.hpp"
#include "lcm/suites.hpp"

using namespace lcm;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, std::string const& why) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + why;
    }
  }
};

struct Timed {
  CheckReport rep;
  double seconds = 0;
};

Timed run(std::vector<std::string> const& suites, std::string const& monoid, SuiteParams p) {
  auto const inst = parse_instance(monoid, p.group_bound);
  auto const start = std::chrono::steady_clock::now();
  Timed t{run_check(suites, inst, p), 0};
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return t;
}

SuiteParams params(std::size_t depth, std::int64_t bound = 2, std::size_t delta = 3) {
  SuiteParams p;
  p.depth = depth;
  p.group_bound = bound;
  p.delta_depth = delta;
  return p;
}

// Each named property must exist, be certified and have no failures.
std::size_t expect_props(Outcome& o, CheckReport const& rep, std::string const& suite,
                         std::vector<std::string> const& names) {
  std::size_t cases = 0;
  o.require(rep.certified, "instance not certified");
  for (auto const& n : names) {
    auto const* p = rep.find(suite, n);
    if (!p) {
      o.require(false, suite + "." + n + " missing");
      continue;
    }
    o.require(p->result.failures == 0 && !p->inconclusive,
              suite + "." + n + ": " + std::to_string(p->result.failures) + " failures");
    cases += p->result.cases;
  }
  return cases;
}

std::string fmt_s(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

Outcome c1() {
  Outcome o;
  auto t = run({"isg"}, "free:2", params(2));
  auto n = expect_props(o, t.rep, "isg", {"associativity", "involution", "regularity"});
  o.require(n >= 10'000, "only " + std::to_string(n) + " cases");
  o.require(t.seconds < 60, "took " + fmt_s(t.seconds));
  o.detail = o.ok ? std::to_string(n) + " cases in " + fmt_s(t.seconds) : o.detail;
  return o;
}

Outcome c2() {
  Outcome o;
  auto t = run({"isg"}, "free:2", params(2));
  auto n = expect_props(o, t.rep, "isg", {"e_star_unitary"});
  o.detail = o.ok ? std::to_string(n) + " cases" : o.detail;
  return o;
}

Outcome c3() {
  Outcome o;
  auto t = run({"isg"}, "odometer", params(1, 3));
  auto n = expect_props(o, t.rep, "isg", {"equality_units"});
  o.require(n >= 1'000, "only " + std::to_string(n) + " pairs");
  o.detail = o.ok ? std::to_string(n) + " triple pairs" : o.detail;
  return o;
}

Outcome c4() {
  Outcome o;
  auto t = run({"operator"}, "free:2", params(2, 2, 4));
  auto n = expect_props(o, t.rep, "operator", {"represent_multiplicative"});
  o.require(t.seconds < 120, "took " + fmt_s(t.seconds));
  o.detail = o.ok ? std::to_string(n) + " pairs in " + fmt_s(t.seconds) : o.detail;
  return o;
}

Outcome c5() {
  Outcome o;
  auto p = params(2, 2, 4);
  p.random_words = 10'000;
  auto t = run({"operator"}, "free:2", p);
  auto n = expect_props(o, t.rep, "operator", {"reduce_word"});
  o.require(n == 10'000, std::to_string(n) + " words");
  o.detail = o.ok ? std::to_string(n) + " words" : o.detail;
  return o;
}

Outcome c6() {
  Outcome o;
  auto t = run({"operator"}, "free:2", params(2, 2, 4));
  auto n = expect_props(o, t.rep, "operator", {"expectation"});
  o.detail = o.ok ? std::to_string(n) + " triples" : o.detail;
  return o;
}

Outcome c7() {
  Outcome o;
  auto t = run({"constructible"}, "free:2", params(2, 2, 4));
  auto n = expect_props(o, t.rep, "constructible",
                        {"intersection_laws", "translation_laws", "intersection_extensional",
                         "translation_extensional", "independence"});
  o.detail = o.ok ? std::to_string(n) + " cases" : o.detail;
  return o;
}

Outcome c8() {
  Outcome o;
  auto t = run({"groupoid"}, "free:2", params(2));
  auto n = expect_props(o, t.rep, "groupoid", {"cocycle_additive", "cocycle_idempotent_pure"});
  o.detail = o.ok ? std::to_string(n) + " cases" : o.detail;
  return o;
}

Outcome c9() {
  Outcome o;
  InverseSemigroup<FreeMonoid> isg(FreeMonoid(2));
  auto rep = check_full_shift(isg, 3, 2, 2, 3, Exec::parallel);
  o.require(rep.germ_classes == rep.pairs, std::to_string(rep.germ_classes) + " classes vs "
                                               + std::to_string(rep.pairs) + " pairs");
  o.require(rep.passed(), "mismatches in the germ sweeps");
  o.require(rep.pairs > 0, "empty enumeration");
  o.detail = o.ok ? std::to_string(rep.germs) + " germs, " + std::to_string(rep.germ_classes)
                        + " classes = " + std::to_string(rep.pairs) + " pairs"
                  : o.detail;
  return o;
}

Outcome c10() {
  Outcome o;
  FreeMonoid m(2);
  InverseSemigroup<FreeMonoid> isg(m);
  std::string counts;
  for (std::size_t d = 1; d <= 2; ++d) {
    auto const left = build_ideal_semilattice(m, Side::left, d);
    auto const right = build_ideal_semilattice(m, Side::right, d);
    auto const phi = check_phi(isg, build_semilattice(isg, d), left, right);
    o.require(phi.bijective && phi.meet_preserving, "phi fails at depth " + std::to_string(d));
    auto const c = check_product_correspondence(left.lattice, right.lattice);
    o.require(c.product_filters == c.left_filters * c.right_filters,
              "filter count mismatch at depth " + std::to_string(d));
    o.require(c.bijective && c.ultrafilters_preserved,
              "correspondence fails at depth " + std::to_string(d));
    if (d == 1) {
      o.require(c.left_filters == 3 && c.right_filters == 3 && c.product_filters == 9,
                "depth 1 counts differ from 3·3 = 9");
    }
    counts += (counts.empty() ? "" : ", ") + std::string("depth ") + std::to_string(d) + ": "
              + std::to_string(c.left_filters) + "·" + std::to_string(c.right_filters) + " = "
              + std::to_string(c.product_filters);
  }
  o.detail = o.ok ? counts : o.detail;
  return o;
}

Outcome c11() {
  Outcome o;
  auto t = run({"instances"}, "odometer", params(4, 8));
  auto n = expect_props(o, t.rep, "instances",
                        {"pseudo_free", "recurrence", "left_ideals_linear"});
  o.detail = o.ok ? std::to_string(n) + " cases" : o.detail;
  return o;
}

Outcome c12() {
  Outcome o;
  auto t = run({"nekrashevych"}, "odometer", params(2, 2));
  auto pairs = expect_props(o, t.rep, "nekrashevych", {"pi_multiplicative"});
  expect_props(o, t.rep, "nekrashevych", {"tight_f_beta", "cover_of_top"});
  o.require(pairs >= 1'000, "only " + std::to_string(pairs) + " pairs");
  o.require(t.seconds < 60, "took " + fmt_s(t.seconds));
  o.detail = o.ok ? std::to_string(pairs) + " pairs in " + fmt_s(t.seconds) : o.detail;
  return o;
}

Outcome c13() {
  Outcome o;
  std::size_t n = 0;
  for (auto const& [monoid, bound] : {std::pair{"free:2", 2}, std::pair{"odometer", 2}}) {
    auto t = run({"isg"}, monoid, params(2, bound));
    n += expect_props(o, t.rep, "isg", {"opposite_anti_isomorphism"});
  }
  o.detail = o.ok ? std::to_string(n) + " cases" : o.detail;
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> const criteria{
      {"inverse semigroup laws", c1},
      {"E*-unitary", c2},
      {"equality up to units", c3},
      {"operator multiplicativity", c4},
      {"word reduction", c5},
      {"diagonal expectation", c6},
      {"constructible calculus", c7},
      {"cocycle", c8},
      {"full-shift groupoid", c9},
      {"semilattice spectra", c10},
      {"self-similar instance", c11},
      {"boundary quotient", c12},
      {"opposite symmetry", c13},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (std::exception const& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += o.ok ? 0 : 1;
    std::printf("%s %2zu %s: %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
