#pragma once

// The free-monoid case: S_{X*} acting on two-sided sequences ...x3x2x1.y1y2y3...
// by powers of the shift, restricted to eventually periodic points so that
// everything is exact.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcm/free_monoid.hpp"
#include "lcm/isg.hpp"
#include "lcm/parallel.hpp"
#include "lcm/word.hpp"

namespace lcm {

// pre followed by period repeated forever; canonical: primitive period and
// shortest pre-period
class Ray {
 public:
  Ray(Word pre, Word period);

  Word const& pre() const noexcept { return _pre; }
  Word const& period() const noexcept { return _period; }

  int letter(std::size_t i) const;
  Word take(std::size_t n) const;
  Ray drop(std::size_t n) const;
  Ray prepend(Word const& w) const;
  bool starts_with(Word const& w) const;

  auto operator<=>(Ray const&) const = default;
  bool operator==(Ray const&) const = default;

 private:
  Word _pre;
  Word _period;
};

// x is read leftwards from the origin, y rightwards
struct BiPoint {
  Ray x;
  Ray y;
  auto operator<=>(BiPoint const&) const = default;
  bool operator==(BiPoint const&) const = default;
};

// "(1)0.1(01)" means ...1110.10101...
std::string to_string(BiPoint const& pt);

// σ(x, y) = (y1 x, y2 y3 ...); negative n shifts the other way
BiPoint shift(BiPoint const& pt, long n);

// h[α, β, γ] = |β| - |α| - |γ|
long cocycle_h(Triple<Word> const& s);

// θ_s for s = [α, β, γ] with β = γ γ1 = α1 α: defined on points with x
// starting with reverse(γ) and y with γ1, mapping them to
// (reverse(α1) x', α y') where x', y' are what remains.
bool in_domain(Triple<Word> const& s, BiPoint const& pt);
std::optional<BiPoint> theta_apply(Triple<Word> const& s, BiPoint const& pt);

struct Germ {
  Triple<Word> s;
  BiPoint point;
};

std::optional<Germ> make_germ(Triple<Word> const& s, BiPoint const& pt);

// Same point, same cocycle value; both germs are defined by construction.
bool germ_eq(Germ const& g, Germ const& h);

// Independent check: search the idempotents e = [p, qp, q] whose domain
// contains the point (p a prefix of y, reverse(q) a prefix of x), with
// |p| = |q| <= bound, for one with s e = t e.
bool germ_eq_search(InverseSemigroup<FreeMonoid> const& isg,
                    Germ const& g,
                    Germ const& h,
                    std::size_t bound);

std::pair<long, BiPoint> phi_map(Germ const& g);

// Rays with pre-period <= max_pre and primitive period of length
// 1..max_period, deduplicated after canonicalization.
std::vector<Ray> enumerate_rays(int alphabet, std::size_t max_pre, std::size_t max_period);
std::vector<BiPoint> enumerate_points(int alphabet,
                                      std::size_t max_pre,
                                      std::size_t max_period);

// pre and period lengths of both rays, summed
std::size_t complexity(BiPoint const& pt);

struct FullShiftReport {
  std::size_t triples = 0;
  std::size_t points = 0;
  std::size_t germs = 0;
  std::size_t germ_classes = 0;
  std::size_t pairs = 0;
  SweepResult theta_is_shift;
  SweepResult criterion_vs_search;
  SweepResult bijection;
  SweepResult composition;

  bool passed() const {
    return germ_classes == pairs && theta_is_shift.failures == 0
           && criterion_vs_search.failures == 0 && bijection.failures == 0
           && composition.failures == 0;
  }
};

// Germs [s, pt] over triples with slots <= max_slot and the enumerated points,
// against pairs (n, pt) with |n| <= window. Classes are formed with the
// idempotent search, not the criterion. Sweeps run per point.
FullShiftReport check_full_shift(InverseSemigroup<FreeMonoid> const& isg,
                                 std::size_t max_slot,
                                 std::size_t max_pre,
                                 std::size_t max_period,
                                 long window,
                                 Exec exec);

}  // namespace lcm
