#include "lcm/shift_groupoid.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace lcm {

namespace {

Word primitive_root(Word const& w) {
  std::size_t const n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) {
      continue;
    }
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) {
      ok = w.letters[i] == w.letters[i - d];
    }
    if (ok) {
      return w.prefix(d);
    }
  }
  return w;
}

}  // namespace

Ray::Ray(Word pre, Word period) : _pre(std::move(pre)), _period(std::move(period)) {
  if (_period.empty()) {
    throw std::invalid_argument("a ray needs a nonempty period");
  }
  _period = primitive_root(_period);
  // pull the pre-period back while its last letter continues the cycle
  while (!_pre.empty() && _pre.letters.back() == _period.letters.back()) {
    _pre = _pre.drop_back(1);
    _period = Word(_period.letters.back() + _period.letters.substr(0, _period.size() - 1));
  }
}

int Ray::letter(std::size_t i) const {
  if (i < _pre.size()) {
    return _pre.letter(i);
  }
  return _period.letter((i - _pre.size()) % _period.size());
}

Word Ray::take(std::size_t n) const {
  std::string s;
  s.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    s += static_cast<char>('0' + letter(i));
  }
  return Word(std::move(s));
}

Ray Ray::drop(std::size_t n) const {
  if (n <= _pre.size()) {
    return Ray(_pre.drop_front(n), _period);
  }
  std::size_t const k = (n - _pre.size()) % _period.size();
  return Ray(Word(), _period.drop_front(k) + _period.prefix(k));
}

Ray Ray::prepend(Word const& w) const { return Ray(w + _pre, _period); }

bool Ray::starts_with(Word const& w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (letter(i) != w.letter(i)) {
      return false;
    }
  }
  return true;
}

std::string to_string(BiPoint const& pt) {
  auto rev = [](Word const& w) { return w.reversed().letters; };
  return "(" + rev(pt.x.period()) + ")" + rev(pt.x.pre()) + "." + pt.y.pre().letters
         + "(" + pt.y.period().letters + ")";
}

BiPoint shift(BiPoint const& pt, long n) {
  if (n >= 0) {
    Word const moved = pt.y.take(static_cast<std::size_t>(n));
    return {pt.x.prepend(moved.reversed()), pt.y.drop(static_cast<std::size_t>(n))};
  }
  Word const moved = pt.x.take(static_cast<std::size_t>(-n));
  return {pt.x.drop(static_cast<std::size_t>(-n)), pt.y.prepend(moved.reversed())};
}

long cocycle_h(Triple<Word> const& s) {
  if (s.is_zero()) {
    throw Error("the cocycle is not defined on zero");
  }
  return static_cast<long>(s.q().size()) - static_cast<long>(s.p().size())
         - static_cast<long>(s.r().size());
}

bool in_domain(Triple<Word> const& s, BiPoint const& pt) {
  if (s.is_zero()) {
    return false;
  }
  // β = γ γ1: γ1 is r1
  return pt.x.starts_with(s.r().reversed()) && pt.y.starts_with(s.r1());
}

std::optional<BiPoint> theta_apply(Triple<Word> const& s, BiPoint const& pt) {
  if (!in_domain(s, pt)) {
    return std::nullopt;
  }
  // β = α1 α: α1 is p1
  Ray const x = pt.x.drop(s.r().size()).prepend(s.p1().reversed());
  Ray const y = pt.y.drop(s.r1().size()).prepend(s.p());
  return BiPoint{x, y};
}

std::optional<Germ> make_germ(Triple<Word> const& s, BiPoint const& pt) {
  if (!in_domain(s, pt)) {
    return std::nullopt;
  }
  return Germ{s, pt};
}

bool germ_eq(Germ const& g, Germ const& h) {
  return g.point == h.point && cocycle_h(g.s) == cocycle_h(h.s);
}

bool germ_eq_search(InverseSemigroup<FreeMonoid> const& isg,
                    Germ const& g,
                    Germ const& h,
                    std::size_t bound) {
  if (!(g.point == h.point)) {
    return false;
  }
  for (std::size_t k = 0; k <= bound; ++k) {
    auto const e = isg.idempotent(g.point.y.take(k), g.point.x.take(k).reversed());
    auto const se = isg.product(g.s, e);
    auto const te = isg.product(h.s, e);
    if (!se.is_zero() && isg.eq(se, te)) {
      return true;
    }
  }
  return false;
}

std::pair<long, BiPoint> phi_map(Germ const& g) { return {cocycle_h(g.s), g.point}; }

std::vector<Ray> enumerate_rays(int alphabet, std::size_t max_pre, std::size_t max_period) {
  std::set<Ray> seen;
  std::vector<Ray> out;
  for (auto const& pre : words_up_to(alphabet, max_pre)) {
    for (std::size_t len = 1; len <= max_period; ++len) {
      for (auto const& period : words_of_length(alphabet, len)) {
        Ray r(pre, period);
        if (seen.insert(r).second) {
          out.push_back(r);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BiPoint> enumerate_points(int alphabet,
                                      std::size_t max_pre,
                                      std::size_t max_period) {
  auto const rays = enumerate_rays(alphabet, max_pre, max_period);
  std::vector<BiPoint> out;
  out.reserve(rays.size() * rays.size());
  for (auto const& x : rays) {
    for (auto const& y : rays) {
      out.push_back({x, y});
    }
  }
  return out;
}

std::size_t complexity(BiPoint const& pt) {
  return pt.x.pre().size() + pt.x.period().size() + pt.y.pre().size()
         + pt.y.period().size();
}

}  // namespace lcm

namespace lcm {

FullShiftReport check_full_shift(InverseSemigroup<FreeMonoid> const& isg,
                                 std::size_t max_slot,
                                 std::size_t max_pre,
                                 std::size_t max_period,
                                 long window,
                                 Exec exec) {
  int const k = isg.monoid().alphabet();
  std::vector<Triple<Word>> triples;
  for (auto const& s : isg.enumerate(max_slot)) {
    if (!s.is_zero()) {
      triples.push_back(s);
    }
  }
  auto const points = enumerate_points(k, max_pre, max_period);

  FullShiftReport rep;
  rep.triples = triples.size();
  rep.points = points.size();
  rep.pairs = points.size() * static_cast<std::size_t>(2 * window + 1);

  std::vector<std::vector<Germ>> at(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (auto const& s : triples) {
      if (auto g = make_germ(s, points[i]); g && std::abs(cocycle_h(s)) <= window) {
        at[i].push_back(*g);
      }
    }
    rep.germs += at[i].size();
  }

  rep.theta_is_shift = sweep(exec, points.size(), [&](std::size_t i) -> std::optional<std::string> {
    for (auto const& g : at[i]) {
      auto img = theta_apply(g.s, g.point);
      if (!img || !(*img == shift(g.point, cocycle_h(g.s)))) {
        return isg.to_string(g.s) + " at " + to_string(g.point);
      }
    }
    return std::nullopt;
  });

  std::vector<std::size_t> classes(points.size(), 0);
  rep.criterion_vs_search = sweep(exec, points.size(), [&](std::size_t i) -> std::optional<std::string> {
    auto const& gs = at[i];
    std::size_t const bound = max_slot + complexity(points[i]) + 2;
    std::vector<std::size_t> reps;
    std::optional<std::string> bad;
    for (std::size_t a = 0; a < gs.size(); ++a) {
      bool joined = false;
      for (std::size_t b = 0; b < gs.size(); ++b) {
        bool const search = germ_eq_search(isg, gs[a], gs[b], bound);
        if (search != germ_eq(gs[a], gs[b]) && !bad) {
          bad = isg.to_string(gs[a].s) + " vs " + isg.to_string(gs[b].s) + " at "
                + to_string(points[i]);
        }
        if (b < a && search && !joined) {
          joined = true;
        }
      }
      if (!joined) {
        reps.push_back(a);
      }
    }
    classes[i] = reps.size();
    return bad;
  });
  for (auto c : classes) {
    rep.germ_classes += c;
  }

  rep.bijection = sweep(exec, points.size(), [&](std::size_t i) -> std::optional<std::string> {
    std::vector<long> hs;
    for (auto const& g : at[i]) {
      auto [n, pt] = phi_map(g);
      if (!(pt == points[i])) {
        return "Φ moved the point of " + isg.to_string(g.s);
      }
      hs.push_back(n);
    }
    std::sort(hs.begin(), hs.end());
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
    if (hs.size() != classes[i] || hs.size() != static_cast<std::size_t>(2 * window + 1)) {
      return to_string(points[i]) + ": " + std::to_string(classes[i]) + " classes, "
             + std::to_string(hs.size()) + " images";
    }
    return std::nullopt;
  });

  // [t, θ_s(pt)][s, pt] = [ts, pt] must map to (h(t) + h(s), pt)
  rep.composition = sweep(exec, points.size(), [&](std::size_t i) -> std::optional<std::string> {
    for (auto const& g : at[i]) {
      auto const mid = *theta_apply(g.s, g.point);
      for (auto const& t : triples) {
        auto const tg = theta_apply(t, mid);
        if (!tg) {
          continue;
        }
        auto const ts = isg.product(t, g.s);
        auto const where = isg.to_string(t) + "·" + isg.to_string(g.s) + " at "
                           + to_string(g.point);
        if (ts.is_zero()) {
          return where + ": product is zero";
        }
        auto const direct = theta_apply(ts, g.point);
        if (!direct || !(*direct == *tg)
            || phi_map({ts, g.point}).first != cocycle_h(t) + cocycle_h(g.s)) {
          return where;
        }
      }
    }
    return std::nullopt;
  });
  return rep;
}

}  // namespace lcm
