#include "lcm/semilattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lcm {

FiniteSemilattice::FiniteSemilattice(std::vector<std::string> labels,
                                     std::vector<std::vector<std::size_t>> meet,
                                     std::size_t zero,
                                     std::size_t top)
    : _labels(std::move(labels)), _meet(std::move(meet)), _zero(zero), _top(top) {
  if (_meet.size() != _labels.size() || _zero >= _labels.size()
      || _top >= _labels.size()) {
    throw std::invalid_argument("malformed semilattice table");
  }
}

std::optional<std::string> FiniteSemilattice::validate() const {
  std::size_t const n = size();
  for (std::size_t a = 0; a < n; ++a) {
    if (_meet[a][a] != a) {
      return "meet not idempotent at " + _labels[a];
    }
    if (_meet[a][_zero] != _zero) {
      return "zero not absorbing at " + _labels[a];
    }
    if (_meet[a][_top] != a) {
      return "top not neutral at " + _labels[a];
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (_meet[a][b] != _meet[b][a]) {
        return "meet not commutative at " + _labels[a] + ", " + _labels[b];
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (_meet[_meet[a][b]][c] != _meet[a][_meet[b][c]]) {
          return "meet not associative at " + _labels[a] + ", " + _labels[b] + ", "
                 + _labels[c];
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> members(FiniteSemilattice const& l, Filter f) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < l.size(); ++a) {
    if (l.leq(f.generator, a)) {
      out.push_back(a);
    }
  }
  return out;
}

bool is_filter(FiniteSemilattice const& l, std::vector<bool> const& subset) {
  bool nonempty = false;
  for (std::size_t a = 0; a < l.size(); ++a) {
    if (!subset[a]) {
      continue;
    }
    nonempty = true;
    if (a == l.zero()) {
      return false;
    }
    for (std::size_t b = 0; b < l.size(); ++b) {
      if (l.leq(a, b) && !subset[b]) {
        return false;
      }
      if (subset[b] && !subset[l.meet(a, b)]) {
        return false;
      }
    }
  }
  return nonempty;
}

FilterSets enumerate_filters(FiniteSemilattice const& l) {
  FilterSets out;
  for (std::size_t e = 0; e < l.size(); ++e) {
    if (e == l.zero()) {
      continue;
    }
    out.filters.push_back({e});
    // ↑e is maximal iff e is an atom: nothing strictly between zero and e
    bool atom = true;
    for (std::size_t f = 0; f < l.size() && atom; ++f) {
      if (f != e && f != l.zero() && l.leq(f, e)) {
        atom = false;
      }
    }
    if (atom) {
      out.ultrafilters.push_back({e});
    }
  }
  return out;
}

std::optional<std::size_t> cover_counterexample(FiniteSemilattice const& l,
                                                std::vector<std::size_t> const& cover,
                                                std::size_t e) {
  for (std::size_t f = 0; f < l.size(); ++f) {
    if (f == l.zero() || !l.leq(f, e)) {
      continue;
    }
    bool met = std::any_of(cover.begin(), cover.end(),
                           [&](std::size_t c) { return l.meet(c, f) != l.zero(); });
    if (!met) {
      return f;
    }
  }
  return std::nullopt;
}

bool is_cover(FiniteSemilattice const& l,
              std::vector<std::size_t> const& cover,
              std::size_t e) {
  return !cover_counterexample(l, cover, e).has_value();
}

ProductSemilattice product_semilattice(FiniteSemilattice const& e,
                                       FiniteSemilattice const& f) {
  ProductSemilattice out;
  std::vector<std::string> labels{"0"};
  out.components.push_back({e.zero(), f.zero()});
  out.pair_index.assign(e.size(), std::vector<std::size_t>(f.size(), 0));
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i == e.zero()) {
      continue;
    }
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (j == f.zero()) {
        continue;
      }
      out.pair_index[i][j] = labels.size();
      labels.push_back("(" + e.label(i) + "," + f.label(j) + ")");
      out.components.push_back({i, j});
    }
  }
  std::size_t const n = labels.size();
  std::vector<std::vector<std::size_t>> meet(n, std::vector<std::size_t>(n, 0));
  for (std::size_t a = 1; a < n; ++a) {
    for (std::size_t b = 1; b < n; ++b) {
      auto [ai, aj] = out.components[a];
      auto [bi, bj] = out.components[b];
      std::size_t const mi = e.meet(ai, bi);
      std::size_t const mj = f.meet(aj, bj);
      meet[a][b] = (mi == e.zero() || mj == f.zero()) ? 0 : out.pair_index[mi][mj];
    }
  }
  std::size_t const top = out.pair_index[e.top()][f.top()];
  out.lattice = FiniteSemilattice(std::move(labels), std::move(meet), 0, top);
  return out;
}

ProductCorrespondence check_product_correspondence(FiniteSemilattice const& e,
                                                   FiniteSemilattice const& f) {
  ProductCorrespondence out;
  auto prod = product_semilattice(e, f);
  auto const& l = prod.lattice;
  auto const fp = enumerate_filters(l);
  auto const fe = enumerate_filters(e);
  auto const ff = enumerate_filters(f);
  out.product_filters = fp.filters.size();
  out.left_filters = fe.filters.size();
  out.right_filters = ff.filters.size();
  out.product_ultrafilters = fp.ultrafilters.size();
  out.left_ultrafilters = fe.ultrafilters.size();
  out.right_ultrafilters = ff.ultrafilters.size();

  // ξ ↦ (ξ_l, ξ_r) computed from the member sets, then checked to be filters
  // and to reassemble ξ as ξ_l × ξ_r.
  std::set<std::pair<std::size_t, std::size_t>> images;
  bool ok = true;
  auto generator_of = [](FiniteSemilattice const& s, std::vector<bool> const& set)
      -> std::optional<std::size_t> {
    for (std::size_t g = 0; g < s.size(); ++g) {
      if (!set[g]) {
        continue;
      }
      bool least = true;
      for (std::size_t h = 0; h < s.size(); ++h) {
        if (set[h] && !s.leq(g, h)) {
          least = false;
          break;
        }
      }
      if (least) {
        return g;
      }
    }
    return std::nullopt;
  };
  auto is_ultra = [](FilterSets const& fs, std::size_t g) {
    return std::find(fs.ultrafilters.begin(), fs.ultrafilters.end(), Filter{g})
           != fs.ultrafilters.end();
  };
  bool ultra_ok = true;
  for (auto const& xi : fp.filters) {
    std::vector<bool> left(e.size(), false);
    std::vector<bool> right(f.size(), false);
    auto const mem = members(l, xi);
    for (auto a : mem) {
      left[prod.components[a].first] = true;
      right[prod.components[a].second] = true;
    }
    if (!is_filter(e, left) || !is_filter(f, right)) {
      ok = false;
      continue;
    }
    auto gl = generator_of(e, left);
    auto gr = generator_of(f, right);
    if (!gl || !gr) {
      ok = false;
      continue;
    }
    // ξ_l × ξ_r must give back ξ
    std::size_t count = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = 0; j < f.size(); ++j) {
        if (left[i] && right[j]) {
          ++count;
          if (!l.leq(xi.generator, prod.pair_index[i][j])) {
            ok = false;
          }
        }
      }
    }
    if (count != mem.size()) {
      ok = false;
    }
    images.insert({*gl, *gr});
    bool const ultra = is_ultra(fp, xi.generator);
    if (ultra != (is_ultra(fe, *gl) && is_ultra(ff, *gr))) {
      ultra_ok = false;
    }
  }
  out.bijective = ok && images.size() == fp.filters.size()
                  && images.size() == fe.filters.size() * ff.filters.size();
  out.ultrafilters_preserved = ultra_ok
                               && fp.ultrafilters.size()
                                      == fe.ultrafilters.size() * ff.ultrafilters.size();
  return out;
}

}  // namespace lcm
