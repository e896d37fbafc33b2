#pragma once

// Test-side reference computations, written directly from the set-level
// definitions and sharing no code with the library's algorithms.

#include <cstddef>
#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Str = std::string;

inline bool is_prefix(Str const& p, Str const& w) {
  return w.size() >= p.size() && w.compare(0, p.size(), p) == 0;
}
inline bool is_suffix(Str const& s, Str const& w) {
  return w.size() >= s.size() && w.compare(w.size() - s.size(), s.size(), s) == 0;
}

inline std::vector<Str> binary_words(std::size_t n) {
  std::vector<Str> out{""};
  std::vector<Str> layer{""};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Str> next;
    for (auto const& w : layer) {
      next.push_back(w + "0");
      next.push_back(w + "1");
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

// Δ over the free monoid on {0,1}: (a, x) with x a suffix of a, |a| <= n.
using Pair = std::pair<Str, Str>;

inline std::vector<Pair> delta(std::size_t n) {
  std::vector<Pair> out;
  for (auto const& a : binary_words(n)) {
    for (std::size_t k = 0; k <= a.size(); ++k) {
      out.emplace_back(a, a.substr(a.size() - k));
    }
  }
  return out;
}

// v_p(a, x) = (a, p x) when p x is a suffix of a
inline std::optional<Pair> v(Str const& p, Pair const& ax) {
  Str px = p + ax.second;
  if (!is_suffix(px, ax.first)) {
    return std::nullopt;
  }
  return Pair{ax.first, px};
}

// v_p^*(a, p x) = (a, x)
inline std::optional<Pair> v_star(Str const& p, Pair const& ax) {
  if (!is_prefix(p, ax.second)) {
    return std::nullopt;
  }
  return Pair{ax.first, ax.second.substr(p.size())};
}

// v_p v_q^* v_r as a partial map on the truncated Δ
inline std::map<Pair, Pair> triple_map(Str const& p,
                                       Str const& q,
                                       Str const& r,
                                       std::size_t n) {
  std::map<Pair, Pair> out;
  for (auto const& d : delta(n)) {
    auto a = v(r, d);
    if (!a) {
      continue;
    }
    auto b = v_star(q, *a);
    if (!b) {
      continue;
    }
    auto c = v(p, *b);
    if (!c) {
      continue;
    }
    out.emplace(d, *c);
  }
  return out;
}

inline std::map<Pair, Pair> compose(std::map<Pair, Pair> const& f,
                                    std::map<Pair, Pair> const& g) {
  std::map<Pair, Pair> out;
  for (auto const& [x, gx] : g) {
    if (auto it = f.find(gx); it != f.end()) {
      out.emplace(x, it->second);
    }
  }
  return out;
}

// Right LCM in the free monoid by brute force: the shortest common right
// multiple among words of length <= n, checked to divide every other one.
inline std::optional<Str> brute_right_lcm(Str const& p, Str const& q, std::size_t n) {
  std::optional<Str> best;
  std::vector<Str> common;
  for (auto const& m : binary_words(n)) {
    if (is_prefix(p, m) && is_prefix(q, m)) {
      common.push_back(m);
      if (!best || m.size() < best->size()) {
        best = m;
      }
    }
  }
  if (best) {
    for (auto const& m : common) {
      if (!is_prefix(*best, m)) {
        return std::nullopt;
      }
    }
  }
  return best;
}

inline std::optional<Str> brute_left_lcm(Str const& p, Str const& q, std::size_t n) {
  std::optional<Str> best;
  for (auto const& m : binary_words(n)) {
    if (is_suffix(p, m) && is_suffix(q, m) && (!best || m.size() < best->size())) {
      best = m;
    }
  }
  return best;
}

// Δ_p ∩ Δ^q = {(c q p x, p x)} as an explicit subset of the truncation
inline std::set<Pair> constructible(Str const& p, Str const& q, std::size_t n) {
  std::set<Pair> out;
  for (auto const& d : delta(n)) {
    auto const& [a, y] = d;
    if (is_prefix(p, y) && is_suffix(q + y, a)) {
      out.insert(d);
    }
  }
  return out;
}

// Every filter of a finite meet-semilattice given by its meet table, found
// by checking all subsets.
inline std::vector<std::set<std::size_t>> all_filters(
    std::vector<std::vector<std::size_t>> const& meet,
    std::size_t zero) {
  std::size_t const n = meet.size();
  auto leq = [&](std::size_t a, std::size_t b) { return meet[a][b] == a; };
  std::vector<std::set<std::size_t>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    if (mask >> zero & 1U) {
      continue;
    }
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      if (!(mask >> a & 1U)) {
        continue;
      }
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (leq(a, b) && !(mask >> b & 1U)) {
          ok = false;
        }
        if ((mask >> b & 1U) && !(mask >> meet[a][b] & 1U)) {
          ok = false;
        }
      }
    }
    if (ok) {
      std::set<std::size_t> f;
      for (std::size_t a = 0; a < n; ++a) {
        if (mask >> a & 1U) {
          f.insert(a);
        }
      }
      out.push_back(std::move(f));
    }
  }
  return out;
}

inline std::vector<std::set<std::size_t>> maximal(
    std::vector<std::set<std::size_t>> const& sets) {
  std::vector<std::set<std::size_t>> out;
  for (auto const& s : sets) {
    bool is_max = true;
    for (auto const& t : sets) {
      if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        is_max = false;
      }
    }
    if (is_max) {
      out.push_back(s);
    }
  }
  return out;
}

// a^m on an LSB-first binary word, one automaton step at a time:
// a.(0w) = 1w, a.(1w) = 0(a.w), the restriction being a exactly when the carry
// runs off the end. Returns (a^m.w, exponent of a^m|_w).
inline std::pair<Str, long> odometer_power(long m, Str w) {
  long restriction = 0;
  for (long i = 0; i < m; ++i) {
    bool carry = true;
    for (auto& c : w) {
      if (c == '0') {
        c = '1';
        carry = false;
        break;
      }
      c = '0';
    }
    restriction += carry ? 1 : 0;
  }
  for (long i = 0; i < -m; ++i) {
    bool borrow = true;
    for (auto& c : w) {
      if (c == '1') {
        c = '0';
        borrow = false;
        break;
      }
      c = '1';
    }
    restriction -= borrow ? 1 : 0;
  }
  return {w, restriction};
}

}  // namespace oracle
