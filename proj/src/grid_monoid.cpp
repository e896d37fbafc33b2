#include "lcm/grid_monoid.hpp"

#include <algorithm>
#include <cctype>

namespace lcm {

GridMonoid::GridMonoid(int rank, std::size_t ceiling)
    : _rank(rank), _ceiling(ceiling) {
  if (rank < 1 || rank > 16) {
    throw Error("grid rank must lie in [1, 16], got " + std::to_string(rank));
  }
}

GridVector GridMonoid::identity() const {
  return GridVector{std::vector<std::uint32_t>(_rank, 0)};
}

GridVector GridMonoid::mul(GridVector const& a, GridVector const& b) const {
  GridVector out = a;
  for (int i = 0; i < _rank; ++i) {
    out.coords[i] += b.coords[i];
  }
  return out;
}

std::optional<LcmWitness<GridVector>> GridMonoid::right_lcm(GridVector const& p,
                                                            GridVector const& q) const {
  GridVector r = identity();
  GridVector w1 = identity();
  GridVector w2 = identity();
  for (int i = 0; i < _rank; ++i) {
    r.coords[i] = std::max(p.coords[i], q.coords[i]);
    w1.coords[i] = r.coords[i] - p.coords[i];
    w2.coords[i] = r.coords[i] - q.coords[i];
  }
  return LcmWitness<GridVector>{r, w1, w2};
}

std::optional<GridVector> GridMonoid::divide(Side,
                                             GridVector const& p,
                                             GridVector const& q) const {
  GridVector x = identity();
  for (int i = 0; i < _rank; ++i) {
    if (q.coords[i] < p.coords[i]) {
      return std::nullopt;
    }
    x.coords[i] = q.coords[i] - p.coords[i];
  }
  return x;
}

namespace {

// all compositions of `total` into `parts` parts, lexicographically descending
void compositions(std::size_t total,
                  std::size_t parts,
                  std::vector<std::uint32_t>& cur,
                  std::vector<GridVector>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(static_cast<std::uint32_t>(total));
    out.push_back(GridVector{cur});
    cur.pop_back();
    return;
  }
  for (std::size_t first = total + 1; first-- > 0;) {
    cur.push_back(static_cast<std::uint32_t>(first));
    compositions(total - first, parts, cur, out);
    cur.pop_back();
  }
}

std::size_t binomial(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return static_cast<std::size_t>(r + 0.5);
}

}  // namespace

std::vector<GridVector> GridMonoid::enumerate_up_to(std::size_t n) const {
  // number of points with coordinate sum <= n is C(n + k, k)
  check_ceiling(binomial(n + _rank, _rank), _ceiling, "grid enumeration");
  std::vector<GridVector> out;
  for (std::size_t total = 0; total <= n; ++total) {
    std::vector<std::uint32_t> cur;
    compositions(total, _rank, cur, out);
  }
  return out;
}

std::string GridMonoid::to_string(GridVector const& a) const {
  std::string s = "(";
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (i > 0) {
      s += ',';
    }
    s += std::to_string(a.coords[i]);
  }
  return s + ")";
}

GridVector GridMonoid::parse(std::string const& s) const {
  if (s.empty() || s == "ε" || s == "eps") {
    return identity();
  }
  if (s.front() != '(' || s.back() != ')') {
    throw ParseError("grid element must look like (a,b,...)", 0);
  }
  GridVector v;
  std::size_t i = 1;
  while (i < s.size() - 1) {
    std::size_t start = i;
    std::uint64_t value = 0;
    while (i < s.size() - 1 && std::isdigit(static_cast<unsigned char>(s[i]))) {
      value = value * 10 + static_cast<std::uint64_t>(s[i] - '0');
      ++i;
    }
    if (i == start) {
      throw ParseError("expected a natural number", i);
    }
    v.coords.push_back(static_cast<std::uint32_t>(value));
    if (i < s.size() - 1) {
      if (s[i] != ',') {
        throw ParseError("expected ','", i);
      }
      ++i;
    }
  }
  if (static_cast<int>(v.coords.size()) != _rank) {
    throw ParseError("grid element has " + std::to_string(v.coords.size())
                         + " coordinates, expected " + std::to_string(_rank),
                     0);
  }
  return v;
}

}  // namespace lcm
