#include "lcm/group_label.hpp"

#include <cstdlib>

namespace lcm {

FreeGroupWord FreeGroupWord::from_word(Word const& w) {
  FreeGroupWord g;
  g.letters.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    g.letters.push_back(w.letter(i) + 1);
  }
  return g;
}

FreeGroupWord FreeGroupWord::inverse() const {
  FreeGroupWord g;
  g.letters.assign(letters.rbegin(), letters.rend());
  for (auto& x : g.letters) {
    x = -x;
  }
  return g;
}

FreeGroupWord operator*(FreeGroupWord const& a, FreeGroupWord const& b) {
  FreeGroupWord g = a;
  for (int x : b.letters) {
    if (!g.letters.empty() && g.letters.back() == -x) {
      g.letters.pop_back();
    } else {
      g.letters.push_back(x);
    }
  }
  return g;
}

std::string to_string(FreeGroupWord const& g) {
  if (g.letters.empty()) {
    return "ε";
  }
  std::string s;
  for (int x : g.letters) {
    s += static_cast<char>('0' + std::abs(x) - 1);
    if (x < 0) {
      s += "^-1";
    }
  }
  return s;
}

IntVector IntVector::from_grid(GridVector const& v) {
  IntVector out;
  out.coords.assign(v.coords.begin(), v.coords.end());
  return out;
}

IntVector IntVector::inverse() const {
  IntVector out = *this;
  for (auto& c : out.coords) {
    c = -c;
  }
  return out;
}

bool IntVector::is_identity() const noexcept {
  for (auto c : coords) {
    if (c != 0) {
      return false;
    }
  }
  return true;
}

IntVector operator*(IntVector const& a, IntVector const& b) {
  IntVector out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) {
    out.coords[i] += b.coords[i];
  }
  return out;
}

std::string to_string(IntVector const& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (i > 0) {
      s += ',';
    }
    s += std::to_string(v.coords[i]);
  }
  return s + ")";
}

}  // namespace lcm
