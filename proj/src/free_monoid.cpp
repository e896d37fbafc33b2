#include "lcm/free_monoid.hpp"

#include <algorithm>
#include <cmath>

namespace lcm {

FreeMonoid::FreeMonoid(int alphabet, std::size_t ceiling)
    : _alphabet(alphabet), _ceiling(ceiling) {
  if (alphabet < 2 || alphabet > 10) {
    throw Error("free monoid alphabet size must lie in [2, 10], got "
                + std::to_string(alphabet));
  }
}

std::optional<LcmWitness<Word>> FreeMonoid::right_lcm(Word const& p,
                                                      Word const& q) const {
  if (q.starts_with(p)) {
    return LcmWitness<Word>{q, q.drop_front(p.size()), Word()};
  }
  if (p.starts_with(q)) {
    return LcmWitness<Word>{p, Word(), p.drop_front(q.size())};
  }
  return std::nullopt;
}

std::optional<LcmWitness<Word>> FreeMonoid::left_lcm(Word const& p,
                                                     Word const& q) const {
  if (q.ends_with(p)) {
    return LcmWitness<Word>{q, q.drop_back(p.size()), Word()};
  }
  if (p.ends_with(q)) {
    return LcmWitness<Word>{p, Word(), p.drop_back(q.size())};
  }
  return std::nullopt;
}

std::optional<Word> FreeMonoid::divide(Side side, Word const& p, Word const& q) const {
  if (side == Side::left) {
    if (q.starts_with(p)) {
      return q.drop_front(p.size());
    }
  } else if (q.ends_with(p)) {
    return q.drop_back(p.size());
  }
  return std::nullopt;
}

std::vector<Word> FreeMonoid::enumerate_up_to(std::size_t n) const {
  // sum_{i<=n} k^i, computed in floating point so overflow cannot hide a
  // ceiling violation
  double count = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    count += std::pow(static_cast<double>(_alphabet), static_cast<double>(i));
  }
  if (count > static_cast<double>(_ceiling)) {
    check_ceiling(static_cast<std::size_t>(std::min(count, 1e18)), _ceiling,
                  "free monoid enumeration");
  }
  return words_up_to(_alphabet, n);
}

}  // namespace lcm
