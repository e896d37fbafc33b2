#include "lcm/word.hpp"

#include "lcm/core.hpp"

namespace lcm {

Word parse_word(std::string_view s, int alphabet) {
  if (s.empty() || s == "ε" || s == "eps") {
    return Word();
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    int d = s[i] - '0';
    if (d < 0 || d >= alphabet) {
      throw ParseError("letter '" + std::string(1, s[i])
                           + "' outside alphabet of size "
                           + std::to_string(alphabet),
                       i);
    }
  }
  return Word(std::string(s));
}

std::vector<Word> words_of_length(int alphabet, std::size_t n) {
  std::vector<Word> out;
  std::string cur(n, '0');
  while (true) {
    out.emplace_back(cur);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (cur[i] - '0' + 1 < alphabet) {
        ++cur[i];
        break;
      }
      cur[i] = '0';
      if (i == 0) {
        return out;
      }
    }
    if (n == 0) {
      return out;
    }
  }
}

std::vector<Word> words_up_to(int alphabet, std::size_t n) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= n; ++len) {
    auto w = words_of_length(alphabet, len);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

}  // namespace lcm
