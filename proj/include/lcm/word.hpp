#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace lcm {

// A word over the alphabet {0, ..., k-1}, letters stored as the digit
// characters '0'..'9'. The empty word prints as "ε".
struct Word {
  std::string letters;

  Word() = default;
  explicit Word(std::string s) : letters(std::move(s)) {}

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  int letter(std::size_t i) const noexcept { return letters[i] - '0'; }

  bool starts_with(Word const& w) const noexcept {
    return letters.size() >= w.size()
           && std::string_view(letters).substr(0, w.size()) == w.letters;
  }
  bool ends_with(Word const& w) const noexcept {
    return letters.size() >= w.size()
           && std::string_view(letters).substr(letters.size() - w.size())
                  == w.letters;
  }
  Word prefix(std::size_t n) const { return Word(letters.substr(0, n)); }
  Word suffix(std::size_t n) const {
    return Word(letters.substr(letters.size() - n));
  }
  Word drop_front(std::size_t n) const { return Word(letters.substr(n)); }
  Word drop_back(std::size_t n) const {
    return Word(letters.substr(0, letters.size() - n));
  }
  Word reversed() const { return Word(std::string(letters.rbegin(), letters.rend())); }

  friend Word operator+(Word const& a, Word const& b) {
    return Word(a.letters + b.letters);
  }

  // shortlex: length first, then lexicographic
  friend std::strong_ordering operator<=>(Word const& a, Word const& b) {
    if (auto c = a.size() <=> b.size(); c != 0) {
      return c;
    }
    return a.letters.compare(b.letters) <=> 0;
  }
  friend bool operator==(Word const&, Word const&) = default;
};

inline std::string to_string(Word const& w) {
  return w.empty() ? std::string("ε") : w.letters;
}

// Accepts "", "ε" and "eps" for the empty word.
Word parse_word(std::string_view s, int alphabet);

// All words of length exactly n over k letters, lexicographic order.
std::vector<Word> words_of_length(int alphabet, std::size_t n);

// All words of length <= n, shortlex order.
std::vector<Word> words_up_to(int alphabet, std::size_t n);

}  // namespace lcm

template <>
struct std::hash<lcm::Word> {
  std::size_t operator()(lcm::Word const& w) const noexcept {
    return std::hash<std::string>{}(w.letters);
  }
};
