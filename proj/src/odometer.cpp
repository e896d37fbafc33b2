#include "lcm/odometer.hpp"

#include "lcm/core.hpp"

namespace lcm {

namespace {

constexpr std::size_t max_word = 60;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) {
    --q;
  }
  return q;
}

}  // namespace

std::int64_t OdometerBackend::value(Word const& w) {
  if (w.size() > max_word) {
    throw ResourceLimit("odometer words are limited to 60 letters");
  }
  std::int64_t v = 0;
  for (std::size_t i = w.size(); i-- > 0;) {
    v = 2 * v + w.letter(i);
  }
  return v;
}

Word OdometerBackend::from_value(std::uint64_t v, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = static_cast<char>('0' + ((v >> i) & 1U));
  }
  return Word(std::move(s));
}

std::pair<Word, OdometerElement> OdometerBackend::act_restrict(OdometerElement g,
                                                               Word const& w) const {
  if (w.empty()) {
    return {w, g};
  }
  std::int64_t const modulus = std::int64_t{1} << w.size();
  std::int64_t const t = value(w) + g.exponent;
  std::int64_t const carry = floor_div(t, modulus);
  std::int64_t const rest = t - carry * modulus;
  return {from_value(static_cast<std::uint64_t>(rest), w.size()), {carry}};
}

std::optional<OdometerElement> OdometerBackend::transport(Word const& alpha,
                                                          Word const& delta,
                                                          OdometerElement k) const {
  if (alpha.size() != delta.size()) {
    return std::nullopt;
  }
  std::int64_t const modulus = std::int64_t{1} << alpha.size();
  return OdometerElement{value(delta) - value(alpha) + modulus * k.exponent};
}

std::vector<OdometerElement> OdometerBackend::enumerate_group() const {
  std::vector<OdometerElement> out;
  for (std::int64_t m = -_bound; m <= _bound; ++m) {
    out.push_back({m});
  }
  return out;
}

OdometerElement OdometerBackend::parse_group(std::string const& s) const {
  if (s.empty() || s == "e") {
    return {0};
  }
  std::size_t used = 0;
  std::int64_t m = 0;
  try {
    m = std::stoll(s, &used);
  } catch (std::exception const&) {
    throw ParseError("expected an integer exponent, got '" + s + "'", 0);
  }
  if (used != s.size()) {
    throw ParseError("trailing characters in exponent '" + s + "'", used);
  }
  return {m};
}

}  // namespace lcm
