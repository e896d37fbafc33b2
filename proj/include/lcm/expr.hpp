#pragma once

// Expressions over S_P and the constructible sets:
//
//   expr := term { "*" term }
//   term := "v(" elem ")" | "adj(" expr ")" | "[" elem "," elem "," elem "]"
//         | "e(" elem ";" elem ")"
//
// An elem is whatever the monoid parses: a letter run, "ε"/"eps"/empty for the
// identity, or a parenthesized group such as "(1,0)" or "(01,2)". Products of
// sets intersect; a set multiplied with a triple acts as its idempotent.

#include <cctype>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lcm/constructible.hpp"
#include "lcm/isg.hpp"

namespace lcm {

template <LcmMonoid M>
using Value = std::variant<Triple<element_t<M>>, ConstructibleSet<element_t<M>>>;

namespace detail {

template <LcmMonoid M>
class ExprParser {
 public:
  using E = element_t<M>;

  ExprParser(InverseSemigroup<M> const& isg, std::string_view src) : _isg(isg), _src(src) {}

  Value<M> parse() {
    auto v = expr();
    skip_ws();
    if (_pos != _src.size()) {
      throw ParseError("unexpected '" + std::string(1, _src[_pos]) + "'", _pos);
    }
    return v;
  }

 private:
  Value<M> expr() {
    auto acc = term();
    for (;;) {
      skip_ws();
      if (!eat('*')) {
        return acc;
      }
      acc = multiply(acc, term());
    }
  }

  Value<M> term() {
    skip_ws();
    std::size_t const start = _pos;
    if (eat_keyword("adj(")) {
      auto inner = expr();
      expect(')');
      return adjoint(inner);
    }
    if (eat_keyword("v(")) {
      auto p = element(")");
      expect(')');
      return _isg.generator(p);
    }
    if (eat_keyword("e(")) {
      auto p = element(";");
      expect(';');
      auto q = element(")");
      expect(')');
      return cs_make(_isg.monoid(), p, q);
    }
    if (eat('[')) {
      auto p = element(",");
      expect(',');
      auto q = element(",");
      expect(',');
      auto r = element("]");
      expect(']');
      try {
        return _isg.make(p, q, r);
      } catch (InvalidTriple const& e) {
        throw InvalidTriple(std::string(e.what()) + " (triple at position "
                            + std::to_string(start) + ")");
      }
    }
    if (_pos >= _src.size()) {
      throw ParseError("expected a term, found end of input", _pos);
    }
    throw ParseError("expected a term", _pos);
  }

  // Reads up to the first terminator character at parenthesis depth zero.
  E element(std::string_view terminators) {
    skip_ws();
    std::size_t const start = _pos;
    int depth = 0;
    while (_pos < _src.size()) {
      char const c = _src[_pos];
      if (depth == 0 && terminators.find(c) != std::string_view::npos) {
        break;
      }
      if (c == '(') {
        ++depth;
      } else if (c == ')') {
        if (depth == 0) {
          break;
        }
        --depth;
      }
      ++_pos;
    }
    if (depth != 0) {
      throw ParseError("unbalanced parenthesis", start);
    }
    std::string text(_src.substr(start, _pos - start));
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
      text.pop_back();
    }
    if (text.empty() || text == "ε" || text == "eps") {
      return _isg.monoid().identity();
    }
    try {
      return _isg.monoid().parse(text);
    } catch (ParseError const& e) {
      throw ParseError("bad element '" + text + "': " + e.what(), start);
    } catch (Error const& e) {
      throw ParseError("bad element '" + text + "': " + e.what(), start);
    }
  }

  Triple<E> as_triple(Value<M> const& v) const {
    if (auto const* t = std::get_if<Triple<E>>(&v)) {
      return *t;
    }
    auto const& y = std::get<ConstructibleSet<E>>(v);
    if (y.is_empty()) {
      return Triple<E>::zero();
    }
    return _isg.idempotent(y.p(), y.q());
  }

  Value<M> multiply(Value<M> const& a, Value<M> const& b) const {
    auto const* ya = std::get_if<ConstructibleSet<E>>(&a);
    auto const* yb = std::get_if<ConstructibleSet<E>>(&b);
    if (ya && yb) {
      return cs_intersect(_isg.monoid(), *ya, *yb);
    }
    return _isg.product(as_triple(a), as_triple(b));
  }

  Value<M> adjoint(Value<M> const& v) const {
    if (auto const* t = std::get_if<Triple<E>>(&v)) {
      return _isg.star(*t);
    }
    return v;
  }

  void skip_ws() {
    while (_pos < _src.size() && std::isspace(static_cast<unsigned char>(_src[_pos]))) {
      ++_pos;
    }
  }

  bool eat(char c) {
    skip_ws();
    if (_pos < _src.size() && _src[_pos] == c) {
      ++_pos;
      return true;
    }
    return false;
  }

  bool eat_keyword(std::string_view kw) {
    if (_src.substr(_pos, kw.size()) == kw) {
      _pos += kw.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) {
      throw ParseError(std::string("expected '") + c + "'", _pos);
    }
  }

  InverseSemigroup<M> const& _isg;
  std::string_view _src;
  std::size_t _pos = 0;
};

}  // namespace detail

template <LcmMonoid M>
Value<M> eval_expr(InverseSemigroup<M> const& isg, std::string_view src) {
  return detail::ExprParser<M>(isg, src).parse();
}

template <LcmMonoid M>
std::string print_value(InverseSemigroup<M> const& isg, Value<M> const& v) {
  if (auto const* t = std::get_if<Triple<element_t<M>>>(&v)) {
    return isg.to_string(*t);
  }
  return cs_to_string(isg.monoid(), std::get<ConstructibleSet<element_t<M>>>(v));
}

}  // namespace lcm
