#pragma once

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hsos/core/error.hpp"
#include "hsos/core/polynomial.hpp"

namespace hsos {

namespace detail {

// Recursive-descent parser for
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := primary ('^' uint)?
//   primary:= int ('/' uint)? | 'i' | var | '(' expr ')'
// Whitespace is insignificant.
class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const RingContext& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty expression");
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      std::string digits = read_digits();
      if (digits.empty()) fail("expected a nonnegative integer exponent");
      if (digits.size() > 4) {
        pos_ = start;
        fail("exponent too large");
      }
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(read_digits());
      if (accept('/')) {
        skip_ws();
        std::string den = read_digits();
        if (den.empty()) fail("expected a denominator");
        Integer d(den);
        if (d == 0) fail("zero denominator");
        return Polynomial::constant(ring_, GaussRational(make_rational(num, d)));
      }
      return Polynomial::constant(ring_, GaussRational(Rational(num)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (name == "i") return Polynomial::constant(ring_, GaussRational::i());
      auto idx = ring_.index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown identifier '" + name + "'");
      }
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '(') {
        fail("variables take no arguments ('" + name + "' applied like a function)");
      }
      return Polynomial::variable(ring_, *idx);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const RingContext& ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, const RingContext& ring) {
  return detail::PolynomialParser(text, ring).parse();
}

/// Splits "[p1, p2, ...]" (brackets optional) at top-level commas.
inline std::vector<std::string> split_polynomial_list(std::string_view text) {
  std::string_view body = text;
  auto first = body.find_first_not_of(" \t\n\r");
  auto last = body.find_last_not_of(" \t\n\r");
  if (first == std::string_view::npos) return {};
  body = body.substr(first, last - first + 1);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw ParseError("unterminated list", body.size());
    body = body.substr(1, body.size() - 2);
  }
  std::vector<std::string> items;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= body.size(); ++k) {
    if (k == body.size() || (body[k] == ',' && depth == 0)) {
      std::string item(body.substr(start, k - start));
      if (item.find_first_not_of(" \t\n\r") == std::string::npos) {
        if (k == body.size() && items.empty()) break;
        throw ParseError("empty list item", k);
      }
      items.push_back(item);
      start = k + 1;
    } else if (body[k] == '(') {
      ++depth;
    } else if (body[k] == ')') {
      --depth;
    }
  }
  return items;
}

inline std::vector<Polynomial> parse_polynomial_list(std::string_view text,
                                                     const RingContext& ring) {
  std::vector<Polynomial> out;
  for (const auto& item : split_polynomial_list(text)) out.push_back(parse_polynomial(item, ring));
  return out;
}

/// Identifiers used in the given texts (excluding `i`), ordered by natural
/// sort so that z2 < z10.
inline std::vector<std::string> infer_variables(const std::vector<std::string>& texts) {
  std::set<std::string> names;
  for (const auto& t : texts) {
    for (std::size_t k = 0; k < t.size();) {
      unsigned char c = static_cast<unsigned char>(t[k]);
      if (std::isalpha(c) || c == '_') {
        std::size_t start = k;
        while (k < t.size() &&
               (std::isalnum(static_cast<unsigned char>(t[k])) || t[k] == '_')) {
          ++k;
        }
        std::string name = t.substr(start, k - start);
        if (name != "i") names.insert(name);
      } else if (std::isdigit(c)) {
        while (k < t.size() && std::isalnum(static_cast<unsigned char>(t[k]))) ++k;
      } else {
        ++k;
      }
    }
  }
  std::vector<std::string> out(names.begin(), names.end());
  auto split = [](const std::string& s) {
    std::size_t k = s.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
    return std::pair<std::string, std::string>(s.substr(0, k), s.substr(k));
  };
  std::sort(out.begin(), out.end(), [&](const std::string& a, const std::string& b) {
    auto [pa, na] = split(a);
    auto [pb, nb] = split(b);
    if (pa != pb) return pa < pb;
    if (na.size() != nb.size()) return na.size() < nb.size();
    return na < nb;
  });
  return out;
}

}  // namespace hsos
