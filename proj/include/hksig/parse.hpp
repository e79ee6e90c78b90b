#ifndef HKSIG_PARSE_HPP
#define HKSIG_PARSE_HPP

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hksig/errors.hpp"
#include "hksig/polynomial.hpp"

namespace hksig {

// Recursive-descent parser for polynomial expressions:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := nat | var | '(' expr ')' | ('+' | '-') base
//
// Multiplication is explicit ('a*c', not 'ac'), whitespace is free, and
// integer literals of any length reduce mod p. Errors carry a 1-based
// character position.
namespace detail {

class PolyParser {
 public:
  PolyParser(RingPtr ring, std::string_view text)
      : ring_(std::move(ring)), text_(text), pos_(0) {}

  Polynomial run() {
    Polynomial f = parse_expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'",
                       pos_ + 1);
    return f;
  }

 private:
  RingPtr ring_;
  std::string_view text_;
  std::size_t pos_;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial parse_expr() {
    Polynomial acc = parse_term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc = poly_add(acc, parse_term());
      } else if (c == '-') {
        ++pos_;
        acc = poly_sub(acc, parse_term());
      } else {
        return acc;
      }
    }
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    while (peek() == '*') {
      ++pos_;
      acc = poly_mul(acc, parse_factor());
    }
    return acc;
  }

  Polynomial parse_factor() {
    Polynomial base = parse_base();
    if (peek() == '^') {
      ++pos_;
      std::size_t at = pos_;
      std::uint64_t e = parse_nat();
      if (e > kMaxExponent) throw ParseError("exponent too large", at + 1);
      base = poly_pow(base, e);
    }
    return base;
  }

  Polynomial parse_base() {
    char c = peek();
    if (c == '\0') throw ParseError("unexpected end of input", text_.size() + 1);
    if (c == '+') {
      ++pos_;
      return parse_base();
    }
    if (c == '-') {
      ++pos_;
      return poly_neg(parse_base());
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = parse_expr();
      if (peek() != ')') throw ParseError("expected ')'", pos_ + 1);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint32_t p = ring_->field.modulus();
      std::uint64_t r = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        r = (r * 10 + static_cast<std::uint64_t>(text_[pos_] - '0')) % p;
        ++pos_;
      }
      return poly_constant(ring_, static_cast<std::int64_t>(r));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t at = pos_;
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        name.push_back(text_[pos_++]);
      for (std::size_t i = 0; i < ring_->nvars(); ++i)
        if (ring_->vars[i] == name) return poly_variable(ring_, i);
      throw ParseError("unknown variable '" + name + "'", at + 1);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_ + 1);
  }

  std::uint64_t parse_nat() {
    char c = peek();
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("expected a number", pos_ + 1);
    std::uint64_t r = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (r > (UINT64_MAX - 9) / 10) throw ParseError("number too large", pos_ + 1);
      r = r * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    return r;
  }
};

}  // namespace detail

inline Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  return detail::PolyParser(ring, text).run();
}

inline std::vector<Polynomial> parse_polynomials(const RingPtr& ring,
                                                 const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_polynomial(ring, t));
  return out;
}

}  // namespace hksig

#endif
