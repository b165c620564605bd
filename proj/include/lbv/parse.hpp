#pragma once

// Recursive-descent parser for the cochain expression grammar:
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := atom ['^' ['-'] integer]
//   atom    := rational | 'hbar' | 'alpha' | 'delta[' int ']' | 'bdelta[' int ']' | '(' expr ')'
//
// Rationals are `p`, `p/q` or decimals. Negative exponents are allowed on
// invertible scalars only (alpha^-1). Whitespace is insignificant.

#include <lbv/cochain.hpp>
#include <lbv/scalar.hpp>

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lbv {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

class CochainParser {
 public:
  explicit CochainParser(std::string_view text) : text_(text) {}

  Cochain parseAll() {
    skipSpace();
    if (atEnd()) throw ParseError("empty expression", pos_);
    Cochain c = expr();
    skipSpace();
    if (!atEnd()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return c;
  }

 private:
  bool atEnd() const { return pos_ >= text_.size(); }
  char peek() const { return atEnd() ? '\0' : text_[pos_]; }
  void skipSpace() {
    while (!atEnd() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char ch) {
    skipSpace();
    if (peek() != ch) return false;
    ++pos_;
    return true;
  }
  void expect(char ch) {
    if (!accept(ch)) {
      if (atEnd()) throw ParseError(std::string("expected '") + ch + "' but input ended", pos_);
      throw ParseError(std::string("expected '") + ch + "' but found '" + peek() + "'", pos_);
    }
  }

  Cochain expr() {
    Cochain r;
    skipSpace();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    r = term();
    if (negate) r = -r;
    while (true) {
      skipSpace();
      if (peek() == '+') {
        ++pos_;
        r += term();
      } else if (peek() == '-') {
        ++pos_;
        r -= term();
      } else {
        return r;
      }
    }
  }

  Cochain term() {
    Cochain r = unary();
    while (accept('*')) r = multiply(r, unary());
    return r;
  }

  Cochain unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Cochain power() {
    Cochain base = atom();
    if (!accept('^')) return base;
    skipSpace();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    std::size_t expPos = pos_;
    int e = integer();
    if (negative) e = -e;
    if (e >= 0) {
      Cochain r(1);
      for (int i = 0; i < e; ++i) r = multiply(r, base);
      return r;
    }
    if (base.size() == 1 && base.terms().begin()->first.isOne()) {
      const Scalar& s = base.terms().begin()->second;
      if (s.isUnit()) return Cochain(s.pow(e));
    }
    throw ParseError("negative exponent of a non-invertible expression", expPos);
  }

  Cochain atom() {
    skipSpace();
    std::size_t start = pos_;
    if (atEnd()) throw ParseError("unexpected end of input", pos_);
    char ch = peek();
    if (ch == '(') {
      ++pos_;
      Cochain r = expr();
      expect(')');
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') return Cochain(Scalar(rational()));
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::string word;
      while (!atEnd() && std::isalpha(static_cast<unsigned char>(peek()))) word += text_[pos_++];
      if (word == "hbar") return Cochain(Scalar::hbar());
      if (word == "alpha") return Cochain(Scalar::alpha());
      if (word == "delta" || word == "bdelta") {
        expect('[');
        skipSpace();
        bool negative = false;
        if (peek() == '-') {
          negative = true;
          ++pos_;
        }
        int site = integer();
        expect(']');
        if (negative) site = -site;
        return word == "delta" ? Cochain::delta(site) : Cochain::bdelta(site);
      }
      throw ParseError("unknown token '" + word + "'", start);
    }
    throw ParseError(std::string("unexpected '") + ch + "'", start);
  }

  int integer() {
    skipSpace();
    std::size_t start = pos_;
    while (!atEnd() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer", start);
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 9) throw ParseError("integer out of range", start);
    return std::stoi(digits);
  }

  Rational rational() {
    std::size_t start = pos_;
    auto digits = [&] {
      while (!atEnd() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    };
    digits();
    if (peek() == '.') {
      ++pos_;
      digits();
    } else if (peek() == '/') {
      ++pos_;
      std::size_t den = pos_;
      digits();
      if (den == pos_) throw ParseError("expected a denominator", den);
    }
    try {
      return parseRational(text_.substr(start, pos_ - start));
    } catch (const std::exception& e) {
      throw ParseError(e.what(), start);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Cochain parseCochain(std::string_view text) { return detail::CochainParser(text).parseAll(); }

/// Parses an expression that must be a scalar (no generators).
inline Scalar parseScalar(std::string_view text) {
  Cochain c = parseCochain(text);
  if (c.isZero()) return Scalar();
  if (c.size() != 1 || !c.terms().begin()->first.isOne())
    throw ParseError("expected a scalar expression, got " + c.str(), 0);
  return c.terms().begin()->second;
}

}  // namespace lbv
