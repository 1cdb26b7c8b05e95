#pragma once

#include <cctype>
#include <string>

#include "ybx/gaussian.hpp"
#include "ybx/rational_function.hpp"

namespace ybx {

// Scalar expression parsing for CLI and JSON inputs. Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('-'|'+') factor | atom ('^' uint)?
//   atom   := integer | 'q' | 'i' | '(' expr ')'
// 'q' is only valid in Q(q), 'i' only in Q(i).

template <class F>
struct ScalarSymbols {
  static bool variable(F&) { return false; }
  static bool imaginary(F&) { return false; }
};

template <>
struct ScalarSymbols<RationalFunction> {
  static bool variable(RationalFunction& out) {
    out = RationalFunction::variable();
    return true;
  }
  static bool imaginary(RationalFunction&) { return false; }
};

template <>
struct ScalarSymbols<Gaussian> {
  static bool variable(Gaussian&) { return false; }
  static bool imaginary(Gaussian& out) {
    out = Gaussian::i();
    return true;
  }
};

namespace scalar_detail {

template <class F>
class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  F parse() {
    F v = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ValidationError("trailing characters in scalar: " + s_);
    return v;
  }

 private:
  F expr() {
    F v = term();
    for (;;) {
      skip_ws();
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }

  F term() {
    F v = factor();
    for (;;) {
      skip_ws();
      if (eat('*')) {
        v = v * factor();
      } else if (eat('/')) {
        F d = factor();
        if (is_zero(d)) throw DivisionByZeroError("division by zero in scalar: " + s_);
        v = v * inverse(d);
      } else {
        return v;
      }
    }
  }

  F factor() {
    skip_ws();
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    F v = atom();
    skip_ws();
    if (eat('^')) {
      skip_ws();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) throw ValidationError("exponent expected in scalar: " + s_);
      unsigned long e = std::stoul(s_.substr(start, pos_ - start));
      F r(1);
      for (unsigned long k = 0; k < e; ++k) r = r * v;
      return r;
    }
    return v;
  }

  F atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw ValidationError("unexpected end of scalar: " + s_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      F v = expr();
      skip_ws();
      if (!eat(')')) throw ValidationError("missing ')' in scalar: " + s_);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return F(Rat(mpz_class(s_.substr(start, pos_ - start)), 1));
    }
    if (c == 'q') {
      F v;
      if (!ScalarSymbols<F>::variable(v))
        throw ValidationError("'q' is only valid in the Qq field: " + s_);
      ++pos_;
      return v;
    }
    if (c == 'i') {
      F v;
      if (!ScalarSymbols<F>::imaginary(v))
        throw ValidationError("'i' is only valid in the Qi field: " + s_);
      ++pos_;
      return v;
    }
    throw ValidationError(std::string("unexpected character '") + c + "' in scalar: " + s_);
  }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace scalar_detail

template <class F>
F scalar_parse(const std::string& s) {
  return scalar_detail::Parser<F>(s).parse();
}

}  // namespace ybx
