#include "ybx/field.hpp"

#include <cctype>

#include "ybx/gaussian.hpp"

namespace ybx {

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw ValidationError("empty rational literal");
  size_t i = 0;
  auto parse_int = [&](const char* what) {
    size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
    if (digits == 0) throw ValidationError(std::string("bad ") + what + " in rational literal: " + s);
    return s.substr(start, i - start);
  };
  std::string num = parse_int("numerator");
  std::string den = "1";
  if (i < s.size() && s[i] == '/') {
    ++i;
    den = parse_int("denominator");
  }
  if (i != s.size()) throw ValidationError("trailing characters in rational literal: " + s);
  mpz_class d(den);
  if (sgn(d) == 0) throw ValidationError("zero denominator in rational literal: " + s);
  Rat r(mpz_class(num), d);
  r.canonicalize();
  return r;
}

std::string field_tag_name(FieldTag t) {
  switch (t) {
    case FieldTag::Q:
      return "Q";
    case FieldTag::Qi:
      return "Qi";
    case FieldTag::Qq:
      return "Qq";
  }
  return "?";
}

FieldTag field_tag_from_name(const std::string& name) {
  if (name == "Q") return FieldTag::Q;
  if (name == "Qi") return FieldTag::Qi;
  if (name == "Qq") return FieldTag::Qq;
  throw ValidationError("unknown field tag: " + name);
}

std::string to_string(const Gaussian& x) {
  if (is_zero(x.im())) return x.re().get_str();
  std::string im = x.im().get_str() + "i";
  if (is_zero(x.re())) return im;
  if (sgn(x.im()) >= 0) return x.re().get_str() + "+" + im;
  return x.re().get_str() + im;  // sign carried by the imaginary part
}

}  // namespace ybx
