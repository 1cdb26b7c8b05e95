#pragma once

#include <string>

#include "ybx/polynomial.hpp"

namespace ybx {

/// The field Q(q): ratios of polynomials, kept reduced (gcd(num, den) = 1)
/// with a monic denominator. Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(int n) : num_(n), den_(1) {}  // NOLINT
  explicit RationalFunction(Rat c) : num_(std::move(c)), den_(1) {}
  explicit RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) {}
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  /// Evaluation at a rational point; throws DivisionByZeroError at a pole.
  Rat eval(const Rat& x) const;

  std::string str(const std::string& var = "q") const;

 private:
  void reduce();
  Polynomial num_;
  Polynomial den_;
};

inline bool is_zero(const RationalFunction& x) { return x.is_zero(); }
inline bool is_one(const RationalFunction& x) {
  return x.num().degree() == 0 && x.den().degree() == 0 && is_one(x.num().coeff(0));
}

RationalFunction inverse(const RationalFunction& x);

inline RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return a * inverse(b);
}

inline long complexity(const RationalFunction& x) { return x.num().degree() + x.den().degree() + 2; }

std::string to_string(const RationalFunction& x);

template <>
struct FieldInfo<RationalFunction> {
  static constexpr FieldTag tag = FieldTag::Qq;
};

}  // namespace ybx
