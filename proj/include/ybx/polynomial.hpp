#pragma once

#include <string>
#include <vector>

#include "ybx/field.hpp"

namespace ybx {

/// Univariate polynomial over Q, coefficients stored lowest-degree-first.
/// Canonical form: no trailing zero coefficients; the zero polynomial has an
/// empty coefficient vector (degree() == -1).
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int n) { *this = Polynomial(Rat(n)); }  // NOLINT
  explicit Polynomial(Rat constant);
  explicit Polynomial(std::vector<Rat> coeffs);

  /// The formal variable q.
  static Polynomial variable();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  /// Coefficient of q^k (zero beyond the degree).
  const Rat& coeff(size_t k) const;
  const Rat& leading() const;
  const std::vector<Rat>& coeffs() const { return c_; }

  bool operator==(const Polynomial& o) const { return c_ == o.c_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Rat& s) const;

  /// Monic associate (leading coefficient 1); zero stays zero.
  Polynomial monic() const;

  /// Euclidean division: a = q*b + r with deg r < deg b. Throws on b = 0.
  static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& quot, Polynomial& rem);

  /// Monic gcd; gcd(0,0) = 0.
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  Rat eval(const Rat& x) const;

  std::string str(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

}  // namespace ybx
