#pragma once

#include <string>

#include "ybx/field.hpp"

namespace ybx {

/// Gaussian rationals Q(i): pairs a + b*i with exact rational a, b.
/// Covers the roots of unity of order dividing 4 needed for color functions.
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(int n) : re_(n) {}  // NOLINT: implicit from small ints is intended
  explicit Gaussian(Rat re) : re_(std::move(re)) {}
  Gaussian(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

  static Gaussian i() { return Gaussian(Rat(0), Rat(1)); }

  const Rat& re() const { return re_; }
  const Rat& im() const { return im_; }

  bool operator==(const Gaussian& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const Gaussian& o) const { return !(*this == o); }

  Gaussian operator-() const { return Gaussian(Rat(-re_), Rat(-im_)); }
  Gaussian operator+(const Gaussian& o) const { return Gaussian(Rat(re_ + o.re_), Rat(im_ + o.im_)); }
  Gaussian operator-(const Gaussian& o) const { return Gaussian(Rat(re_ - o.re_), Rat(im_ - o.im_)); }
  Gaussian operator*(const Gaussian& o) const {
    return Gaussian(Rat(re_ * o.re_ - im_ * o.im_), Rat(re_ * o.im_ + im_ * o.re_));
  }
  Gaussian& operator+=(const Gaussian& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }

  Rat norm() const { return Rat(re_ * re_ + im_ * im_); }

 private:
  Rat re_{0};
  Rat im_{0};
};

inline bool is_zero(const Gaussian& x) { return is_zero(x.re()) && is_zero(x.im()); }
inline bool is_one(const Gaussian& x) { return is_one(x.re()) && is_zero(x.im()); }

inline Gaussian inverse(const Gaussian& x) {
  if (is_zero(x)) throw DivisionByZeroError("inverse of 0 in Q(i)");
  Rat n = x.norm();
  return Gaussian(Rat(x.re() / n), Rat(-x.im() / n));
}

inline Gaussian operator/(const Gaussian& a, const Gaussian& b) { return a * inverse(b); }

inline long complexity(const Gaussian& x) { return complexity(x.re()) + complexity(x.im()); }

std::string to_string(const Gaussian& x);

template <>
struct FieldInfo<Gaussian> {
  static constexpr FieldTag tag = FieldTag::Qi;
};

}  // namespace ybx
