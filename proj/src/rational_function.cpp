#include "ybx/rational_function.hpp"

namespace ybx {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  Polynomial g = Polynomial::gcd(num_, den_);
  if (g.degree() > 0) {
    Polynomial q, r;
    Polynomial::divmod(num_, g, q, r);
    num_ = q;
    Polynomial::divmod(den_, g, q, r);
    den_ = q;
  }
  // normalize: monic denominator
  Rat lead = den_.leading();
  if (!is_one(lead)) {
    Rat inv_lead(1 / lead);
    num_ = num_.scaled(inv_lead);
    den_ = den_.scaled(inv_lead);
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (is_zero() || o.is_zero()) return RationalFunction();
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction inverse(const RationalFunction& x) {
  if (x.is_zero()) throw DivisionByZeroError("inverse of 0 in Q(q)");
  return RationalFunction(x.den(), x.num());
}

Rat RationalFunction::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (ybx::is_zero(d)) throw DivisionByZeroError("rational function evaluated at a pole");
  return Rat(num_.eval(x) / d);
}

std::string RationalFunction::str(const std::string& var) const {
  if (den_.degree() == 0 && is_one(den_.coeff(0))) return num_.str(var);
  std::string n = num_.str(var);
  std::string d = den_.str(var);
  if (num_.degree() > 0) n = "(" + n + ")";
  if (den_.degree() > 0) d = "(" + d + ")";
  return n + "/" + d;
}

std::string to_string(const RationalFunction& x) { return x.str(); }

}  // namespace ybx
