#include "ybx/polynomial.hpp"

#include <sstream>

namespace ybx {

namespace {
const Rat kZero(0);
}

Polynomial::Polynomial(Rat constant) {
  if (!ybx::is_zero(constant)) c_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::variable() { return Polynomial(std::vector<Rat>{Rat(0), Rat(1)}); }

void Polynomial::trim() {
  while (!c_.empty() && ybx::is_zero(c_.back())) c_.pop_back();
}

const Rat& Polynomial::coeff(size_t k) const { return k < c_.size() ? c_[k] : kZero; }

const Rat& Polynomial::leading() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t k = 0; k < r.size(); ++k) r[k] = coeff(k) + o.coeff(k);
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t k = 0; k < r.size(); ++k) r[k] = coeff(k) - o.coeff(k);
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t a = 0; a < c_.size(); ++a) {
    if (ybx::is_zero(c_[a])) continue;
    for (size_t b = 0; b < o.c_.size(); ++b) r[a + b] += c_[a] * o.c_[b];
  }
  return Polynomial(std::move(r));
}

Polynomial Polynomial::scaled(const Rat& s) const {
  if (ybx::is_zero(s)) return Polynomial();
  Polynomial r(*this);
  for (auto& x : r.c_) x *= s;
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return Polynomial();
  return scaled(Rat(1 / leading()));
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& quot, Polynomial& rem) {
  if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  std::vector<Rat> r = a.c_;
  int db = b.degree();
  std::vector<Rat> q(a.degree() >= db ? a.degree() - db + 1 : 0, Rat(0));
  for (int k = a.degree(); k >= db; --k) {
    if (ybx::is_zero(r[k])) continue;
    Rat f(r[k] / b.leading());
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.c_[j];
  }
  quot = Polynomial(std::move(q));
  rem = Polynomial(std::move(r));
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    Polynomial q, r;
    divmod(x, y, q, r);
    x = y;
    y = r.monic();
  }
  return x;
}

Rat Polynomial::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t k = c_.size(); k-- > 0;) {
    if (ybx::is_zero(c_[k])) continue;
    Rat c = c_[k];
    if (first) {
      if (sgn(c) < 0) {
        out << "-";
        c = -c;
      }
      first = false;
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    bool unit_coeff = (c == 1) && k > 0;
    if (!unit_coeff) out << c.get_str();
    if (k > 0) {
      if (!unit_coeff) out << "*";
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

}  // namespace ybx
