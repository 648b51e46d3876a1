#include "qaffine/coefficient.hpp"

namespace qaffine {

Coeff Coeff::rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  return Coeff(Cyclo(mpq_class(num, den)));
}

void Coeff::normalize() {
  if (den_.zero()) throw DomainError("coefficient with zero denominator");
  if (num_.zero()) {
    den_ = Laurent(1);
    return;
  }
  if (!den_.isOne()) {
    Laurent g = Laurent::gcd(num_, den_);
    if (!g.isOne()) {
      num_ = num_.divExact(g);
      den_ = den_.divExact(g);
    }
  }
  // den: valuation 0, lowest coefficient 1
  int sd = den_.lowDeg();
  Cyclo low = den_.terms().begin()->second;
  if (sd != 0) den_ = den_.shifted(-sd);
  num_ = num_.shifted(-sd);
  if (!low.isOne()) {
    Cyclo inv = low.inverse();
    den_ = den_.scaled(inv);
    num_ = num_.scaled(inv);
  }
}

Coeff operator+(const Coeff& x, const Coeff& y) {
  if (x.zero()) return y;
  if (y.zero()) return x;
  if (x.den_ == y.den_) return Coeff(x.num_ + y.num_, x.den_);
  return Coeff(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

Coeff operator-(const Coeff& x, const Coeff& y) {
  if (y.zero()) return x;
  if (x.zero()) return -y;
  if (x.den_ == y.den_) return Coeff(x.num_ - y.num_, x.den_);
  return Coeff(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}

Coeff operator*(const Coeff& x, const Coeff& y) {
  if (x.zero() || y.zero()) return Coeff();
  if (x.den_.isOne() && y.den_.isOne()) return Coeff(x.num_ * y.num_);
  return Coeff(x.num_ * y.num_, x.den_ * y.den_);
}

Coeff operator/(const Coeff& x, const Coeff& y) { return x * y.inverse(); }

Coeff Coeff::inverse() const {
  if (zero()) throw DomainError("division by zero coefficient");
  return Coeff(den_, num_);
}

Coeff Coeff::pow(int k) const {
  if (k == 0) return Coeff(1);
  Coeff base = k > 0 ? *this : inverse();
  int n = k > 0 ? k : -k;
  Coeff r(1);
  while (n > 0) {
    if (n & 1) r *= base;
    base = (n >>= 1) ? base * base : base;
  }
  return r;
}

std::string Coeff::str() const {
  if (zero()) return "0";
  if (den_.isOne()) return num_.str();
  std::string s;
  if (!num_.isOne()) s = "(" + num_.str() + ") ";
  return s + "(" + den_.str() + ")^-1";
}

Coeff qint(int n, int d2) {
  if (d2 == 0) throw DomainError("q-integer with zero symmetrizer");
  if (n < 0) return -qint(-n, d2);
  Laurent p;
  for (int k = 0; k < n; ++k) p.add(d2 * (n - 1 - 2 * k), Cyclo(1));
  return Coeff(std::move(p));
}

Coeff qfactorial(int n, int d2) {
  if (n < 0) throw DomainError("q-factorial of negative integer");
  Coeff r(1);
  for (int k = 1; k <= n; ++k) r *= qint(k, d2);
  return r;
}

Coeff qbinomial(int m, int s, int d2) {
  if (s < 0 || s > m) throw DomainError("q-binomial index out of range");
  Coeff r = qfactorial(m, d2) / (qfactorial(s, d2) * qfactorial(m - s, d2));
  if (!r.polynomial()) throw DomainError("q-binomial division not exact");
  return r;
}

}  // namespace qaffine
