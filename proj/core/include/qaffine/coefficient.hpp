#pragma once

#include <string>

#include "qaffine/laurent.hpp"

namespace qaffine {

// Exact rational function num/den over Q(w)[v, v^-1], kept in canonical form:
//  * den has v-valuation 0 and lowest coefficient 1,
//  * num and den share no polynomial factor.
// Values are immutable in spirit: all arithmetic returns fresh canonical
// values, so they can be shared freely between verification workers.
class Coeff {
 public:
  Coeff() : num_(), den_(1) {}
  Coeff(long n) : num_(n), den_(1) {}
  Coeff(const Cyclo& c) : num_(c), den_(1) {}
  Coeff(Laurent n) : num_(std::move(n)), den_(1) {}
  Coeff(Laurent n, Laurent d) : num_(std::move(n)), den_(std::move(d)) {
    normalize();
  }

  static Coeff qpow(int e) { return Coeff(Laurent::qpow(e)); }
  static Coeff vpow(int e) { return Coeff(Laurent::vpow(e)); }
  static Coeff omega() { return Coeff(Cyclo::omega()); }
  static Coeff rational(long num, long den);

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool zero() const { return num_.zero(); }
  bool isOne() const { return num_.isOne() && den_.isOne(); }
  bool polynomial() const { return den_.isOne(); }

  Coeff operator-() const { return Coeff(unsafeTag{}, -num_, den_); }
  friend Coeff operator+(const Coeff& x, const Coeff& y);
  friend Coeff operator-(const Coeff& x, const Coeff& y);
  friend Coeff operator*(const Coeff& x, const Coeff& y);
  friend Coeff operator/(const Coeff& x, const Coeff& y);
  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }
  Coeff& operator/=(const Coeff& o) { return *this = *this / o; }
  Coeff inverse() const;
  Coeff pow(int k) const;

  // The scalar part of the antiautomorphisms Phi and Omega: v -> v^-1,
  // w held fixed.
  Coeff bar() const { return Coeff(num_.bar(), den_.bar()); }

  bool operator==(const Coeff& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Coeff& o) const { return !(*this == o); }
  bool operator<(const Coeff& o) const {
    if (!(den_ == o.den_)) return den_ < o.den_;
    return num_ < o.num_;
  }

  std::string str() const;

 private:
  struct unsafeTag {};
  Coeff(unsafeTag, Laurent n, Laurent d)
      : num_(std::move(n)), den_(std::move(d)) {}
  void normalize();

  Laurent num_, den_;
};

// q-combinatorics.  The symmetrizer d is passed as its doubled value d2 = 2d,
// so q_i = q^d = v^d2.
Coeff qint(int n, int d2);
Coeff qfactorial(int n, int d2);
Coeff qbinomial(int m, int s, int d2);

}  // namespace qaffine
