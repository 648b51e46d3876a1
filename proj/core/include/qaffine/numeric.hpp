#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qaffine {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A structural invariant of the input data failed (e.g. a matrix that is not
// an extended-Weyl-group element, or corrupted Cartan data).
struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a reduction would need the rewrite system to be completed past
// the configured degree budget; carries the degree that would be required.
struct BudgetError : std::runtime_error {
  int needed;
  explicit BudgetError(int needed_degree)
      : std::runtime_error("degree budget exceeded: completion to degree " +
                           std::to_string(needed_degree) + " required"),
        needed(needed_degree) {}
};

// Element of Q(w) where w is a primitive cube root of unity, w^2 = -1 - w.
// Twist orders 1 and 2 only ever populate the rational part; w = -1 for
// order 2 is folded into the rationals by the caller.
class Cyclo {
 public:
  Cyclo() : a_(0), b_(0) {}
  Cyclo(long n) : a_(n), b_(0) {}
  Cyclo(const mpq_class& a) : a_(a), b_(0) {}
  Cyclo(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {}

  static Cyclo omega() { return Cyclo(mpq_class(0), mpq_class(1)); }
  // w^k for k in Z (period 3): 1, w, -1-w.
  static Cyclo omegaPow(long k);

  const mpq_class& ratPart() const { return a_; }
  const mpq_class& omegaPart() const { return b_; }

  bool zero() const { return a_ == 0 && b_ == 0; }
  bool isRational() const { return b_ == 0; }
  bool isOne() const { return b_ == 0 && a_ == 1; }

  Cyclo operator-() const { return Cyclo(-a_, -b_); }
  Cyclo& operator+=(const Cyclo& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  Cyclo& operator-=(const Cyclo& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  friend Cyclo operator+(Cyclo x, const Cyclo& y) { return x += y; }
  friend Cyclo operator-(Cyclo x, const Cyclo& y) { return x -= y; }
  // (a+bw)(c+dw) = (ac - bd) + (ad + bc - bd) w
  friend Cyclo operator*(const Cyclo& x, const Cyclo& y) {
    if (x.b_ == 0 && y.b_ == 0) return Cyclo(mpq_class(x.a_ * y.a_));
    mpq_class bd = x.b_ * y.b_;
    return Cyclo(mpq_class(x.a_ * y.a_ - bd),
                 mpq_class(x.a_ * y.b_ + x.b_ * y.a_ - bd));
  }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

  // 1/(a+bw) = (a - b - bw)/(a^2 - ab + b^2)
  Cyclo inverse() const {
    if (zero()) throw DomainError("division by zero in Q(w)");
    if (b_ == 0) return Cyclo(mpq_class(1 / a_));
    mpq_class n = a_ * a_ - a_ * b_ + b_ * b_;
    return Cyclo(mpq_class((a_ - b_) / n), mpq_class(-b_ / n));
  }
  friend Cyclo operator/(const Cyclo& x, const Cyclo& y) {
    return x * y.inverse();
  }

  bool operator==(const Cyclo& o) const { return a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const Cyclo& o) const { return !(*this == o); }
  // Total order used only for canonical printing / map keys.
  bool operator<(const Cyclo& o) const {
    int c = cmp(a_, o.a_);
    if (c != 0) return c < 0;
    return cmp(b_, o.b_) < 0;
  }

  std::string str() const;

 private:
  mpq_class a_, b_;
};

inline Cyclo Cyclo::omegaPow(long k) {
  long m = ((k % 3) + 3) % 3;
  if (m == 0) return Cyclo(1);
  if (m == 1) return omega();
  return Cyclo(mpq_class(-1), mpq_class(-1));
}

inline std::string Cyclo::str() const {
  if (zero()) return "0";
  if (b_ == 0) return a_.get_str();
  std::string wpart;
  if (b_ == 1)
    wpart = "w";
  else if (b_ == -1)
    wpart = "-w";
  else
    wpart = b_.get_str() + "w";
  if (a_ == 0) return wpart;
  std::string s = a_.get_str();
  if (wpart[0] != '-') s += "+";
  return s + wpart;
}

}  // namespace qaffine
