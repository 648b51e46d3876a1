#pragma once

#include <map>
#include <string>

#include "qaffine/numeric.hpp"

namespace qaffine {

// Sparse Laurent polynomial in the variable v over Q(w).  The semantic
// variable is v = q^(1/2); exponents are v-exponents throughout.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long n) {
    if (n != 0) c_[0] = Cyclo(n);
  }
  Laurent(const Cyclo& c) {
    if (!c.zero()) c_[0] = c;
  }
  static Laurent vpow(int e, Cyclo c = Cyclo(1)) {
    Laurent p;
    if (!c.zero()) p.c_[e] = std::move(c);
    return p;
  }
  // q^e = v^(2e)
  static Laurent qpow(int e) { return vpow(2 * e); }

  bool zero() const { return c_.empty(); }
  bool isOne() const {
    return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second.isOne();
  }
  int lowDeg() const { return c_.begin()->first; }    // requires !zero()
  int highDeg() const { return c_.rbegin()->first; }  // requires !zero()
  const std::map<int, Cyclo>& terms() const { return c_; }
  std::size_t termCount() const { return c_.size(); }

  void add(int e, const Cyclo& c) {
    if (c.zero()) return;
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_[e] = c;
    } else {
      it->second += c;
      if (it->second.zero()) c_.erase(it);
    }
  }

  Laurent operator-() const {
    Laurent r;
    for (auto& [e, c] : c_) r.c_[e] = -c;
    return r;
  }
  Laurent& operator+=(const Laurent& o) {
    for (auto& [e, c] : o.c_) add(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (auto& [e, c] : o.c_) add(e, -c);
    return *this;
  }
  friend Laurent operator+(Laurent x, const Laurent& y) { return x += y; }
  friend Laurent operator-(Laurent x, const Laurent& y) { return x -= y; }
  friend Laurent operator*(const Laurent& x, const Laurent& y) {
    Laurent r;
    for (auto& [e1, c1] : x.c_)
      for (auto& [e2, c2] : y.c_) r.add(e1 + e2, c1 * c2);
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  Laurent scaled(const Cyclo& c) const {
    Laurent r;
    if (c.zero()) return r;
    for (auto& [e, cc] : c_) r.c_[e] = cc * c;
    return r;
  }
  Laurent shifted(int e) const {
    Laurent r;
    for (auto& [ee, c] : c_) r.c_[ee + e] = c;
    return r;
  }
  // v -> v^-1
  Laurent bar() const {
    Laurent r;
    for (auto& [e, c] : c_) r.c_[-e] = c;
    return r;
  }

  bool operator==(const Laurent& o) const { return c_ == o.c_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }
  // Deterministic total order (for canonical term ordering where needed).
  bool operator<(const Laurent& o) const;

  // Division with remainder on ordinary polynomials (both inputs must have
  // lowDeg() >= 0); quotient*den + rem == *this.
  static void divMod(const Laurent& num, const Laurent& den, Laurent& quo,
                     Laurent& rem);
  // Exact division; throws DomainError if not exact.
  Laurent divExact(const Laurent& den) const;
  // Monic gcd of the underlying ordinary polynomials (v-shifts ignored).
  static Laurent gcd(Laurent x, Laurent y);

  std::string str() const;

 private:
  std::map<int, Cyclo> c_;  // exponent -> coefficient, no zero entries
};

}  // namespace qaffine
