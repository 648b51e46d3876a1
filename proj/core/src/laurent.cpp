#include "qaffine/laurent.hpp"

namespace qaffine {

bool Laurent::operator<(const Laurent& o) const {
  auto it1 = c_.begin(), it2 = o.c_.begin();
  for (; it1 != c_.end() && it2 != o.c_.end(); ++it1, ++it2) {
    if (it1->first != it2->first) return it1->first < it2->first;
    if (!(it1->second == it2->second)) return it1->second < it2->second;
  }
  return it1 == c_.end() && it2 != o.c_.end();
}

void Laurent::divMod(const Laurent& num, const Laurent& den, Laurent& quo,
                     Laurent& rem) {
  if (den.zero()) throw DomainError("polynomial division by zero");
  quo = Laurent();
  rem = num;
  int dd = den.highDeg();
  Cyclo dlInv = den.c_.rbegin()->second.inverse();
  while (!rem.zero() && rem.highDeg() >= dd) {
    int e = rem.highDeg() - dd;
    Cyclo c = rem.c_.rbegin()->second * dlInv;
    quo.add(e, c);
    rem -= den.shifted(e).scaled(c);
  }
}

Laurent Laurent::divExact(const Laurent& den) const {
  if (zero()) return Laurent();
  int sn = lowDeg(), sd = den.lowDeg();
  Laurent quo, rem;
  divMod(shifted(-sn), den.shifted(-sd), quo, rem);
  if (!rem.zero()) throw DomainError("inexact polynomial division");
  return quo.shifted(sn - sd);
}

Laurent Laurent::gcd(Laurent x, Laurent y) {
  if (x.zero() && y.zero()) return Laurent();
  if (!x.zero()) x = x.shifted(-x.lowDeg());
  if (!y.zero()) y = y.shifted(-y.lowDeg());
  while (!y.zero()) {
    Laurent quo, rem;
    divMod(x, y, quo, rem);
    x = y;
    y = rem;
    if (!y.zero()) y = y.shifted(-y.lowDeg());
  }
  // normalize monic
  return x.scaled(x.c_.rbegin()->second.inverse());
}

namespace {

// One Laurent term in the canonical text grammar.  Exponents of q are
// preferred; v appears only for odd v-exponents.
std::string termStr(int e, const Cyclo& c, bool leading) {
  std::string coef;
  bool negated = false;
  Cyclo cc = c;
  if (cc.isRational() && cmp(cc.ratPart(), 0) < 0) {
    negated = true;
    cc = -cc;
  }
  std::string pw;
  if (e != 0) {
    if (e % 2 == 0) {
      pw = (e == 2) ? "q" : "q^" + std::to_string(e / 2);
    } else {
      pw = (e == 1) ? "v" : "v^" + std::to_string(e);
    }
  }
  if (cc.isOne() && !pw.empty()) {
    coef = "";
  } else if (cc.isRational()) {
    coef = cc.ratPart().get_str();
  } else if (cc.omegaPart() != 0 && cc.ratPart() == 0 && cc.omegaPart() == 1) {
    coef = "w";
  } else {
    coef = "(" + cc.str() + ")";
  }
  std::string body = coef;
  if (!pw.empty()) {
    if (!body.empty()) body += " ";
    body += pw;
  }
  if (leading) return negated ? "-" + body : body;
  return (negated ? " - " : " + ") + body;
}

}  // namespace

std::string Laurent::str() const {
  if (zero()) return "0";
  std::string s;
  bool leading = true;
  // decreasing exponents
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    s += termStr(it->first, it->second, leading);
    leading = false;
  }
  return s;
}

}  // namespace qaffine
