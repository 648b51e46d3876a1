#pragma once

#include <string>

#include "qaffine/drinfeld.hpp"

namespace qaffine {

struct ParseError : std::runtime_error {
  std::size_t column;
  std::string expected;
  ParseError(std::size_t col, const std::string& what, const std::string& exp)
      : std::runtime_error("parse error at column " + std::to_string(col + 1) +
                           ": " + what +
                           (exp.empty() ? "" : " (expected " + exp + ")")),
        column(col),
        expected(exp) {}
};

// Canonical text renderings.  Node indices in the text are diagram labels.
std::string render(const CartanData& cd, const Coeff& c);
std::string render(const CartanData& cd, const Element& x);

// Expression grammar over atoms E<i>, F<i>, K<i>^<exp>, g, x+(i,k), x-(i,k),
// a(i,k), scalar literals in the coefficient grammar, products by
// juxtaposition (or '.'), '+'/'-', brackets [A,B]_u, and prefix operators
// Ti, Ti^-1, Tw(i)^k, tau, Phi, Omega applied with parentheses.
class ExprParser {
 public:
  // dr may be null: the loop atoms and braid prefixes then raise ParseError.
  ExprParser(Alg& alg, Braid* br, Drinfeld* dr)
      : alg_(&alg), br_(br), dr_(kindOf(dr)) {}

  Element parseElement(const std::string& text) const;
  Coeff parseCoeff(const std::string& text) const;
  // Operator mini-language: `T1 T0^-1 Tw(2)^-3 tau Phi Omega`, composed
  // left-to-right (leftmost outermost).  Phi/Omega are allowed as atoms.
  struct OpAtom {
    enum Kind { T, Tinv, TomegaPow, TauK, PhiK, OmegaK } kind;
    int node = -1;
    int power = 1;
  };
  std::vector<OpAtom> parseOps(const std::string& text) const;
  Element applyOps(const std::vector<OpAtom>& ops, Element x) const;

  // Weyl element grammar: `s0 s1 w(2) tau`, composed left-to-right.
  WeylElt parseWeyl(const std::string& text) const;

 private:
  static Drinfeld* kindOf(Drinfeld* d) { return d; }
  Alg* alg_;
  Braid* br_;
  Drinfeld* dr_;
};

}  // namespace qaffine
