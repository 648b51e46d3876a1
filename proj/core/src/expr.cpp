#include "qaffine/expr.hpp"

#include <cctype>
#include <functional>

namespace qaffine {

// ---------------------------------------------------------------------------
// rendering

std::string render(const CartanData& cd, const Coeff& c) {
  (void)cd;
  return c.str();
}

namespace {

std::string halfExpStr(int e2) {
  if (e2 % 2 == 0) return std::to_string(e2 / 2);
  return std::to_string(e2) + "/2";
}

std::string coeffForTerm(const Coeff& c) {
  if (c.polynomial() && c.num().termCount() == 1) return c.str();
  return "(" + c.str() + ")";
}

}  // namespace

std::string render(const CartanData& cd, const Element& x) {
  if (x.zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& [t, c] : x.terms()) {
    std::string blocks;
    if (!t.f.empty()) {
      blocks += " .";
      for (unsigned char l : t.f) blocks += " F" + std::to_string(cd.label(l));
    }
    bool anyK = false;
    std::string kblock;
    for (int i = 0; i < cd.m(); ++i) {
      if (t.k[i] == 0) continue;
      anyK = true;
      kblock += " K" + std::to_string(cd.label(i));
      if (t.k[i] != 2) kblock += "^" + halfExpStr(t.k[i]);
    }
    if (anyK) blocks += " ." + kblock;
    if (!t.e.empty()) {
      blocks += " .";
      for (unsigned char l : t.e) blocks += " E" + std::to_string(cd.label(l));
    }
    if (!first) out += " + ";
    out += coeffForTerm(c) + blocks;
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// lexer

namespace {

struct Token {
  enum Kind {
    End, Number, Name, Plus, Minus, Star, Slash, Caret, Under, LParen,
    RParen, LBrack, RBrack, Comma, Dot
  } kind = End;
  std::string text;
  std::size_t pos = 0;
};

struct Lexer {
  std::string s;
  std::size_t i = 0;

  explicit Lexer(std::string in) : s(std::move(in)) {}

  Token next() {
    while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i;
    Token t;
    t.pos = i;
    if (i >= s.size()) return t;
    char c = s[i];
    auto one = [&](Token::Kind k) {
      t.kind = k;
      t.text = std::string(1, c);
      ++i;
      return t;
    };
    switch (c) {
      case '+': return one(Token::Plus);
      case '-': return one(Token::Minus);
      case '*': return one(Token::Star);
      case '/': return one(Token::Slash);
      case '^': return one(Token::Caret);
      case '_': return one(Token::Under);
      case '(': return one(Token::LParen);
      case ')': return one(Token::RParen);
      case '[': return one(Token::LBrack);
      case ']': return one(Token::RBrack);
      case ',': return one(Token::Comma);
      case '.': return one(Token::Dot);
      default: break;
    }
    if (isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Number;
      while (i < s.size() && isdigit(static_cast<unsigned char>(s[i])))
        t.text += s[i++];
      return t;
    }
    if (isalpha(static_cast<unsigned char>(c))) {
      t.kind = Token::Name;
      while (i < s.size() &&
             (isalpha(static_cast<unsigned char>(s[i])) ||
              isdigit(static_cast<unsigned char>(s[i]))))
        t.text += s[i++];
      return t;
    }
    throw ParseError(i, std::string("unexpected character '") + c + "'", "");
  }
};

struct TokenStream {
  std::vector<Token> toks;
  std::size_t at = 0;

  explicit TokenStream(const std::string& s) {
    Lexer lx(s);
    for (;;) {
      Token t = lx.next();
      toks.push_back(t);
      if (t.kind == Token::End) break;
    }
  }
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = at + ahead;
    return k < toks.size() ? toks[k] : toks.back();
  }
  Token take() {
    Token t = peek();
    if (at + 1 < toks.size()) ++at;
    return t;
  }
  void expect(Token::Kind k, const std::string& what) {
    if (peek().kind != k) throw ParseError(peek().pos, "unexpected token", what);
    take();
  }
  bool atEnd() const { return peek().kind == Token::End; }
};

// split a Name token like "E12" into prefix "E" and numeric suffix
bool splitName(const std::string& name, std::string& head, int& num) {
  std::size_t k = 0;
  while (k < name.size() && !isdigit(static_cast<unsigned char>(name[k]))) ++k;
  if (k == name.size()) return false;
  head = name.substr(0, k);
  num = std::stoi(name.substr(k));
  return true;
}

class Parser {
 public:
  Parser(Alg& alg, Braid* br, Drinfeld* dr, const std::string& text)
      : alg_(alg), br_(br), dr_(dr), ts_(text) {}

  Element parseFull() {
    Element x = parseExpr(0);
    if (!ts_.atEnd())
      throw ParseError(ts_.peek().pos, "trailing input", "end of expression");
    return x;
  }

  Element parseExpr(int depth) {
    guard(depth);
    bool neg = false;
    if (ts_.peek().kind == Token::Minus) {
      ts_.take();
      neg = true;
    }
    Element acc = parseTerm(depth + 1);
    if (neg) acc = Coeff(-1) * acc;
    for (;;) {
      if (ts_.peek().kind == Token::Plus) {
        ts_.take();
        acc += parseTerm(depth + 1);
      } else if (ts_.peek().kind == Token::Minus) {
        ts_.take();
        acc -= parseTerm(depth + 1);
      } else {
        return acc;
      }
    }
  }

  Element parseTerm(int depth) {
    guard(depth);
    Element acc = parseFactor(depth + 1);
    for (;;) {
      Token::Kind k = ts_.peek().kind;
      if (k == Token::Star || k == Token::Dot) {
        ts_.take();
        acc = alg_.mul(acc, parseFactor(depth + 1));
      } else if (k == Token::Name || k == Token::Number ||
                 k == Token::LParen || k == Token::LBrack) {
        acc = alg_.mul(acc, parseFactor(depth + 1));
      } else {
        return acc;
      }
    }
  }

  // a factor with an optional tight ^exponent
  Element parseFactor(int depth) {
    guard(depth);
    Element base = parseAtomic(depth + 1);
    while (ts_.peek().kind == Token::Caret) {
      ts_.take();
      auto [n, d] = parseRatio();
      base = powElement(base, n, d);
    }
    return base;
  }

  Element parseAtomic(int depth) {
    guard(depth);
    const Token t = ts_.peek();
    switch (t.kind) {
      case Token::LParen: {
        ts_.take();
        Element x = parseExpr(depth + 1);
        ts_.expect(Token::RParen, "')'");
        return x;
      }
      case Token::LBrack: {
        ts_.take();
        Element a = parseExpr(depth + 1);
        ts_.expect(Token::Comma, "','");
        Element b = parseExpr(depth + 1);
        ts_.expect(Token::RBrack, "']'");
        Coeff u(1);
        if (ts_.peek().kind == Token::Under) {
          ts_.take();
          u = toScalar(parseFactor(depth + 1), t.pos);
        }
        return alg_.qBracket(a, b, u);
      }
      case Token::Number: {
        ts_.take();
        long num = std::stol(t.text);
        if (ts_.peek().kind == Token::Slash &&
            ts_.peek(1).kind == Token::Number) {
          ts_.take();
          long den = std::stol(ts_.take().text);
          if (den == 0) throw ParseError(t.pos, "zero denominator", "");
          return alg_.scalar(Coeff(Cyclo(mpq_class(num, den))));
        }
        return alg_.scalar(Coeff(num));
      }
      case Token::Name:
        return parseNamed(depth);
      default:
        throw ParseError(t.pos, "unexpected token", "an atom");
    }
  }

  Element parseNamed(int depth) {
    const Token t = ts_.take();
    const std::string& n = t.text;
    std::string head;
    int num = 0;
    if (n == "q") return alg_.scalar(Coeff::qpow(1));
    if (n == "v") return alg_.scalar(Coeff::vpow(1));
    if (n == "w") return alg_.scalar(Coeff::omega());
    if (n == "g") return alg_.gammaPow(1);
    if (n == "x") {
      int sign = 0;
      if (ts_.peek().kind == Token::Plus) sign = +1;
      if (ts_.peek().kind == Token::Minus) sign = -1;
      if (sign == 0) throw ParseError(t.pos, "x needs + or -", "x+(i,k)");
      ts_.take();
      auto [i, k] = parsePair(t.pos);
      needDrinfeld(t.pos);
      return sign > 0 ? dr_->xplus(i, k) : dr_->xminus(i, k);
    }
    if (n == "a") {
      auto [i, k] = parsePair(t.pos);
      needDrinfeld(t.pos);
      return dr_->aGen(i, k);
    }
    if (n == "tau") {
      needBraid(t.pos);
      Element x = parseParenArg(depth);
      return br_->applyTau(defaultTau(t.pos), x);
    }
    if (n == "Phi") {
      Element x = parseParenArg(depth);
      return alg_.phi(x);
    }
    if (n == "Omega") {
      Element x = parseParenArg(depth);
      return alg_.omegaAuto(x);
    }
    if (n == "Tw") {
      needBraid(t.pos);
      ts_.expect(Token::LParen, "'('");
      int i = parseNodeNumber(t.pos);
      ts_.expect(Token::RParen, "')'");
      int k = 1;
      if (ts_.peek().kind == Token::Caret) {
        ts_.take();
        k = static_cast<int>(parseSignedInt());
      }
      Element x = parseParenArg(depth);
      return br_->applyOmega(alg_.cd().pos(i), k, x);
    }
    if (splitName(n, head, num)) {
      if (head == "E" || head == "F" || head == "K") {
        if (!alg_.cd().hasLabel(num))
          throw ParseError(t.pos, "unknown node " + std::to_string(num), "");
        int pos = alg_.cd().pos(num);
        if (head == "E") return alg_.E(pos);
        if (head == "F") return alg_.F(pos);
        // K exponent binds tightly
        if (ts_.peek().kind == Token::Caret) {
          ts_.take();
          auto [en, ed] = parseRatio();
          if (ed == 2) return alg_.K(pos, static_cast<int>(en));
          if (ed == 1) return alg_.K(pos, static_cast<int>(2 * en));
          throw ParseError(t.pos, "K exponent must be a half integer", "");
        }
        return alg_.K(pos);
      }
      if (head == "T") {
        needBraid(t.pos);
        if (!alg_.cd().hasLabel(num))
          throw ParseError(t.pos, "unknown node " + std::to_string(num), "");
        bool inv = false;
        if (ts_.peek().kind == Token::Caret) {
          ts_.take();
          long e = parseSignedInt();
          if (e != -1 && e != 1)
            throw ParseError(t.pos, "Ti powers are limited to ^-1", "");
          inv = e == -1;
        }
        Element x = parseParenArg(depth);
        return inv ? br_->applyTinv(alg_.cd().pos(num), x)
                   : br_->applyT(alg_.cd().pos(num), x);
      }
    }
    throw ParseError(t.pos, "unknown name '" + n + "'", "");
  }

  // --- helpers

  void guard(int depth) const {
    if (depth > 120) throw ParseError(ts_.peek().pos, "expression too deep", "");
  }
  void needDrinfeld(std::size_t pos) const {
    if (!dr_) throw ParseError(pos, "loop generators unavailable here", "");
  }
  void needBraid(std::size_t pos) const {
    if (!br_) throw ParseError(pos, "braid operators unavailable here", "");
  }
  std::vector<int> defaultTau(std::size_t pos) const {
    ReducedWord rw = reducedWord(alg_.cd(), WeylElt::translation(alg_.cd(), 1));
    if (rw.tauTrivial())
      throw ParseError(pos, "this type has no canonical diagram rotation", "");
    return rw.tau;
  }
  Element parseParenArg(int depth) {
    ts_.expect(Token::LParen, "'('");
    Element x = parseExpr(depth + 1);
    ts_.expect(Token::RParen, "')'");
    return x;
  }
  long parseSignedInt() {
    bool neg = false;
    if (ts_.peek().kind == Token::Minus) {
      ts_.take();
      neg = true;
    }
    if (ts_.peek().kind != Token::Number)
      throw ParseError(ts_.peek().pos, "number expected", "integer");
    long v = std::stol(ts_.take().text);
    return neg ? -v : v;
  }
  // exponent as (numerator, denominator in {1,2})
  std::pair<long, long> parseRatio() {
    long n = parseSignedInt();
    if (ts_.peek().kind == Token::Slash && ts_.peek(1).kind == Token::Number) {
      ts_.take();
      long d = std::stol(ts_.take().text);
      if (d != 2) throw ParseError(ts_.peek().pos, "only /2 exponents", "");
      return {n, 2};
    }
    return {n, 1};
  }
  int parseNodeNumber(std::size_t pos) {
    if (ts_.peek().kind != Token::Number)
      throw ParseError(ts_.peek().pos, "node number expected", "");
    int i = std::stoi(ts_.take().text);
    if (!alg_.cd().hasLabel(i))
      throw ParseError(pos, "unknown node " + std::to_string(i), "");
    return i;
  }
  std::pair<int, long> parsePair(std::size_t pos) {
    ts_.expect(Token::LParen, "'('");
    if (ts_.peek().kind != Token::Number)
      throw ParseError(ts_.peek().pos, "node number expected", "");
    int i = std::stoi(ts_.take().text);
    if (i < 1 || i > alg_.cd().N())
      throw ParseError(pos, "node out of range", "");
    ts_.expect(Token::Comma, "','");
    long k = parseSignedInt();
    ts_.expect(Token::RParen, "')'");
    return {i, k};
  }
  Coeff toScalar(const Element& x, std::size_t pos) const {
    if (x.zero()) return Coeff();
    if (x.termCount() != 1) throw ParseError(pos, "scalar expected", "");
    auto& [t, c] = *x.terms().begin();
    if (!t.f.empty() || !t.e.empty()) throw ParseError(pos, "scalar expected", "");
    for (int v : t.k)
      if (v != 0) throw ParseError(pos, "scalar expected", "");
    return c;
  }
  Element powElement(const Element& x, long n, long d) {
    if (x.termCount() == 1) {
      auto& [t, c] = *x.terms().begin();
      bool anyK = false;
      for (int v : t.k) anyK = anyK || v != 0;
      if (t.f.empty() && t.e.empty()) {
        if (anyK && c.isOne()) {
          // K-monomial power: scale exponents (supports half powers)
          KExp k2 = t.k;
          for (auto& e : k2) {
            long scaled = e * n;
            if (scaled % d != 0)
              throw ParseError(0, "non half-integral K power", "");
            e = static_cast<int>(scaled / d);
          }
          return alg_.Kmono(k2);
        }
        if (!anyK) {
          if (d != 1) throw ParseError(0, "fractional scalar power", "");
          return alg_.scalar(c.pow(static_cast<int>(n)));
        }
      }
    }
    if (d != 1) throw ParseError(0, "fractional power of a non-monomial", "");
    if (n < 0) throw ParseError(0, "negative power of a non-scalar", "");
    Element acc = alg_.one();
    for (long k = 0; k < n; ++k) acc = alg_.mul(acc, x);
    return acc;
  }

  Alg& alg_;
  Braid* br_;
  Drinfeld* dr_;
  TokenStream ts_;
};

}  // namespace

Element ExprParser::parseElement(const std::string& text) const {
  Parser p(*alg_, br_, dr_, text);
  return p.parseFull();
}

Coeff ExprParser::parseCoeff(const std::string& text) const {
  Parser p(*alg_, br_, dr_, text);
  Element x = p.parseFull();
  if (x.zero()) return Coeff();
  if (x.termCount() != 1) throw ParseError(0, "not a scalar", "");
  auto& [t, c] = *x.terms().begin();
  if (!t.f.empty() || !t.e.empty()) throw ParseError(0, "not a scalar", "");
  for (int v : t.k)
    if (v != 0) throw ParseError(0, "not a scalar", "");
  return c;
}

std::vector<ExprParser::OpAtom> ExprParser::parseOps(const std::string& text) const {
  TokenStream ts(text);
  std::vector<OpAtom> out;
  while (!ts.atEnd()) {
    Token t = ts.take();
    if (t.kind != Token::Name)
      throw ParseError(t.pos, "operator name expected", "Ti, Tw(i)^k, tau, Phi, Omega");
    OpAtom op;
    std::string head;
    int num = 0;
    if (t.text == "tau") {
      op.kind = OpAtom::TauK;
    } else if (t.text == "Phi") {
      op.kind = OpAtom::PhiK;
    } else if (t.text == "Omega") {
      op.kind = OpAtom::OmegaK;
    } else if (t.text == "Tw") {
      ts.expect(Token::LParen, "'('");
      if (ts.peek().kind != Token::Number)
        throw ParseError(ts.peek().pos, "node expected", "");
      op.node = std::stoi(ts.take().text);
      ts.expect(Token::RParen, "')'");
      op.kind = OpAtom::TomegaPow;
      op.power = 1;
      if (ts.peek().kind == Token::Caret) {
        ts.take();
        bool neg = false;
        if (ts.peek().kind == Token::Minus) {
          ts.take();
          neg = true;
        }
        if (ts.peek().kind != Token::Number)
          throw ParseError(ts.peek().pos, "power expected", "");
        op.power = std::stoi(ts.take().text);
        if (neg) op.power = -op.power;
      }
    } else if (splitName(t.text, head, num) && head == "T") {
      op.kind = OpAtom::T;
      op.node = num;
      if (ts.peek().kind == Token::Caret) {
        ts.take();
        bool neg = false;
        if (ts.peek().kind == Token::Minus) {
          ts.take();
          neg = true;
        }
        if (ts.peek().kind != Token::Number || ts.take().text != "1")
          throw ParseError(t.pos, "Ti powers are limited to ^-1", "");
        if (neg) op.kind = OpAtom::Tinv;
      }
    } else {
      throw ParseError(t.pos, "unknown operator '" + t.text + "'", "");
    }
    out.push_back(op);
  }
  return out;
}

Element ExprParser::applyOps(const std::vector<OpAtom>& ops, Element x) const {
  // leftmost atom outermost: apply right-to-left
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    switch (it->kind) {
      case OpAtom::T:
        if (!br_) throw ParseError(0, "braid operators unavailable", "");
        x = br_->applyT(alg_->cd().pos(it->node), x);
        break;
      case OpAtom::Tinv:
        if (!br_) throw ParseError(0, "braid operators unavailable", "");
        x = br_->applyTinv(alg_->cd().pos(it->node), x);
        break;
      case OpAtom::TomegaPow:
        if (!br_) throw ParseError(0, "braid operators unavailable", "");
        x = br_->applyOmega(alg_->cd().pos(it->node), it->power, x);
        break;
      case OpAtom::TauK: {
        if (!br_) throw ParseError(0, "braid operators unavailable", "");
        ReducedWord rw =
            reducedWord(alg_->cd(), WeylElt::translation(alg_->cd(), 1));
        if (rw.tauTrivial())
          throw ParseError(0, "this type has no canonical diagram rotation", "");
        x = br_->applyTau(rw.tau, x);
        break;
      }
      case OpAtom::PhiK:
        x = alg_->phi(x);
        break;
      case OpAtom::OmegaK:
        x = alg_->omegaAuto(x);
        break;
    }
  }
  return x;
}

WeylElt ExprParser::parseWeyl(const std::string& text) const {
  TokenStream ts(text);
  const CartanData& cd = alg_->cd();
  WeylElt acc = WeylElt::identity(cd);
  while (!ts.atEnd()) {
    Token t = ts.take();
    if (t.kind != Token::Name)
      throw ParseError(t.pos, "expected s<i>, w(<i>) or tau", "");
    std::string head;
    int num = 0;
    if (t.text == "tau") {
      ReducedWord rw = reducedWord(cd, WeylElt::translation(cd, 1));
      if (rw.tauTrivial())
        throw ParseError(t.pos, "this type has no canonical diagram rotation", "");
      acc = acc * WeylElt::permutation(cd, rw.tau);
    } else if (t.text == "w") {
      ts.expect(Token::LParen, "'('");
      if (ts.peek().kind != Token::Number)
        throw ParseError(ts.peek().pos, "node expected", "");
      int i = std::stoi(ts.take().text);
      ts.expect(Token::RParen, "')'");
      acc = acc * WeylElt::translation(cd, cd.pos(i));
    } else if (splitName(t.text, head, num) && head == "s") {
      if (!cd.hasLabel(num)) throw ParseError(t.pos, "unknown node", "");
      acc = acc * WeylElt::reflect(cd, cd.pos(num));
    } else {
      throw ParseError(t.pos, "expected s<i>, w(<i>) or tau", "");
    }
  }
  return acc;
}

}  // namespace qaffine
