#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "qaffine/cartan.hpp"
#include "qaffine/coefficient.hpp"

namespace qaffine {

// Words over the affine node positions.
using Word = std::basic_string<unsigned char>;
using WordView = std::basic_string_view<unsigned char>;
// K-monomial exponent vector over positions, doubled so that gamma^(1/2)
// (= K_delta^(1/2)) stays integral.
using KExp = std::vector<int>;

struct WordHash {
  using is_transparent = void;
  std::size_t operator()(WordView v) const {
    std::size_t h = 1469598103934665603ull;
    for (unsigned char c : v) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return h;
  }
  std::size_t operator()(const Word& w) const { return (*this)(WordView(w)); }
};
struct WordEq {
  using is_transparent = void;
  bool operator()(WordView a, WordView b) const { return a == b; }
};

// Triangular normal term: F-word, K-monomial, E-word (the coefficient lives
// in the enclosing element map).
struct TermKey {
  Word f;
  KExp k;
  Word e;
  auto operator<=>(const TermKey&) const = default;
};

// Canonical finite sum of normal terms.  Instances produced by Alg are always
// fully straightened and Serre-reduced; Element itself only offers the linear
// structure.
class Element {
 public:
  using Map = std::map<TermKey, Coeff>;

  Element() = default;
  bool zero() const { return t_.empty(); }
  const Map& terms() const { return t_; }
  std::size_t termCount() const { return t_.size(); }

  void add(const TermKey& key, const Coeff& c) {
    if (c.zero()) return;
    auto it = t_.find(key);
    if (it == t_.end()) {
      t_.emplace(key, c);
    } else {
      it->second += c;
      if (it->second.zero()) t_.erase(it);
    }
  }

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element x, const Element& y) { return x += y; }
  friend Element operator-(Element x, const Element& y) { return x -= y; }
  Element scaled(const Coeff& c) const;
  friend Element operator*(const Coeff& c, const Element& x) {
    return x.scaled(c);
  }

  bool operator==(const Element& o) const { return t_ == o.t_; }
  bool operator!=(const Element& o) const { return !(*this == o); }
  bool operator<(const Element& o) const { return t_ < o.t_; }

  std::size_t maxELen() const;
  std::size_t maxFLen() const;

 private:
  Map t_;
};

// A degree-truncated, critical-pair-completed rewriting system presenting the
// q-Serre ideal of U_q^+ (and, with E renamed to F, of U_q^-) in the
// degree-lexicographic word order with node order 0 < 1 < ... < n.
//
// All defining relations are homogeneous in both word length and Q^+-weight,
// so every derived rule preserves word length.  Once the layer of a given
// length is closed, no rule of that length is ever added again; reduction of
// a word therefore decides membership in the ideal exactly whenever the
// system is completed to at least the word's length.
class Rewrite {
 public:
  struct Rhs {
    std::vector<std::pair<Coeff, Word>> terms;  // sorted by word
  };
  struct Rule {
    Word lhs;
    Rhs rhs;
  };

  explicit Rewrite(const CartanData& cd);

  const CartanData& cartan() const { return *cd_; }
  int completedDegree() const;
  std::size_t ruleCount() const;
  // Completes all critical pairs of combined length <= d.  Deterministic:
  // the resulting rule list depends only on d.
  void ensureDegree(int d);

  // Normal form of a single word; requires |w| <= completedDegree().
  Rhs reduce(const Word& w) const;
  bool isIrreducible(WordView w) const;

  // All irreducible words of the given weight (over positions); requires the
  // system to be completed to the weight's height.
  std::vector<Word> irreducibleWords(const RootVec& weight) const;

  // The defining relation of the pair (i, j) as (coefficient, word) terms.
  std::vector<std::pair<Coeff, Word>> serreElement(int i, int j) const;

  // Snapshot/restore for the on-disk cache.
  std::vector<Rule> snapshotRules() const;
  void restore(std::vector<Rule> rules, int completedDegree);

 private:
  struct Redex {
    std::size_t pos;
    int rule;
  };
  std::optional<Redex> findRedex(WordView w) const;
  Rhs reduceNoLock(const Word& w,
                   std::map<Word, Rhs>* layerMemo) const;
  void addRule(std::vector<std::pair<Coeff, Word>> elem);
  void completeLayer(int L);

  const CartanData* cd_;
  std::vector<Rule> rules_;
  std::unordered_map<Word, int, WordHash, WordEq> byLhs_;
  std::vector<int> lens_;
  int completed_ = 1;
  mutable std::shared_mutex rulesMx_;
  mutable std::unordered_map<Word, Rhs, WordHash, WordEq> memo_;
  mutable std::shared_mutex memoMx_;
};

// The symbolic engine for one twisted type: elements of the quantized
// enveloping algebra in triangular normal form, with multiplication by
// straightening and Serre reduction.
class Alg {
 public:
  explicit Alg(TypeTag tag);
  explicit Alg(CartanData cd);

  const CartanData& cd() const { return cd_; }
  Rewrite& rw() { return *rw_; }
  const Rewrite& rw() const { return *rw_; }

  int degreeBudget() const { return budget_; }
  void setDegreeBudget(int b) { budget_ = b; }

  // Generators; node arguments are positions.  K exponents are doubled.
  Element one() const;
  Element scalar(const Coeff& c) const;
  Element E(int pos) const;
  Element F(int pos) const;
  Element K(int pos, int exp2 = 2) const;
  Element Kmono(const KExp& k2) const;
  Element gammaPow(int halves) const;  // gamma^(halves/2)
  Element Eword(const Word& w) const;  // reduced on construction

  Element mul(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b, const Element& c) const {
    return mul(mul(a, b), c);
  }
  Element commutator(const Element& a, const Element& b) const {
    return mul(a, b) - mul(b, a);
  }
  // Quantum Lie bracket [a, b]_u = ab - u ba.
  Element qBracket(const Element& a, const Element& b, const Coeff& u) const;
  // Nested forms: round  [a1, [a2, [...]]] pairing u1 with the outer bracket,
  // angled [[...], a_{s-1}]], a_s] pairing u_{s-1} with the outer bracket.
  Element nestedRight(const std::vector<Element>& args,
                      const std::vector<Coeff>& us) const;
  Element nestedLeft(const std::vector<Element>& args,
                     const std::vector<Coeff>& us) const;

  // Re-reduce an element whose words may not be in normal form.
  Element normal(const Element& x) const;
  bool isZero(const Element& x) const { return x.zero(); }

  // Antiautomorphism E_i <-> F_i, K -> K^-1, v -> v^-1 (anti-multiplicative)
  Element phi(const Element& x) const;
  // Automorphism fixing E_i, F_i, inverting K and v.
  Element omegaAuto(const Element& x) const;

  // Twisted derivation r_i on the E-side subalgebra.
  Element derivation(int pos, const Element& x) const;

  // Q-weight of a term / of a homogeneous element (nullopt if mixed).
  RootVec weightOf(const TermKey& t) const;
  std::optional<RootVec> weightOf(const Element& x) const;

  // q_i - q_i^{-1}
  const Coeff& qiMinusInv(int pos) const { return qmi_[pos]; }
  Coeff qiPow(int pos, int e) const {
    return Coeff::vpow(cd_.d2(pos) * e);
  }

 private:
  struct RawTerm {
    Coeff c;
    Word f;
    KExp k;
    Word e;
  };
  void mulTermByF(const RawTerm& t, int j, std::vector<RawTerm>& out) const;
  void mulTermByK(RawTerm& t, const KExp& k2) const;
  long kConjVexp(const KExp& k2, int pos) const;  // v-exp of q^((mu, alpha_pos))
  void ensureFor(std::size_t elen, std::size_t flen) const;

  CartanData cd_;
  std::unique_ptr<Rewrite> rw_;
  std::vector<Coeff> qmi_;
  int budget_ = 40;
};

}  // namespace qaffine
