#pragma once

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "qaffine/algebra.hpp"
#include "qaffine/weyl.hpp"

namespace qaffine {

// One atom of an operator word.  A word [o_1, ..., o_k] acts as the
// composite o_1(o_2(...o_k(x))), i.e. index 0 is outermost, matching the
// product order of the underlying Weyl-group word.
struct BraidOp {
  enum Kind { T, Tinv, Tau, TauInv } kind = T;
  int node = -1;          // position, for T / Tinv
  std::vector<int> tau;   // position permutation, for Tau / TauInv
};

using BraidWord = std::vector<BraidOp>;

BraidWord inverseWord(const BraidWord& ops);

// Lusztig's braid operators and their lifts along translation elements.
class Braid {
 public:
  explicit Braid(Alg& alg);

  Alg& alg() const { return *alg_; }

  Element applyT(int pos, const Element& x) const;
  Element applyTinv(int pos, const Element& x) const;
  Element applyTau(const std::vector<int>& tau, const Element& x,
                   bool inverse = false) const;
  Element apply(const BraidWord& ops, const Element& x) const;

  // Reduced word of the translation by omega_i and its operator lift.
  const ReducedWord& omegaWord(int pos) const;
  BraidWord omegaOps(int pos, int power) const;  // T_{omega_i}^power
  Element applyOmega(int pos, int power, const Element& x) const;

  // Cached T_{omega_i}^power on single generators ('E', 'F', 'K').
  Element omegaOnGen(int pos, int power, char kind, int node) const;
  // o(i)^power T_{omega_i}^power(x)
  Element applyHatOmega(int pos, int power, const Element& x) const;

  // Image of a single-generator letter under T_i^{+-1}.
  const Element& tImageE(int i, int j, bool inv) const;
  const Element& tImageF(int i, int j, bool inv) const;

 private:
  KExp reflectK(int pos, const KExp& k2) const;

  Alg* alg_;
  std::vector<std::vector<Element>> tE_, tF_, tEinv_, tFinv_;
  mutable std::vector<ReducedWord> omegaWords_;
  mutable std::map<std::tuple<int, int, char, int>, Element> genCache_;
  mutable std::mutex mx_;
};

}  // namespace qaffine
