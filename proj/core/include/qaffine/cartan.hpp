#pragma once

#include <string>
#include <vector>

#include "qaffine/numeric.hpp"

namespace qaffine {

// Type tag in the CLI syntax: letter + simply-laced rank + "~" + twist order,
// e.g. A3~2, D4~3, E6~2; the untwisted fixtures drop the twist part (A2, D4).
struct TypeTag {
  char letter = 'A';
  int N = 2;
  int r = 1;

  std::string str() const {
    std::string s(1, letter);
    s += std::to_string(N);
    if (r > 1) s += "~" + std::to_string(r);
    return s;
  }
  bool operator==(const TypeTag& o) const {
    return letter == o.letter && N == o.N && r == o.r;
  }
};

TypeTag parseTypeTag(const std::string& s);

using RootVec = std::vector<long>;  // coordinates over the affine node set

// Full combinatorial datum of a (possibly twisted) affine type.  Nodes of the
// affine diagram are handled positionally: position 0 is the affine node, the
// remaining positions are the sigma-orbit representatives in increasing label
// order.  All data is validated on construction and immutable afterwards.
class CartanData {
 public:
  explicit CartanData(TypeTag tag);

  const TypeTag& tag() const { return tag_; }
  int N() const { return N_; }        // simply-laced rank
  int r() const { return r_; }        // twist order
  int m() const { return m_; }        // number of affine nodes |I|+1
  int n() const { return m_ - 1; }    // |I|

  // Simply-laced data; nodes 1..N.
  int simplyLaced(int i, int j) const { return A_[i][j]; }
  int sigma(int i) const { return sigma_[i]; }
  std::vector<int> sigmaOrbit(int i) const;  // representative first
  int orbitRep(int label) const;             // label in 1..N
  int orbitSteps(int label) const;           // t with sigma^t(label)=rep
  // sum_{s=0}^{r-1} A_{i, sigma^s(j)} for arbitrary labels i, j in 1..N
  int foldedEntry(int i, int j) const;

  // Affine data by position.
  int label(int pos) const { return labels_[pos]; }
  int pos(int label) const;
  bool hasLabel(int label) const;
  int a(int i, int j) const { return a_[i][j]; }     // affine Cartan matrix
  int d2(int i) const { return d2_[i]; }             // 2 * symmetrizer
  int mark(int i) const { return marks_[i]; }        // delta coefficient r_i
  int p(int i) const { return p_[i]; }               // p_i (p(0) := 1)
  int pairing(int i, int j) const { return gp_[i][j]; }  // (alpha_i, alpha_j)
  long pairing(const RootVec& x, const RootVec& y) const;
  int h() const { return h_; }                       // sum of delta marks
  int osign(int i) const { return osign_[i]; }       // +-1, positions >= 1
  Cyclo omegaPow(long k) const;                      // (primitive r-th root)^k

  const RootVec& deltaVec() const { return delta_; }
  const RootVec& thetaBar() const { return thetaBar_; }  // delta - alpha_0
  // Positive roots of the finite part g_0 (coordinates over positions 1..n).
  const std::vector<RootVec>& finitePositive() const { return finitePos_; }
  // (alpha, alpha) for a finite root vector (doubled value).
  long finiteNorm2Twice(const RootVec& fin) const;
  bool isFiniteRoot(const RootVec& fin) const;
  bool isA2n2() const { return tag_.letter == 'A' && tag_.r == 2 && N_ % 2 == 0; }

  // Stable text layout used by `info`.
  std::string describe() const;

  // Validation of all construction invariants; throws StructureError.  Public
  // so that mutation tests can corrupt a copy and re-validate.
  void validate() const;

  // test hook: mutable access for mutation tests
  std::vector<std::vector<int>>& mutableAffine() { return a_; }
  std::vector<int>& mutableMarks() { return marks_; }
  std::vector<int>& mutableD2() { return d2_; }
  std::vector<int>& mutableSigma() { return sigma_; }

 private:
  void buildSimplyLaced();
  void fold();
  void finishDerived();

  TypeTag tag_;
  int N_ = 0, r_ = 1, m_ = 0, h_ = 0;
  std::vector<int> sigma_;                  // 1..N
  std::vector<std::vector<int>> A_;         // 1..N x 1..N
  std::vector<int> labels_;                 // position -> label
  std::vector<int> posOfLabel_;             // label -> position (-1 if none)
  std::vector<int> orbitRep_, orbitSteps_;  // 1..N
  std::vector<std::vector<int>> a_;         // m x m
  std::vector<int> d2_, marks_, p_;         // size m
  std::vector<std::vector<int>> gp_;        // pairing matrix (alpha_i,alpha_j)
  std::vector<int> osign_;                  // size m, osign_[0] unused (=1)
  RootVec delta_, thetaBar_;
  std::vector<RootVec> finitePos_;
};

}  // namespace qaffine
