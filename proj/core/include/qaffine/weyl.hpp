#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qaffine/cartan.hpp"

namespace qaffine {

// Element of the extended affine Weyl group, represented purely through its
// action on the root lattice Q in the alpha-basis (column j = image of
// alpha_j).  A residual diagram automorphism shows up as a permutation part
// during greedy descent; no abstract word is stored.
class WeylElt {
 public:
  WeylElt() = default;
  explicit WeylElt(int m);
  static WeylElt identity(const CartanData& cd);
  static WeylElt reflect(const CartanData& cd, int pos);
  static WeylElt translation(const CartanData& cd, int pos);  // omega_i
  static WeylElt permutation(const CartanData& cd, const std::vector<int>& tau);

  int m() const { return m_; }
  long at(int row, int col) const { return M_[row * m_ + col]; }
  long& at(int row, int col) { return M_[row * m_ + col]; }
  RootVec apply(const RootVec& v) const;
  WeylElt operator*(const WeylElt& o) const;
  bool operator==(const WeylElt& o) const { return M_ == o.M_; }
  bool operator!=(const WeylElt& o) const { return !(*this == o); }
  bool operator<(const WeylElt& o) const { return M_ < o.M_; }
  bool isIdentity() const;
  // If the linear part permutes the simple roots, return that permutation.
  std::optional<std::vector<int>> permutationPart() const;
  bool fixesDelta(const CartanData& cd) const;

 private:
  int m_ = 0;
  std::vector<long> M_;
};

// Reduced expression: word over affine node positions plus a trailing
// diagram automorphism (as a position permutation).
struct ReducedWord {
  std::vector<int> word;
  std::vector<int> tau;  // position permutation, tau[pos] = image position
  int length() const { return static_cast<int>(word.size()); }
  bool tauTrivial() const;
};

// Greedy descent with lowest-index tie-breaking.  Throws StructureError if
// the matrix is not in the extended affine Weyl group.
ReducedWord reducedWord(const CartanData& cd, WeylElt w);
int weylLength(const CartanData& cd, const WeylElt& w);

// The doubly infinite node sequence built from the fixed reduced expression
// of omega_n ... omega_1 = s_{i_1} ... s_{i_m} tau, extended by
// i_{l+m} = tau(i_l).
class HSequence {
 public:
  explicit HSequence(const CartanData& cd);
  int period() const { return static_cast<int>(base_.size()); }
  const std::vector<int>& tau() const { return tau_; }
  int entry(long l) const;  // l in Z, 1-based within the base window
  RootVec beta(const CartanData& cd, long k) const;

 private:
  std::vector<int> base_;  // i_1 .. i_m (positions)
  std::vector<int> tau_, tauInv_;
};

enum class RootClass { Greater, Imaginary, Less };

struct PosRoot {
  RootVec v;
  RootClass cls;
  long deltaCoeff;   // delta coefficient (k of the families)
  int node;          // finite node position (multiplicity label for Delta_0)
};

// All positive roots with delta-coefficient <= maxDelta, each tagged with its
// class; Delta_0 entries carry the multiplicity label (k delta, i).
std::vector<PosRoot> positiveRoots(const CartanData& cd, long maxDelta);

// Data for the inverse-homomorphism construction: a reduced word for the
// longest element of the finite Weyl group, the chain of simple-root
// additions reaching theta-bar, and the pairing values along the chain.
struct ThetaPath {
  ReducedWord w0;
  std::vector<int> path;  // positions i_1 .. i_{h-1}
  std::vector<long> eps;  // eps_k = (beta_k, alpha_{i_{k+1}}), k = 1..h-2
};

ThetaPath thetaPath(const CartanData& cd);

}  // namespace qaffine
