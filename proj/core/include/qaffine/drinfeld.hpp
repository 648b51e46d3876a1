#pragma once

#include <map>
#include <mutex>
#include <optional>

#include "qaffine/braid.hpp"

namespace qaffine {

// Loop-style generators realized inside the Chevalley presentation via the
// braid group action.  Node arguments named `label` range over the full
// simply-laced index set 1..N and are folded onto orbit representatives with
// the appropriate root-of-unity twist; `pos` arguments are representative
// positions.  All realized values are cached.
class Drinfeld {
 public:
  Drinfeld(Alg& alg, Braid& br);

  Alg& alg() const { return *alg_; }
  Braid& braid() const { return *br_; }
  const HSequence& hseq() const { return hseq_; }

  // Root vectors E_{beta_k} from the infinite node sequence.
  Element rootVector(long k) const;

  // Loop root vectors: E_{k p_i delta + alpha_i} (k >= 0) and
  // E_{k p_i delta - alpha_i} (k > 0).
  Element loopPlus(int pos, int k) const;
  Element loopMinus(int pos, int k) const;

  // Drinfeld currents; `mode` is the actual loop degree, zero whenever the
  // divisibility rule calls for it.
  Element xplus(int label, long mode) const;
  Element xminus(int label, long mode) const;
  Element aGen(int label, long mode) const;       // mode != 0
  Element psiGen(int label, long mode) const;     // 0 for mode < 0
  Element phiGen(int label, long mode) const;     // 0 for mode > 0
  Element psibar(int pos, int k) const;           // k >= 1
  Element imaginary(int pos, int k) const;        // E_{i, k p_i delta}, k >= 1

  // E_{delta - 2 alpha_n} = T_w^{n-1}(E_0) for the doubled-node types.
  Element specialTopVector() const;

  // Representative position and twist steps for a label in 1..N.
  int repPos(int label) const;
  long twistSteps(int label) const;
  // q_i - q_i^{-1} and q-power helpers resolved through representatives.
  const Coeff& qmi(int label) const;

  // Scale applied to the realization of x_i^-(mode): p_i.  The pairing
  // relation between the plus and minus currents fixes the product of the
  // two normalizations to p_i; we keep x^+ unscaled.
  int xminusScale(int pos) const { return alg_->cd().p(pos); }

 private:
  Element expSeriesCoeff(const std::vector<Element>& x, long m) const;

  Alg* alg_;
  Braid* br_;
  HSequence hseq_;
  mutable std::map<long, Element> betaCache_;
  mutable std::map<std::pair<int, int>, Element> loopPlusCache_, loopMinusCache_;
  mutable std::map<std::pair<int, int>, Element> imagCache_;
  mutable std::map<std::pair<int, long>, Element> aCache_;
  mutable std::mutex mx_;
};

}  // namespace qaffine
