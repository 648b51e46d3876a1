#include "qaffine/drinfeld.hpp"

namespace qaffine {

Drinfeld::Drinfeld(Alg& alg, Braid& br) : alg_(&alg), br_(&br), hseq_(alg.cd()) {}

int Drinfeld::repPos(int label) const {
  return alg_->cd().pos(alg_->cd().orbitRep(label));
}

long Drinfeld::twistSteps(int label) const {
  return alg_->cd().orbitSteps(label);
}

const Coeff& Drinfeld::qmi(int label) const {
  return alg_->qiMinusInv(repPos(label));
}

Element Drinfeld::rootVector(long k) const {
  {
    std::lock_guard lk(mx_);
    auto it = betaCache_.find(k);
    if (it != betaCache_.end()) return it->second;
  }
  Element v = alg_->E(hseq_.entry(k));
  if (k > 0) {
    for (long l = k - 1; l >= 1; --l) v = br_->applyT(hseq_.entry(l), v);
  } else {
    for (long l = k + 1; l <= 0; ++l) v = br_->applyTinv(hseq_.entry(l), v);
  }
  std::lock_guard lk(mx_);
  return betaCache_.emplace(k, std::move(v)).first->second;
}

Element Drinfeld::loopPlus(int pos, int k) const {
  if (k < 0) throw DomainError("loopPlus needs k >= 0");
  {
    std::lock_guard lk(mx_);
    auto it = loopPlusCache_.find({pos, k});
    if (it != loopPlusCache_.end()) return it->second;
  }
  Element v = br_->omegaOnGen(pos, -k, 'E', pos);
  std::lock_guard lk(mx_);
  return loopPlusCache_.emplace(std::make_pair(pos, k), std::move(v))
      .first->second;
}

Element Drinfeld::loopMinus(int pos, int k) const {
  if (k <= 0) throw DomainError("loopMinus needs k > 0");
  {
    std::lock_guard lk(mx_);
    auto it = loopMinusCache_.find({pos, k});
    if (it != loopMinusCache_.end()) return it->second;
  }
  Element v = br_->applyTinv(pos, alg_->E(pos));
  v = br_->applyOmega(pos, k, v);
  std::lock_guard lk(mx_);
  return loopMinusCache_.emplace(std::make_pair(pos, k), std::move(v))
      .first->second;
}

Element Drinfeld::xplus(int label, long mode) const {
  const CartanData& cd = alg_->cd();
  int pos = repPos(label);
  long t = twistSteps(label);
  int p = cd.p(pos);
  if (mode % p != 0) return Element();
  int k = static_cast<int>(mode / p);
  Element v = br_->applyHatOmega(pos, -k, alg_->E(pos));
  if (t != 0) v = Coeff(cd.omegaPow(-mode * t)) * v;
  return v;
}

Element Drinfeld::xminus(int label, long mode) const {
  const CartanData& cd = alg_->cd();
  int pos = repPos(label);
  long t = twistSteps(label);
  int p = cd.p(pos);
  if (mode % p != 0) return Element();
  int k = static_cast<int>(mode / p);
  Element v = br_->applyHatOmega(pos, k, alg_->F(pos));
  v = Coeff(xminusScale(pos)) * v;
  if (t != 0) v = Coeff(cd.omegaPow(-mode * t)) * v;
  return v;
}

Element Drinfeld::psibar(int pos, int k) const {
  if (k < 1) throw DomainError("psibar needs k >= 1");
  Element em = loopMinus(pos, k);
  Element e = alg_->E(pos);
  return alg_->mul(em, e) - alg_->qiPow(pos, -2) * alg_->mul(e, em);
}

Element Drinfeld::imaginary(int pos, int k) const {
  if (k < 1) throw DomainError("imaginary mode must be >= 1");
  {
    std::lock_guard lk(mx_);
    auto it = imagCache_.find({pos, k});
    if (it != imagCache_.end()) return it->second;
  }
  // (q_i - q_i^-1) sum_k E_{i,k p_i delta} u^k = log(1 + X),
  // X = (q_i - q_i^-1) sum_k psibar_i(p_i k) u^k
  const Coeff& qmiC = alg_->qiMinusInv(pos);
  std::vector<Element> X(k + 1);
  for (int l = 1; l <= k; ++l) X[l] = qmiC * psibar(pos, l);
  // log(1+X) = sum_{j>=1} (-1)^{j+1} X^j / j, truncated at u^k
  std::vector<Element> POW = X;  // X^1
  std::vector<Element> acc = X;
  for (int j = 2; j <= k; ++j) {
    std::vector<Element> nxt(k + 1);
    for (int a = 1; a + 1 <= k; ++a)
      for (int b = 1; a + b <= k; ++b) {
        if (POW[a].zero() || X[b].zero()) continue;
        nxt[a + b] += alg_->mul(POW[a], X[b]);
      }
    POW = std::move(nxt);
    Coeff c = Coeff::rational(j % 2 == 0 ? -1 : 1, j);
    for (int a = 1; a <= k; ++a)
      if (!POW[a].zero()) acc[a] += c * POW[a];
  }
  Element out = qmiC.inverse() * acc[k];
  std::lock_guard lk(mx_);
  return imagCache_.emplace(std::make_pair(pos, k), std::move(out)).first->second;
}

Element Drinfeld::aGen(int label, long mode) const {
  if (mode == 0) throw DomainError("a-generator mode must be nonzero");
  const CartanData& cd = alg_->cd();
  int pos = repPos(label);
  long t = twistSteps(label);
  int p = cd.p(pos);
  if (mode % p != 0) return Element();
  Element v;
  bool found = false;
  {
    std::lock_guard lk(mx_);
    auto it = aCache_.find({pos, std::abs(mode)});
    if (it != aCache_.end()) {
      v = it->second;
      found = true;
    }
  }
  if (!found) {
    int k = static_cast<int>(std::abs(mode) / p);
    v = imaginary(pos, k);
    if (cd.osign(pos) < 0 && k % 2 != 0) v = Coeff(-1) * v;
    v = alg_->mul(alg_->gammaPow(static_cast<int>(-std::abs(mode))), v);
    std::lock_guard lk(mx_);
    aCache_.emplace(std::make_pair(pos, std::abs(mode)), v);
  }
  if (mode < 0) v = alg_->phi(v);
  if (t != 0) v = Coeff(cd.omegaPow(-mode * t)) * v;
  return v;
}

Element Drinfeld::expSeriesCoeff(const std::vector<Element>& x, long m) const {
  // coefficient of u^m in exp(sum_{l>=1} x[l] u^l); x[0] unused
  std::vector<Element> pow(m + 1), out(m + 1);
  out[0] = alg_->one();
  if (m == 0) return out[0];
  for (long l = 1; l <= m; ++l) pow[l] = x[l];
  for (long j = 1;; ++j) {
    // pow = X^j / j!
    for (long a = 1; a <= m; ++a) out[a] += pow[a];
    if (j >= m) break;
    std::vector<Element> nxt(m + 1);
    bool any = false;
    for (long a = 1; a < m; ++a)
      for (long b = 1; a + b <= m; ++b) {
        if (pow[a].zero() || x[b].zero()) continue;
        nxt[a + b] += Coeff::rational(1, j + 1) * alg_->mul(pow[a], x[b]);
        any = true;
      }
    pow = std::move(nxt);
    if (!any) break;
  }
  return out[m];
}

Element Drinfeld::psiGen(int label, long mode) const {
  if (mode < 0) return Element();
  int pos = repPos(label);
  if (mode == 0) return alg_->K(pos);
  std::vector<Element> x(mode + 1);
  for (long l = 1; l <= mode; ++l) x[l] = alg_->qiMinusInv(pos) * aGen(label, l);
  Element series = expSeriesCoeff(x, mode);
  return alg_->mul(alg_->K(pos), series);
}

Element Drinfeld::phiGen(int label, long mode) const {
  if (mode > 0) return Element();
  int pos = repPos(label);
  if (mode == 0) return alg_->K(pos, -2);
  long m = -mode;
  std::vector<Element> x(m + 1);
  for (long l = 1; l <= m; ++l)
    x[l] = Coeff(-1) * alg_->qiMinusInv(pos) * aGen(label, -l);
  Element series = expSeriesCoeff(x, m);
  return alg_->mul(alg_->K(pos, -2), series);
}

Element Drinfeld::specialTopVector() const {
  const CartanData& cd = alg_->cd();
  if (!cd.isA2n2()) throw DomainError("special vector exists only for doubled types");
  const int n = cd.m() - 1;
  BraidWord w;
  for (int pos = 0; pos <= n; ++pos) w.push_back(BraidOp{BraidOp::T, pos, {}});
  Element v = alg_->E(0);
  for (int rep = 0; rep < n - 1; ++rep) v = br_->apply(w, v);
  return v;
}

}  // namespace qaffine
