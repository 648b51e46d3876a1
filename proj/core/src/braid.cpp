#include "qaffine/braid.hpp"

namespace qaffine {

BraidWord inverseWord(const BraidWord& ops) {
  BraidWord inv;
  inv.reserve(ops.size());
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    BraidOp o = *it;
    switch (o.kind) {
      case BraidOp::T: o.kind = BraidOp::Tinv; break;
      case BraidOp::Tinv: o.kind = BraidOp::T; break;
      case BraidOp::Tau: o.kind = BraidOp::TauInv; break;
      case BraidOp::TauInv: o.kind = BraidOp::Tau; break;
    }
    inv.push_back(std::move(o));
  }
  return inv;
}

Braid::Braid(Alg& alg) : alg_(&alg) {
  const CartanData& cd = alg.cd();
  const int m = cd.m();
  tE_.assign(m, std::vector<Element>(m));
  tF_.assign(m, std::vector<Element>(m));
  tEinv_.assign(m, std::vector<Element>(m));
  tFinv_.assign(m, std::vector<Element>(m));
  omegaWords_.resize(m);
  for (int i = 0; i < m; ++i) {
    // T_i(E_i) = -F_i K_i ; T_i(F_i) = -K_i^-1 E_i
    tE_[i][i] = (Coeff(-1) * alg.mul(alg.F(i), alg.K(i)));
    tF_[i][i] = (Coeff(-1) * alg.mul(alg.K(i, -2), alg.E(i)));
    // T_i^-1(E_i) = -K_i^-1 F_i ; T_i^-1(F_i) = -E_i K_i
    tEinv_[i][i] = (Coeff(-1) * alg.mul(alg.K(i, -2), alg.F(i)));
    tFinv_[i][i] = (Coeff(-1) * alg.mul(alg.E(i), alg.K(i)));
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const int aij = cd.a(i, j);
      Element e, einv, f, finv;
      for (int s = 0; s <= -aij; ++s) {
        // divided powers E_i^(n) = E_i^n / [n]_i!
        Coeff div = (qfactorial(-aij - s, cd.d2(i)) * qfactorial(s, cd.d2(i)))
                        .inverse();
        Coeff sign((s - aij) % 2 == 0 ? 1 : -1);
        Coeff qs = alg.qiPow(i, -s) * sign * div;
        Coeff qsb = alg.qiPow(i, s) * sign * div;
        Word head(static_cast<std::size_t>(-aij - s), static_cast<unsigned char>(i));
        Word tail(static_cast<std::size_t>(s), static_cast<unsigned char>(i));
        Word we = head;
        we.push_back(static_cast<unsigned char>(j));
        we += tail;
        Word weInv = tail;
        weInv.push_back(static_cast<unsigned char>(j));
        weInv += head;
        e += qs * alg.Eword(we);
        einv += qs * alg.Eword(weInv);
        // F-side words mirror the E-side with q-powers conjugated
        Element fw = alg.one(), fwInv = alg.one();
        for (unsigned char c : weInv) fw = alg.mul(fw, alg.F(c));
        for (unsigned char c : we) fwInv = alg.mul(fwInv, alg.F(c));
        f += qsb * fw;
        finv += qsb * fwInv;
      }
      tE_[i][j] = std::move(e);
      tEinv_[i][j] = std::move(einv);
      tF_[i][j] = std::move(f);
      tFinv_[i][j] = std::move(finv);
    }
  }
}

KExp Braid::reflectK(int pos, const KExp& k2) const {
  // s_i(mu) in coordinates: c_i' = c_i - sum_j a_ij c_j
  const CartanData& cd = alg_->cd();
  KExp out = k2;
  long s = 0;
  for (int j = 0; j < cd.m(); ++j) s += static_cast<long>(cd.a(pos, j)) * k2[j];
  out[pos] = static_cast<int>(k2[pos] - s);
  return out;
}

Element Braid::applyT(int pos, const Element& x) const {
  Element out;
  for (auto& [t, c] : x.terms()) {
    Element acc = alg_->scalar(c);
    for (unsigned char l : t.f) acc = alg_->mul(acc, tF_[pos][l]);
    bool hasK = false;
    for (int v : t.k) hasK = hasK || v != 0;
    if (hasK) acc = alg_->mul(acc, alg_->Kmono(reflectK(pos, t.k)));
    for (unsigned char l : t.e) acc = alg_->mul(acc, tE_[pos][l]);
    out += acc;
  }
  return out;
}

Element Braid::applyTinv(int pos, const Element& x) const {
  Element out;
  for (auto& [t, c] : x.terms()) {
    Element acc = alg_->scalar(c);
    for (unsigned char l : t.f) acc = alg_->mul(acc, tFinv_[pos][l]);
    bool hasK = false;
    for (int v : t.k) hasK = hasK || v != 0;
    if (hasK) acc = alg_->mul(acc, alg_->Kmono(reflectK(pos, t.k)));
    for (unsigned char l : t.e) acc = alg_->mul(acc, tEinv_[pos][l]);
    out += acc;
  }
  return out;
}

Element Braid::applyTau(const std::vector<int>& tau, const Element& x,
                        bool inverse) const {
  const CartanData& cd = alg_->cd();
  std::vector<int> perm = tau;
  if (inverse) {
    for (std::size_t i = 0; i < tau.size(); ++i) perm[tau[i]] = static_cast<int>(i);
  }
  Element out;
  for (auto& [t, c] : x.terms()) {
    TermKey nt;
    nt.f.reserve(t.f.size());
    nt.e.reserve(t.e.size());
    for (unsigned char l : t.f) nt.f.push_back(static_cast<unsigned char>(perm[l]));
    for (unsigned char l : t.e) nt.e.push_back(static_cast<unsigned char>(perm[l]));
    nt.k.assign(cd.m(), 0);
    for (int i = 0; i < cd.m(); ++i) nt.k[perm[i]] = t.k[i];
    out.add(nt, c);
  }
  return alg_->normal(out);
}

Element Braid::apply(const BraidWord& ops, const Element& x) const {
  Element cur = x;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    switch (it->kind) {
      case BraidOp::T: cur = applyT(it->node, cur); break;
      case BraidOp::Tinv: cur = applyTinv(it->node, cur); break;
      case BraidOp::Tau: cur = applyTau(it->tau, cur); break;
      case BraidOp::TauInv: cur = applyTau(it->tau, cur, true); break;
    }
  }
  return cur;
}

const ReducedWord& Braid::omegaWord(int pos) const {
  std::lock_guard lk(mx_);
  if (omegaWords_[pos].word.empty() && omegaWords_[pos].tau.empty())
    omegaWords_[pos] =
        reducedWord(alg_->cd(), WeylElt::translation(alg_->cd(), pos));
  return omegaWords_[pos];
}

BraidWord Braid::omegaOps(int pos, int power) const {
  const ReducedWord& rw = omegaWord(pos);
  BraidWord one;
  for (int i : rw.word) one.push_back(BraidOp{BraidOp::T, i, {}});
  if (!rw.tauTrivial()) one.push_back(BraidOp{BraidOp::Tau, -1, rw.tau});
  if (power >= 0) {
    BraidWord out;
    for (int k = 0; k < power; ++k) out.insert(out.end(), one.begin(), one.end());
    return out;
  }
  BraidWord inv = inverseWord(one);
  BraidWord out;
  for (int k = 0; k < -power; ++k) out.insert(out.end(), inv.begin(), inv.end());
  return out;
}

Element Braid::applyOmega(int pos, int power, const Element& x) const {
  if (power == 0) return x;
  BraidWord step = omegaOps(pos, power > 0 ? 1 : -1);
  Element cur = x;
  for (int k = 0; k < std::abs(power); ++k) cur = apply(step, cur);
  return cur;
}

Element Braid::omegaOnGen(int pos, int power, char kind, int node) const {
  if (power == 0) {
    switch (kind) {
      case 'E': return alg_->E(node);
      case 'F': return alg_->F(node);
      case 'K': return alg_->K(node);
    }
    throw DomainError("unknown generator kind");
  }
  {
    std::lock_guard lk(mx_);
    auto it = genCache_.find({pos, power, kind, node});
    if (it != genCache_.end()) return it->second;
  }
  Element prev = omegaOnGen(pos, power > 0 ? power - 1 : power + 1, kind, node);
  Element val = applyOmega(pos, power > 0 ? 1 : -1, prev);
  std::lock_guard lk(mx_);
  return genCache_.emplace(std::make_tuple(pos, power, kind, node), std::move(val))
      .first->second;
}

Element Braid::applyHatOmega(int pos, int power, const Element& x) const {
  Element v = applyOmega(pos, power, x);
  if (alg_->cd().osign(pos) < 0 && (power % 2 != 0)) v = Coeff(-1) * v;
  return v;
}

const Element& Braid::tImageE(int i, int j, bool inv) const {
  return inv ? tEinv_[i][j] : tE_[i][j];
}

const Element& Braid::tImageF(int i, int j, bool inv) const {
  return inv ? tFinv_[i][j] : tF_[i][j];
}

}  // namespace qaffine
