#include "qaffine/weyl.hpp"

#include <algorithm>
#include <functional>

namespace qaffine {

WeylElt::WeylElt(int m) : m_(m), M_(m * m, 0) {}

WeylElt WeylElt::identity(const CartanData& cd) {
  WeylElt w(cd.m());
  for (int i = 0; i < cd.m(); ++i) w.at(i, i) = 1;
  return w;
}

WeylElt WeylElt::reflect(const CartanData& cd, int pos) {
  // s_i(alpha_j) = alpha_j - a_ij alpha_i
  WeylElt w = identity(cd);
  for (int j = 0; j < cd.m(); ++j) w.at(pos, j) -= cd.a(pos, j);
  return w;
}

WeylElt WeylElt::translation(const CartanData& cd, int pos) {
  // t_{omega_i}(alpha_j) = alpha_j - p_i delta_ij delta on finite nodes;
  // alpha_0 is forced by fixing delta.
  if (pos < 1 || pos >= cd.m())
    throw DomainError("translation index must be a finite node");
  WeylElt w = identity(cd);
  int p = cd.p(pos);
  for (int row = 0; row < cd.m(); ++row) {
    w.at(row, pos) -= static_cast<long>(p) * cd.deltaVec()[row];
    w.at(row, 0) += static_cast<long>(p) * cd.mark(pos) * cd.deltaVec()[row];
  }
  return w;
}

WeylElt WeylElt::permutation(const CartanData& cd, const std::vector<int>& tau) {
  WeylElt w(cd.m());
  for (int j = 0; j < cd.m(); ++j) w.at(tau[j], j) = 1;
  return w;
}

RootVec WeylElt::apply(const RootVec& v) const {
  RootVec r(m_, 0);
  for (int j = 0; j < m_; ++j) {
    if (v[j] == 0) continue;
    for (int i = 0; i < m_; ++i) r[i] += at(i, j) * v[j];
  }
  return r;
}

WeylElt WeylElt::operator*(const WeylElt& o) const {
  WeylElt r(m_);
  for (int i = 0; i < m_; ++i)
    for (int k = 0; k < m_; ++k) {
      long c = at(i, k);
      if (c == 0) continue;
      for (int j = 0; j < m_; ++j) r.at(i, j) += c * o.at(k, j);
    }
  return r;
}

bool WeylElt::isIdentity() const {
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::optional<std::vector<int>> WeylElt::permutationPart() const {
  std::vector<int> tau(m_, -1);
  std::vector<bool> hit(m_, false);
  for (int j = 0; j < m_; ++j) {
    int image = -1;
    for (int i = 0; i < m_; ++i) {
      if (at(i, j) == 0) continue;
      if (at(i, j) != 1 || image >= 0) return std::nullopt;
      image = i;
    }
    if (image < 0 || hit[image]) return std::nullopt;
    hit[image] = true;
    tau[j] = image;
  }
  return tau;
}

bool WeylElt::fixesDelta(const CartanData& cd) const {
  return apply(cd.deltaVec()) == cd.deltaVec();
}

bool ReducedWord::tauTrivial() const {
  for (std::size_t i = 0; i < tau.size(); ++i)
    if (tau[i] != static_cast<int>(i)) return false;
  return true;
}

namespace {

bool negativeVec(const RootVec& v) {
  bool any = false;
  for (long c : v)
    if (c > 0)
      return false;
    else if (c < 0)
      any = true;
  return any;
}

}  // namespace

ReducedWord reducedWord(const CartanData& cd, WeylElt w) {
  if (!w.fixesDelta(cd)) throw StructureError("matrix does not fix delta");
  ReducedWord out;
  std::vector<int> rev;
  const long maxSteps = 100000;
  for (long step = 0;; ++step) {
    if (step > maxSteps) throw StructureError("descent does not terminate");
    if (auto tau = w.permutationPart()) {
      // validate diagram automorphism
      for (int i = 0; i < cd.m(); ++i)
        for (int j = 0; j < cd.m(); ++j)
          if (cd.a((*tau)[i], (*tau)[j]) != cd.a(i, j))
            throw StructureError("permutation part is not a diagram automorphism");
      out.tau = *tau;
      break;
    }
    int found = -1;
    for (int i = 0; i < cd.m(); ++i) {
      RootVec col(cd.m());
      for (int r = 0; r < cd.m(); ++r) col[r] = w.at(r, i);
      if (negativeVec(col)) {
        found = i;
        break;
      }
    }
    if (found < 0) throw StructureError("no descent and no permutation part");
    rev.push_back(found);
    w = w * WeylElt::reflect(cd, found);
  }
  out.word.assign(rev.rbegin(), rev.rend());
  return out;
}

int weylLength(const CartanData& cd, const WeylElt& w) {
  return reducedWord(cd, w).length();
}

HSequence::HSequence(const CartanData& cd) {
  WeylElt prod = WeylElt::identity(cd);
  for (int pos = cd.m() - 1; pos >= 1; --pos)
    prod = prod * WeylElt::translation(cd, pos);
  ReducedWord rw = reducedWord(cd, prod);
  if (rw.word.empty()) throw StructureError("empty translation word");
  base_ = rw.word;
  tau_ = rw.tau;
  tauInv_.assign(tau_.size(), 0);
  for (std::size_t i = 0; i < tau_.size(); ++i) tauInv_[tau_[i]] = static_cast<int>(i);
}

int HSequence::entry(long l) const {
  const long m = period();
  long shifted = l - 1;
  long q = shifted >= 0 ? shifted / m : -(((-shifted) + m - 1) / m);
  long rem = shifted - q * m;  // 0 <= rem < m
  int node = base_[rem];
  // i_{l+m} = tau(i_l): shifting down by q periods applies tau^q
  long t = q;
  while (t > 0) {
    node = tau_[node];
    --t;
  }
  while (t < 0) {
    node = tauInv_[node];
    ++t;
  }
  return node;
}

RootVec HSequence::beta(const CartanData& cd, long k) const {
  RootVec v(cd.m(), 0);
  v[entry(k)] = 1;
  if (k > 0) {
    for (long l = k - 1; l >= 1; --l)
      v = WeylElt::reflect(cd, entry(l)).apply(v);
  } else {
    for (long l = k + 1; l <= 0; ++l)
      v = WeylElt::reflect(cd, entry(l)).apply(v);
  }
  return v;
}

std::vector<PosRoot> positiveRoots(const CartanData& cd, long maxDelta) {
  std::vector<PosRoot> out;
  const int m = cd.m();
  auto embed = [&](const RootVec& fin, long k) {
    RootVec v(m, 0);
    for (int i = 1; i < m; ++i) v[i] = fin[i - 1] + k * cd.deltaVec()[i];
    v[0] = k;
    return v;
  };
  auto embedNeg = [&](const RootVec& fin, long k) {
    RootVec v(m, 0);
    for (int i = 1; i < m; ++i) v[i] = k * cd.deltaVec()[i] - fin[i - 1];
    v[0] = k;
    return v;
  };
  if (cd.isA2n2()) {
    for (const auto& fin : cd.finitePositive()) {
      for (long k = 0; k <= maxDelta; ++k)
        out.push_back({embed(fin, k), RootClass::Greater, k, 0});
      for (long k = 1; k <= maxDelta; ++k)
        out.push_back({embedNeg(fin, k), RootClass::Less, k, 0});
      if (cd.finiteNorm2Twice(fin) == 2) {  // (alpha, alpha) = 1: short
        RootVec dbl(fin);
        for (auto& c : dbl) c *= 2;
        // (2k+1) delta +- 2 alpha; the minus family starts at delta - 2alpha
        for (long k = 0; 2 * k + 1 <= maxDelta; ++k) {
          out.push_back({embed(dbl, 2 * k + 1), RootClass::Greater, 2 * k + 1, 0});
          out.push_back({embedNeg(dbl, 2 * k + 1), RootClass::Less, 2 * k + 1, 0});
        }
      }
    }
  } else {
    for (const auto& fin : cd.finitePositive()) {
      long dAlpha = cd.finiteNorm2Twice(fin) / 4;  // (alpha,alpha)/2
      for (long k = 0; k * dAlpha <= maxDelta; ++k)
        out.push_back({embed(fin, k * dAlpha), RootClass::Greater, k * dAlpha, 0});
      for (long k = 1; k * dAlpha <= maxDelta; ++k)
        out.push_back({embedNeg(fin, k * dAlpha), RootClass::Less, k * dAlpha, 0});
    }
  }
  for (long k = 1; k <= maxDelta; ++k)
    for (int i = 1; i < m; ++i) {
      RootVec v(m, 0);
      for (int j = 0; j < m; ++j) v[j] = k * cd.deltaVec()[j];
      out.push_back({v, RootClass::Imaginary, k, i});
    }
  std::sort(out.begin(), out.end(), [](const PosRoot& x, const PosRoot& y) {
    if (x.deltaCoeff != y.deltaCoeff) return x.deltaCoeff < y.deltaCoeff;
    if (x.cls != y.cls) return static_cast<int>(x.cls) < static_cast<int>(y.cls);
    if (x.v != y.v) return x.v < y.v;
    return x.node < y.node;
  });
  return out;
}

ThetaPath thetaPath(const CartanData& cd) {
  ThetaPath tp;
  const int m = cd.m();
  // longest element by greedy ascent in W_0
  WeylElt w = WeylElt::identity(cd);
  std::vector<int> word;
  for (;;) {
    int found = -1;
    for (int i = 1; i < m; ++i) {
      RootVec col(m, 0);
      for (int r = 0; r < m; ++r) col[r] = w.at(r, i);
      bool positive = true;
      for (int r = 1; r < m; ++r)
        if (col[r] < 0) positive = false;
      if (positive) {
        found = i;
        break;
      }
    }
    if (found < 0) break;
    w = w * WeylElt::reflect(cd, found);
    word.push_back(found);
  }
  // w maps all finite simple roots negative; the letters were appended by
  // right multiplication, so `word` is already in product order
  tp.w0.word.assign(word.begin(), word.end());
  tp.w0.tau.resize(m);
  for (int i = 0; i < m; ++i) tp.w0.tau[i] = i;

  // chain of simple-root additions reaching theta-bar; every partial sum must
  // be a root (for the doubled-top types also twice a short root qualifies)
  auto isChainRoot = [&](const RootVec& fullVec) {
    RootVec fin(m - 1);
    for (int i = 1; i < m; ++i) fin[i - 1] = fullVec[i];
    if (cd.isFiniteRoot(fin)) return true;
    if (cd.isA2n2()) {
      bool even = true;
      for (long c : fin) even = even && (c % 2 == 0);
      if (even) {
        RootVec half(fin);
        for (auto& c : half) c /= 2;
        if (cd.isFiniteRoot(half) && cd.finiteNorm2Twice(half) == 2) return true;
      }
    }
    return false;
  };
  const RootVec& target = cd.thetaBar();
  long height = 0;
  for (int i = 1; i < m; ++i) height += target[i];
  std::vector<int> path;
  RootVec cur(m, 0);
  std::function<bool(long)> dfs = [&](long step) -> bool {
    if (step == height) return cur == target;
    for (int i = 1; i < m; ++i) {
      if (cur[i] + 1 > target[i]) continue;
      cur[i]++;
      if (isChainRoot(cur) && dfs(step + 1)) {
        path.push_back(i);
        return true;
      }
      cur[i]--;
    }
    return false;
  };
  if (!dfs(0)) throw StructureError("no simple-root chain to theta");
  std::reverse(path.begin(), path.end());
  tp.path = path;

  RootVec partial(m, 0);
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    partial[path[k]]++;
    RootVec alpha(m, 0);
    alpha[path[k + 1]] = 1;
    tp.eps.push_back(cd.pairing(partial, alpha));
  }
  return tp;
}

}  // namespace qaffine
