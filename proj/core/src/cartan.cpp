#include "qaffine/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace qaffine {

TypeTag parseTypeTag(const std::string& s) {
  TypeTag t;
  if (s.empty()) throw DomainError("empty type tag");
  t.letter = s[0];
  std::size_t i = 1;
  std::string num;
  while (i < s.size() && isdigit(s[i])) num += s[i++];
  if (num.empty()) throw DomainError("type tag missing rank: " + s);
  t.N = std::stoi(num);
  if (i == s.size()) {
    t.r = 1;
  } else if (s[i] == '~') {
    std::string tw = s.substr(i + 1);
    if (tw.empty() || !std::all_of(tw.begin(), tw.end(), ::isdigit))
      throw DomainError("bad twist order in type tag: " + s);
    t.r = std::stoi(tw);
  } else {
    throw DomainError("unrecognized type tag: " + s);
  }
  if (t.letter != 'A' && t.letter != 'D' && t.letter != 'E')
    throw DomainError("unsupported family letter in: " + s);
  if (t.r != 1 && t.r != 2 && t.r != 3)
    throw DomainError("unsupported twist order in: " + s);
  return t;
}

CartanData::CartanData(TypeTag tag) : tag_(tag) {
  N_ = tag.N;
  r_ = tag.r;
  buildSimplyLaced();
  fold();
  finishDerived();
  validate();
}

void CartanData::buildSimplyLaced() {
  const char L = tag_.letter;
  const int N = N_;
  auto edge = [&](int i, int j) {
    A_[i][j] = -1;
    A_[j][i] = -1;
  };
  A_.assign(N + 1, std::vector<int>(N + 1, 0));
  for (int i = 1; i <= N; ++i) A_[i][i] = 2;
  sigma_.assign(N + 1, 0);
  for (int i = 1; i <= N; ++i) sigma_[i] = i;

  if (L == 'A') {
    if (N < 2) throw DomainError("type A needs rank >= 2");
    for (int i = 1; i < N; ++i) edge(i, i + 1);
    if (r_ == 2)
      for (int i = 1; i <= N; ++i) sigma_[i] = N + 1 - i;
    else if (r_ == 3)
      throw DomainError("type A has no order-3 diagram automorphism");
  } else if (L == 'D') {
    // chain 1..N-2, with N-1 and N attached to N-2
    if (N < 3) throw DomainError("type D needs rank >= 3");
    for (int i = 1; i + 1 <= N - 2; ++i) edge(i, i + 1);
    edge(N - 2, N - 1);
    edge(N - 2, N);
    if (r_ == 2) {
      sigma_[N - 1] = N;
      sigma_[N] = N - 1;
    } else if (r_ == 3) {
      if (N != 4) throw DomainError("order-3 twist only for D4");
      sigma_[1] = 3;
      sigma_[3] = 4;
      sigma_[4] = 1;
    }
  } else {  // E
    if (N == 6) {
      // chain 1-2-3-4-5, node 6 attached to 3
      for (int i = 1; i < 5; ++i) edge(i, i + 1);
      edge(3, 6);
      if (r_ == 2) {
        for (int i = 1; i <= 5; ++i) sigma_[i] = 6 - i;
      } else if (r_ == 3) {
        throw DomainError("E6 has no order-3 diagram automorphism");
      }
    } else if ((N == 7 || N == 8) && r_ == 1) {
      for (int i = 1; i < N - 1; ++i) edge(i, i + 1);
      edge(N, N == 7 ? 3 : 5);
    } else {
      throw DomainError("unsupported E type");
    }
  }
}

void CartanData::fold() {
  const int N = N_;
  // orbits and representatives
  orbitRep_.assign(N + 1, 0);
  orbitSteps_.assign(N + 1, 0);
  std::vector<int> reps;
  std::vector<bool> seen(N + 1, false);
  for (int i = 1; i <= N; ++i) {
    if (seen[i]) continue;
    int rep = i, j = i;
    std::vector<int> orbit;
    do {
      orbit.push_back(j);
      rep = std::min(rep, j);
      j = sigma_[j];
    } while (j != i);
    for (int x : orbit) seen[x] = true;
    for (int x : orbit) {
      int t = 0, y = x;
      while (y != rep) {
        y = sigma_[y];
        ++t;
      }
      orbitRep_[x] = rep;
      orbitSteps_[x] = t;
    }
    reps.push_back(rep);
  }
  std::sort(reps.begin(), reps.end());

  m_ = static_cast<int>(reps.size()) + 1;
  labels_.assign(m_, 0);
  posOfLabel_.assign(N + 1, -1);
  for (int k = 0; k < m_ - 1; ++k) {
    labels_[k + 1] = reps[k];
    posOfLabel_[reps[k]] = k + 1;
  }

  a_.assign(m_, std::vector<int>(m_, 0));
  d2_.assign(m_, 0);
  p_.assign(m_, 1);
  for (int k = 1; k < m_; ++k) {
    int i = labels_[k];
    p_[k] = (sigma_[i] == i) ? r_ : 1;
    // d_i = (sum_s A_{i, sigma^s(i)}) / 2, stored doubled
    d2_[k] = foldedEntry(i, i);
    if (d2_[k] <= 0) throw StructureError("nonpositive symmetrizer");
  }
  for (int k = 1; k < m_; ++k) {
    int i = labels_[k];
    for (int l = 1; l < m_; ++l) {
      int j = labels_[l];
      int twice = 2 * foldedEntry(i, j);  // = d2_i * a_ij
      if (twice % d2_[k] != 0) throw StructureError("non-integral folded entry");
      a_[k][l] = twice / d2_[k];
    }
  }
}

void CartanData::finishDerived() {
  // finite positive roots of g0 by reflection closure over the finite block
  const int n = m_ - 1;
  std::set<RootVec> pos;
  std::vector<RootVec> queue;
  for (int k = 1; k <= n; ++k) {
    RootVec v(n, 0);
    v[k - 1] = 1;
    pos.insert(v);
    queue.push_back(v);
  }
  auto reflectFin = [&](const RootVec& v, int k) {
    // s_k(v) = v - <v, alpha_k^vee> alpha_k ; <alpha_j, alpha_k^vee> = a_kj
    long c = 0;
    for (int j = 1; j <= n; ++j) c += a_[k][j] * v[j - 1];
    RootVec w = v;
    w[k - 1] -= c;
    return w;
  };
  while (!queue.empty()) {
    RootVec v = queue.back();
    queue.pop_back();
    for (int k = 1; k <= n; ++k) {
      RootVec w = reflectFin(v, k);
      bool positive = std::all_of(w.begin(), w.end(), [](long x) { return x >= 0; });
      if (positive && pos.insert(w).second) queue.push_back(w);
    }
  }
  finitePos_.assign(pos.begin(), pos.end());

  // theta-bar: highest (short, for r>1) root; doubled for A_{2n}^{(2)}
  long minNorm = 0;
  std::map<RootVec, long> norms;
  for (const auto& v : finitePos_) {
    long n2 = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) n2 += v[i - 1] * v[j - 1] * d2_[i] * a_[i][j];
    norms[v] = n2;  // = 2(alpha,alpha)... actually d2*a = 2*(ai,aj), so n2 = 2(v,v)
    if (minNorm == 0 || n2 < minNorm) minNorm = n2;
  }
  auto height = [](const RootVec& v) {
    long h = 0;
    for (long c : v) h += c;
    return h;
  };
  RootVec best;
  long bestHt = -1;
  for (const auto& [v, n2] : norms) {
    bool eligible = (r_ == 1) || (n2 == minNorm);
    if (eligible && height(v) > bestHt) {
      bestHt = height(v);
      best = v;
    }
  }
  thetaBar_.assign(m_, 0);
  for (int k = 1; k < m_; ++k) thetaBar_[k] = best[k - 1] * (isA2n2() ? 2 : 1);

  // pairing on the finite part extends to node 0 through theta-bar
  auto pairFin = [&](const RootVec& x, const RootVec& y) {
    long s = 0;
    for (int i = 1; i < m_; ++i)
      for (int j = 1; j < m_; ++j) s += x[i] * y[j] * d2_[i] * a_[i][j];
    if (s % 2 != 0) throw StructureError("odd doubled pairing");
    return s / 2;
  };
  long tt = pairFin(thetaBar_, thetaBar_);
  if (tt % 2 != 0) throw StructureError("theta-bar norm not even");
  d2_[0] = static_cast<int>(tt);  // d_0 = (theta,theta)/2, d2_0 = (theta,theta)
  a_[0][0] = 2;
  for (int j = 1; j < m_; ++j) {
    RootVec aj(m_, 0);
    aj[j] = 1;
    long tj = pairFin(thetaBar_, aj);
    // a_0j = -(theta, alpha_j)/d_0 ; a_j0 = -(theta, alpha_j)/d_j
    if ((2 * tj) % d2_[0] != 0 || (2 * tj) % d2_[j] != 0)
      throw StructureError("non-integral affine extension");
    a_[0][j] = static_cast<int>(-2 * tj / d2_[0]);
    a_[j][0] = static_cast<int>(-2 * tj / d2_[j]);
  }

  marks_.assign(m_, 0);
  marks_[0] = 1;
  for (int k = 1; k < m_; ++k) marks_[k] = static_cast<int>(thetaBar_[k]);
  delta_ = RootVec(marks_.begin(), marks_.end());

  gp_.assign(m_, std::vector<int>(m_, 0));
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) {
      int twice = d2_[i] * a_[i][j];
      if (twice % 2 != 0) throw StructureError("half-integral pairing entry");
      gp_[i][j] = twice / 2;
    }

  h_ = 0;
  for (int k = 0; k < m_; ++k) h_ += marks_[k];

  // o: parity 2-coloring of the finite Dynkin diagram by BFS depth from the
  // lowest-index node
  osign_.assign(m_, 1);
  std::vector<int> depth(m_, -1);
  std::vector<int> bfs{1};
  depth[1] = 0;
  for (std::size_t qi = 0; qi < bfs.size(); ++qi) {
    int u = bfs[qi];
    for (int v = 1; v < m_; ++v)
      if (v != u && a_[u][v] < 0 && depth[v] < 0) {
        depth[v] = depth[u] + 1;
        bfs.push_back(v);
      }
  }
  for (int k = 1; k < m_; ++k) {
    if (depth[k] < 0) throw StructureError("finite diagram not connected");
    osign_[k] = (depth[k] % 2 == 0) ? 1 : -1;
  }
}

int CartanData::foldedEntry(int i, int j) const {
  int s = 0, jj = j;
  for (int t = 0; t < r_; ++t) {
    s += A_[i][jj];
    jj = sigma_[jj];
  }
  return s;
}

std::vector<int> CartanData::sigmaOrbit(int i) const {
  if (i < 1 || i > N_) throw DomainError("node out of range");
  std::vector<int> orbit;
  int rep = orbitRep_[i], j = rep;
  do {
    orbit.push_back(j);
    j = sigma_[j];
  } while (j != rep);
  return orbit;
}

int CartanData::orbitRep(int label) const {
  if (label < 1 || label > N_) throw DomainError("node out of range");
  return orbitRep_[label];
}

int CartanData::orbitSteps(int label) const {
  if (label < 1 || label > N_) throw DomainError("node out of range");
  return orbitSteps_[label];
}

int CartanData::pos(int label) const {
  if (label == 0) return 0;
  if (label < 1 || label > N_ || posOfLabel_[label] < 0)
    throw DomainError("node label " + std::to_string(label) +
                      " is not an orbit representative");
  return posOfLabel_[label];
}

bool CartanData::hasLabel(int label) const {
  if (label == 0) return true;
  return label >= 1 && label <= N_ && posOfLabel_[label] >= 0;
}

long CartanData::pairing(const RootVec& x, const RootVec& y) const {
  long s = 0;
  for (int i = 0; i < m_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < m_; ++j) s += x[i] * y[j] * gp_[i][j];
  }
  return s;
}

Cyclo CartanData::omegaPow(long k) const {
  if (r_ == 1) return Cyclo(1);
  if (r_ == 2) return Cyclo((k % 2 == 0) ? 1 : -1);
  return Cyclo::omegaPow(k);
}

long CartanData::finiteNorm2Twice(const RootVec& fin) const {
  RootVec v(m_, 0);
  for (int k = 1; k < m_; ++k) v[k] = fin[k - 1];
  return 2 * pairing(v, v);
}

bool CartanData::isFiniteRoot(const RootVec& fin) const {
  return std::find(finitePos_.begin(), finitePos_.end(), fin) != finitePos_.end();
}

void CartanData::validate() const {
  // sigma is a diagram automorphism with sigma^r = id
  for (int i = 1; i <= N_; ++i) {
    int j = i;
    for (int t = 0; t < r_; ++t) j = sigma_[j];
    if (j != i) throw StructureError("sigma^r is not the identity");
    for (int k = 1; k <= N_; ++k)
      if (A_[sigma_[i]][sigma_[k]] != A_[i][k])
        throw StructureError("sigma does not preserve the Cartan matrix");
  }
  // generalized Cartan matrix shape + symmetrizability
  for (int i = 0; i < m_; ++i) {
    if (a_[i][i] != 2) throw StructureError("affine diagonal entry != 2");
    for (int j = 0; j < m_; ++j) {
      if (i != j && a_[i][j] > 0) throw StructureError("positive off-diagonal");
      if ((a_[i][j] == 0) != (a_[j][i] == 0))
        throw StructureError("asymmetric zero pattern");
      if (d2_[i] * a_[i][j] != d2_[j] * a_[j][i])
        throw StructureError("symmetrizability fails");
    }
  }
  // delta annihilates every row, r_0 = 1
  if (marks_[0] != 1) throw StructureError("r_0 != 1");
  for (int i = 0; i < m_; ++i) {
    long s = 0;
    for (int j = 0; j < m_; ++j) s += static_cast<long>(a_[i][j]) * marks_[j];
    if (s != 0) throw StructureError("delta is not isotropic for row " +
                                     std::to_string(i));
  }
  // (delta, alpha_i) = 0 via the pairing matrix
  for (int i = 0; i < m_; ++i) {
    long s = 0;
    for (int j = 0; j < m_; ++j) s += static_cast<long>(gp_[j][i]) * marks_[j];
    if (s != 0) throw StructureError("(delta, alpha_i) != 0");
  }
  // p_i rule
  for (int k = 1; k < m_; ++k) {
    int i = labels_[k];
    int expect = (sigma_[i] == i) ? r_ : 1;
    if (p_[k] != expect) throw StructureError("p_i rule violated");
  }
  // d_i a_ij = sum_s A_{i, sigma^s(j)} on the finite block
  for (int k = 1; k < m_; ++k)
    for (int l = 1; l < m_; ++l)
      if (d2_[k] * a_[k][l] != 2 * foldedEntry(labels_[k], labels_[l]))
        throw StructureError("folded-entry identity fails");
}

std::string CartanData::describe() const {
  std::ostringstream os;
  os << "type " << tag_.str() << ": N=" << N_ << " r=" << r_ << "\n";
  os << "sigma:";
  for (int i = 1; i <= N_; ++i) os << " " << i << "->" << sigma_[i];
  os << "\nnodes:";
  for (int k = 0; k < m_; ++k) os << " " << labels_[k];
  os << "\naffine Cartan matrix (rows/cols in node order):\n";
  for (int i = 0; i < m_; ++i) {
    os << " ";
    for (int j = 0; j < m_; ++j) os << " " << a_[i][j];
    os << "\n";
  }
  os << "d:";
  for (int k = 0; k < m_; ++k) {
    if (d2_[k] % 2 == 0)
      os << " " << d2_[k] / 2;
    else
      os << " " << d2_[k] << "/2";
  }
  os << "\np:";
  for (int k = 1; k < m_; ++k) os << " " << p_[k];
  os << "\ndelta marks:";
  for (int k = 0; k < m_; ++k) os << " " << marks_[k];
  os << "\no:";
  for (int k = 1; k < m_; ++k) os << " " << osign_[k];
  os << "\n";
  return os.str();
}

}  // namespace qaffine
