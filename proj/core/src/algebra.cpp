#include "qaffine/algebra.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <tuple>

namespace qaffine {

Element Element::operator-() const {
  Element r;
  for (auto& [t, c] : t_) r.t_.emplace(t, -c);
  return r;
}

Element& Element::operator+=(const Element& o) {
  for (auto& [t, c] : o.t_) add(t, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (auto& [t, c] : o.t_) add(t, -c);
  return *this;
}

Element Element::scaled(const Coeff& c) const {
  Element r;
  if (c.zero()) return r;
  for (auto& [t, cc] : t_) r.t_.emplace(t, cc * c);
  return r;
}

std::size_t Element::maxELen() const {
  std::size_t m = 0;
  for (auto& [t, c] : t_) m = std::max(m, t.e.size());
  return m;
}

std::size_t Element::maxFLen() const {
  std::size_t m = 0;
  for (auto& [t, c] : t_) m = std::max(m, t.f.size());
  return m;
}

// ---------------------------------------------------------------------------
// Rewrite

Rewrite::Rewrite(const CartanData& cd) : cd_(&cd) {
  for (int i = 0; i < cd.m(); ++i)
    for (int j = 0; j < cd.m(); ++j) {
      if (i == j) continue;
      auto elem = serreElement(i, j);
      // normalize against the leading term; identical leading words can only
      // come from the transposed a_ij = 0 relation, which is proportional
      Word lead = elem.back().second;
      if (byLhs_.find(lead) != byLhs_.end()) continue;
      addRule(std::move(elem));
    }
}

std::vector<std::pair<Coeff, Word>> Rewrite::serreElement(int i, int j) const {
  if (i == j) throw DomainError("Serre element needs distinct nodes");
  const int mExp = 1 - cd_->a(i, j);
  std::map<Word, Coeff> acc;
  for (int s = 0; s <= mExp; ++s) {
    Word w;
    w.append(mExp - s, static_cast<unsigned char>(i));
    w.push_back(static_cast<unsigned char>(j));
    w.append(s, static_cast<unsigned char>(i));
    Coeff c = qbinomial(mExp, s, cd_->d2(i));
    if (s % 2) c = -c;
    acc[w] += c;
  }
  std::vector<std::pair<Coeff, Word>> out;
  for (auto& [w, c] : acc)
    if (!c.zero()) out.emplace_back(c, w);
  return out;
}

void Rewrite::addRule(std::vector<std::pair<Coeff, Word>> elem) {
  // orient: the degree-lex largest word becomes the left side (terms are
  // sorted by word and homogeneous in length, so the last one leads)
  Rule r;
  r.lhs = elem.back().second;
  Coeff leadInv = elem.back().first.inverse();
  for (std::size_t k = 0; k + 1 < elem.size(); ++k)
    r.rhs.terms.emplace_back(-(elem[k].first * leadInv), elem[k].second);
  if (byLhs_.find(r.lhs) != byLhs_.end())
    throw StructureError("duplicate rewrite rule");
  byLhs_.emplace(r.lhs, static_cast<int>(rules_.size()));
  if (std::find(lens_.begin(), lens_.end(), static_cast<int>(r.lhs.size())) ==
      lens_.end()) {
    lens_.push_back(static_cast<int>(r.lhs.size()));
    std::sort(lens_.begin(), lens_.end());
  }
  rules_.push_back(std::move(r));
}

int Rewrite::completedDegree() const {
  std::shared_lock lk(rulesMx_);
  return completed_;
}

std::size_t Rewrite::ruleCount() const {
  std::shared_lock lk(rulesMx_);
  return rules_.size();
}

std::optional<Rewrite::Redex> Rewrite::findRedex(WordView w) const {
  for (std::size_t p = 0; p < w.size(); ++p)
    for (int L : lens_) {
      if (p + L > w.size()) break;
      auto it = byLhs_.find(w.substr(p, L));
      if (it != byLhs_.end()) return Redex{p, it->second};
    }
  return std::nullopt;
}

bool Rewrite::isIrreducible(WordView w) const {
  std::shared_lock lk(rulesMx_);
  return !findRedex(w).has_value();
}

Rewrite::Rhs Rewrite::reduceNoLock(const Word& w,
                                   std::map<Word, Rhs>* layerMemo) const {
  if (layerMemo) {
    auto it = layerMemo->find(w);
    if (it != layerMemo->end()) return it->second;
  } else {
    std::shared_lock mlk(memoMx_);
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
  }
  Rhs out;
  auto redex = findRedex(w);
  if (!redex) {
    out.terms.emplace_back(Coeff(1), w);
  } else {
    const Rule& r = rules_[redex->rule];
    std::map<Word, Coeff> acc;
    for (auto& [c, u] : r.rhs.terms) {
      Word w2 = w.substr(0, redex->pos);
      w2 += u;
      w2 += w.substr(redex->pos + r.lhs.size());
      Rhs sub = reduceNoLock(w2, layerMemo);
      for (auto& [c2, x] : sub.terms) {
        auto [it, fresh] = acc.emplace(x, c * c2);
        if (!fresh) {
          it->second += c * c2;
          if (it->second.zero()) acc.erase(it);
        }
      }
    }
    for (auto& [x, c] : acc) out.terms.emplace_back(c, x);
  }
  if (layerMemo) {
    layerMemo->emplace(w, out);
  } else {
    std::unique_lock mlk(memoMx_);
    memo_.emplace(w, out);
  }
  return out;
}

Rewrite::Rhs Rewrite::reduce(const Word& w) const {
  std::shared_lock lk(rulesMx_);
  if (static_cast<int>(w.size()) > completed_)
    throw StructureError("reduction requested past completed degree");
  return reduceNoLock(w, nullptr);
}

void Rewrite::ensureDegree(int d) {
  std::unique_lock lk(rulesMx_);
  for (int L = completed_ + 1; L <= d; ++L) completeLayer(L);
}

void Rewrite::completeLayer(int L) {
  std::map<Word, Rhs> layerMemo;
  std::set<std::tuple<int, int, int>> processed;
  bool changed = true;
  while (changed) {
    changed = false;
    // overlaps with combined length exactly L, deterministically ordered
    std::vector<std::tuple<Word, int, int, int>> todo;
    const int R = static_cast<int>(rules_.size());
    for (int r1 = 0; r1 < R; ++r1) {
      const Word& l1 = rules_[r1].lhs;
      const int n1 = static_cast<int>(l1.size());
      for (int r2 = 0; r2 < R; ++r2) {
        const Word& l2 = rules_[r2].lhs;
        const int n2 = static_cast<int>(l2.size());
        for (int t = 1; t < std::min(n1, n2); ++t) {
          if (n1 + n2 - t != L) continue;
          if (WordView(l1).substr(n1 - t) != WordView(l2).substr(0, t)) continue;
          Word u = l1;
          u += l2.substr(t);
          todo.emplace_back(std::move(u), r1, r2, t);
        }
      }
    }
    std::sort(todo.begin(), todo.end());
    for (auto& [u, r1, r2, t] : todo) {
      if (!processed.emplace(r1, r2, t).second) continue;
      const Rule& a = rules_[r1];
      const Rule& b = rules_[r2];
      std::map<Word, Coeff> diff;
      auto accumulate = [&](const Coeff& c, const Word& w, int sign) {
        Rhs nf = reduceNoLock(w, &layerMemo);
        for (auto& [c2, x] : nf.terms) {
          Coeff add = c * c2;
          if (sign < 0) add = -add;
          auto [it, fresh] = diff.emplace(x, add);
          if (!fresh) {
            it->second += add;
            if (it->second.zero()) diff.erase(it);
          }
        }
      };
      for (auto& [c, x] : a.rhs.terms) {
        Word w2 = x;
        w2 += u.substr(a.lhs.size());
        accumulate(c, w2, +1);
      }
      for (auto& [c, x] : b.rhs.terms) {
        Word w2 = u.substr(0, u.size() - b.lhs.size());
        w2 += x;
        accumulate(c, w2, -1);
      }
      if (!diff.empty()) {
        std::vector<std::pair<Coeff, Word>> elem;
        for (auto& [x, c] : diff) elem.emplace_back(c, x);
        addRule(std::move(elem));
        layerMemo.clear();
        changed = true;
      }
    }
  }
  completed_ = L;
  // commit layer results to the shared memo: words of length <= L now have
  // stable normal forms
  std::unique_lock mlk(memoMx_);
  for (auto& [w, nf] : layerMemo) memo_.emplace(w, nf);
}

std::vector<Word> Rewrite::irreducibleWords(const RootVec& weight) const {
  std::shared_lock lk(rulesMx_);
  long len = 0;
  for (long c : weight) {
    if (c < 0) throw DomainError("negative weight coordinate");
    len += c;
  }
  if (len > completed_)
    throw StructureError("irreducible enumeration past completed degree");
  std::vector<Word> out;
  std::vector<long> remaining(weight.begin(), weight.end());
  Word cur;
  std::function<void()> dfs = [&]() {
    if (static_cast<long>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < static_cast<int>(remaining.size()); ++i) {
      if (remaining[i] == 0) continue;
      cur.push_back(static_cast<unsigned char>(i));
      bool ok = true;
      for (int Lr : lens_) {
        if (Lr > static_cast<int>(cur.size())) break;
        if (byLhs_.find(WordView(cur).substr(cur.size() - Lr)) != byLhs_.end()) {
          ok = false;
          break;
        }
      }
      if (ok) {
        remaining[i]--;
        dfs();
        remaining[i]++;
      }
      cur.pop_back();
    }
  };
  dfs();
  return out;
}

std::vector<Rewrite::Rule> Rewrite::snapshotRules() const {
  std::shared_lock lk(rulesMx_);
  return rules_;
}

void Rewrite::restore(std::vector<Rule> rules, int completedDegree) {
  std::unique_lock lk(rulesMx_);
  rules_ = std::move(rules);
  byLhs_.clear();
  lens_.clear();
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    byLhs_.emplace(rules_[i].lhs, static_cast<int>(i));
    int L = static_cast<int>(rules_[i].lhs.size());
    if (std::find(lens_.begin(), lens_.end(), L) == lens_.end())
      lens_.push_back(L);
  }
  std::sort(lens_.begin(), lens_.end());
  completed_ = completedDegree;
  std::unique_lock mlk(memoMx_);
  memo_.clear();
}

// ---------------------------------------------------------------------------
// Alg

Alg::Alg(TypeTag tag) : Alg(CartanData(tag)) {}

Alg::Alg(CartanData cd) : cd_(std::move(cd)) {
  rw_ = std::make_unique<Rewrite>(cd_);
  qmi_.reserve(cd_.m());
  for (int i = 0; i < cd_.m(); ++i) {
    Laurent l = Laurent::vpow(cd_.d2(i)) - Laurent::vpow(-cd_.d2(i));
    qmi_.emplace_back(std::move(l));
  }
}

Element Alg::one() const { return scalar(Coeff(1)); }

Element Alg::scalar(const Coeff& c) const {
  Element x;
  x.add(TermKey{Word(), KExp(cd_.m(), 0), Word()}, c);
  return x;
}

Element Alg::E(int pos) const {
  Element x;
  x.add(TermKey{Word(), KExp(cd_.m(), 0), Word(1, static_cast<unsigned char>(pos))},
        Coeff(1));
  return x;
}

Element Alg::F(int pos) const {
  Element x;
  x.add(TermKey{Word(1, static_cast<unsigned char>(pos)), KExp(cd_.m(), 0), Word()},
        Coeff(1));
  return x;
}

Element Alg::K(int pos, int exp2) const {
  KExp k(cd_.m(), 0);
  k[pos] = exp2;
  return Kmono(k);
}

Element Alg::Kmono(const KExp& k2) const {
  Element x;
  x.add(TermKey{Word(), k2, Word()}, Coeff(1));
  return x;
}

Element Alg::gammaPow(int halves) const {
  KExp k(cd_.m(), 0);
  for (int i = 0; i < cd_.m(); ++i) k[i] = cd_.mark(i) * halves;
  return Kmono(k);
}

Element Alg::Eword(const Word& w) const {
  ensureFor(w.size(), 0);
  Element x;
  for (auto& [c, u] : rw_->reduce(w).terms)
    x.add(TermKey{Word(), KExp(cd_.m(), 0), u}, c);
  return x;
}

long Alg::kConjVexp(const KExp& k2, int pos) const {
  long s = 0;
  for (int i = 0; i < cd_.m(); ++i)
    if (k2[i] != 0) s += static_cast<long>(k2[i]) * cd_.pairing(i, pos);
  return s;
}

void Alg::ensureFor(std::size_t elen, std::size_t flen) const {
  int need = static_cast<int>(std::max(elen, flen));
  if (need <= rw_->completedDegree()) return;
  if (need > budget_) throw BudgetError(need);
  rw_->ensureDegree(need);
}

void Alg::mulTermByF(const RawTerm& t, int j, std::vector<RawTerm>& out) const {
  // main term: F_j travels to the F-block, only the K-block contributes
  RawTerm main = t;
  long vexp = -kConjVexp(t.k, j);
  if (vexp != 0) main.c *= Coeff::vpow(static_cast<int>(vexp));
  main.f.push_back(static_cast<unsigned char>(j));
  out.push_back(std::move(main));
  // contraction terms at each matching E-letter
  const Coeff invQmi = qmi_[j].inverse();
  long pref = 0;  // (alpha_j, wt of E-prefix)
  for (std::size_t p = 0; p < t.e.size(); ++p) {
    if (t.e[p] == j) {
      for (int s : {+1, -1}) {
        RawTerm d = t;
        Coeff c = t.c * invQmi;
        if (s < 0) c = -c;
        long move = -2 * s * pref;
        if (move != 0) c *= Coeff::vpow(static_cast<int>(move));
        d.c = std::move(c);
        d.k[j] += 2 * s;
        d.e = t.e.substr(0, p) + t.e.substr(p + 1);
        out.push_back(std::move(d));
      }
    }
    pref += cd_.pairing(j, t.e[p]);
  }
}

void Alg::mulTermByK(RawTerm& t, const KExp& k2) const {
  long vexp = 0;
  for (unsigned char l : t.e) vexp -= kConjVexp(k2, l);
  if (vexp != 0) t.c *= Coeff::vpow(static_cast<int>(vexp));
  for (int i = 0; i < cd_.m(); ++i) t.k[i] += k2[i];
}

Element Alg::mul(const Element& a, const Element& b) const {
  if (a.zero() || b.zero()) return Element();
  ensureFor(a.maxELen() + b.maxELen(), a.maxFLen() + b.maxFLen());
  Element out;
  for (auto& [ta, ca] : a.terms()) {
    for (auto& [tb, cb] : b.terms()) {
      std::vector<RawTerm> cur;
      cur.push_back(RawTerm{ca * cb, ta.f, ta.k, ta.e});
      for (unsigned char j : tb.f) {
        std::vector<RawTerm> nxt;
        for (auto& t : cur) mulTermByF(t, j, nxt);
        cur = std::move(nxt);
      }
      bool hasK = false;
      for (int v : tb.k) hasK = hasK || (v != 0);
      if (hasK)
        for (auto& t : cur) mulTermByK(t, tb.k);
      for (auto& t : cur) t.e += tb.e;
      for (auto& t : cur) {
        auto re = rw_->reduce(t.e);
        auto rf = rw_->reduce(t.f);
        for (auto& [cf, wf] : rf.terms)
          for (auto& [ce, we] : re.terms)
            out.add(TermKey{wf, t.k, we}, t.c * cf * ce);
      }
    }
  }
  return out;
}

Element Alg::qBracket(const Element& a, const Element& b, const Coeff& u) const {
  return mul(a, b) - u * mul(b, a);
}

Element Alg::nestedRight(const std::vector<Element>& args,
                         const std::vector<Coeff>& us) const {
  if (args.empty()) throw DomainError("empty bracket");
  if (us.size() + 1 != args.size())
    throw DomainError("nested bracket needs s-1 parameters for s arguments");
  Element acc = args.back();
  for (std::size_t k = args.size() - 1; k-- > 0;)
    acc = qBracket(args[k], acc, us[k]);
  return acc;
}

Element Alg::nestedLeft(const std::vector<Element>& args,
                        const std::vector<Coeff>& us) const {
  if (args.empty()) throw DomainError("empty bracket");
  if (us.size() + 1 != args.size())
    throw DomainError("nested bracket needs s-1 parameters for s arguments");
  Element acc = args.front();
  for (std::size_t k = 1; k < args.size(); ++k)
    acc = qBracket(acc, args[k], us[k - 1]);
  return acc;
}

Element Alg::normal(const Element& x) const {
  Element out;
  for (auto& [t, c] : x.terms()) {
    ensureFor(t.e.size(), t.f.size());
    auto re = rw_->reduce(t.e);
    auto rf = rw_->reduce(t.f);
    for (auto& [cf, wf] : rf.terms)
      for (auto& [ce, we] : re.terms) out.add(TermKey{wf, t.k, we}, c * cf * ce);
  }
  return out;
}

Element Alg::phi(const Element& x) const {
  Element out;
  for (auto& [t, c] : x.terms()) {
    TermKey nt;
    nt.f.assign(t.e.rbegin(), t.e.rend());
    nt.e.assign(t.f.rbegin(), t.f.rend());
    nt.k.resize(cd_.m());
    for (int i = 0; i < cd_.m(); ++i) nt.k[i] = -t.k[i];
    out.add(nt, c.bar());
  }
  return normal(out);
}

Element Alg::omegaAuto(const Element& x) const {
  Element out;
  for (auto& [t, c] : x.terms()) {
    TermKey nt = t;
    for (int i = 0; i < cd_.m(); ++i) nt.k[i] = -t.k[i];
    out.add(nt, c.bar());
  }
  return out;
}

Element Alg::derivation(int pos, const Element& x) const {
  Element out;
  for (auto& [t, c] : x.terms()) {
    if (!t.f.empty()) throw DomainError("derivation needs a pure E-side element");
    for (int v : t.k)
      if (v != 0) throw DomainError("derivation needs a pure E-side element");
    // r_i(w) = sum over positions p with w_p = i of
    //          q^((wt of suffix, alpha_i)) * (w with position p removed)
    for (std::size_t p = 0; p < t.e.size(); ++p) {
      if (t.e[p] != pos) continue;
      long vexp = 0;
      for (std::size_t l = p + 1; l < t.e.size(); ++l)
        vexp += 2 * cd_.pairing(pos, t.e[l]);
      Word w = t.e.substr(0, p) + t.e.substr(p + 1);
      Coeff cc = c;
      if (vexp != 0) cc *= Coeff::vpow(static_cast<int>(vexp));
      ensureFor(w.size(), 0);
      for (auto& [c2, u] : rw_->reduce(w).terms)
        out.add(TermKey{Word(), KExp(cd_.m(), 0), u}, cc * c2);
    }
  }
  return out;
}

RootVec Alg::weightOf(const TermKey& t) const {
  RootVec w(cd_.m(), 0);
  for (unsigned char l : t.e) w[l] += 1;
  for (unsigned char l : t.f) w[l] -= 1;
  return w;
}

std::optional<RootVec> Alg::weightOf(const Element& x) const {
  std::optional<RootVec> w;
  for (auto& [t, c] : x.terms()) {
    RootVec tw = weightOf(t);
    if (!w)
      w = tw;
    else if (*w != tw)
      return std::nullopt;
  }
  return w;
}

}  // namespace qaffine
