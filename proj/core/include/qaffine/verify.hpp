#pragma once

#include <functional>
#include <memory>

#include "qaffine/drinfeld.hpp"
#include "qaffine/expr.hpp"

namespace qaffine {

// One relation instance: the residual closure reduces the instantiated
// identity to normal form; pass means the residual is exactly 0.
struct Check {
  std::string id;
  std::vector<long> indices;
  std::vector<long> modes;
  std::function<Element()> residual;
};

struct CheckOutcome {
  enum class Status { Pass, Fail, Exceeded } status = Status::Pass;
  std::string witness;  // canonical text of a failing residual
  long millis = 0;
};

struct VerificationReport {
  std::string version;
  std::string type;
  std::string suite;
  struct Row {
    std::string id;
    std::vector<long> indices, modes;
    CheckOutcome outcome;
    int budget = 0;
  };
  std::vector<Row> rows;
  int pass = 0, fail = 0, exceeded = 0;

  std::string toJson(bool realTimings = false) const;
  bool allPass() const { return fail == 0 && exceeded == 0; }
};

// Per-type verification context owning the engine stack.
class Session {
 public:
  explicit Session(TypeTag tag, int degreeBudget = 0);

  const TypeTag& tag() const { return tag_; }
  Alg& alg() { return *alg_; }
  Braid& braid() { return *br_; }
  Drinfeld& dr() { return *dr_; }
  const CartanData& cd() const { return alg_->cd(); }

  // default completion budget for this type (used for reporting)
  int budget() const { return alg_->degreeBudget(); }

 private:
  TypeTag tag_;
  std::unique_ptr<Alg> alg_;
  std::unique_ptr<Braid> br_;
  std::unique_ptr<Drinfeld> dr_;
};

int defaultDegreeBudget(const TypeTag& tag);
long defaultModeBound(int relation);  // Drinfeld relation 1..10

// Suite builders.
std::vector<Check> djChecks(Session& s);
std::vector<Check> drinfeldChecks(Session& s, int relation, long modeBound);
std::vector<Check> drinfeldSuite(Session& s, long modeBoundLow,
                                 long modeBoundHigh);
std::vector<Check> lemmaChecks(Session& s);
std::vector<Check> showcaseChecks(Session& s);  // the X / Y / Z computations
std::vector<Check> phiHomChecks(Session& s);

// Scalar extracted from the inverse-homomorphism round trip (id, value).
std::vector<std::pair<std::string, std::string>> phiScalars(Session& s);

VerificationReport runChecks(Session& s, const std::string& suite,
                             const std::vector<Check>& checks, int threads);

}  // namespace qaffine
