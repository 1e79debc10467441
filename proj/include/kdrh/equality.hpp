#pragma once

#include "kdrh/factorize.hpp"
#include "kdrh/horacle.hpp"

namespace kdrh {

// u and v lie in the same R-class of the free pro-DRH semigroup iff their
// lbf-infinity streams agree, factors compared recursively modulo DRH and
// markers literally.  Recursion descends in content size.
bool r_equivalent_mod_DRH(const TermPtr& u, const TermPtr& v, const HOracle& h);

// Full equality modulo DRH: same R-class and equal modulo H.
bool equal_mod_DRH(const TermPtr& u, const TermPtr& v, const HOracle& h);

// DRH with the trivial group pseudovariety, i.e. the pseudovariety R.
bool equal_mod_R(const TermPtr& u, const TermPtr& v);

// Shared-state variant for callers running many queries against one oracle;
// memoizes decided pairs and shares a step budget.
class EqualityEngine {
 public:
  explicit EqualityEngine(const HOracle& h, long long budget_limit = 0);

  bool equal(const TermPtr& u, const TermPtr& v);
  bool r_equivalent(const TermPtr& u, const TermPtr& v);
  const HOracle& oracle() const { return h_; }
  long long steps_used() const { return budget_.used; }

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<TermPtr, TermPtr>& p) const;
  };
  struct PairEq {
    bool operator()(const std::pair<TermPtr, TermPtr>& a, const std::pair<TermPtr, TermPtr>& b) const;
  };

  const HOracle& h_;
  Budget budget_;
  std::unordered_map<std::pair<TermPtr, TermPtr>, bool, PairHash, PairEq> memo_requiv_;
};

}  // namespace kdrh
