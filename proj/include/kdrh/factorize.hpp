#pragma once

#include <optional>
#include <utility>

#include "kdrh/ordinal.hpp"
#include "kdrh/term.hpp"

namespace kdrh {

struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(const std::string& where, long long limit)
      : std::runtime_error("budget exceeded in " + where + " (limit " + std::to_string(limit) + ")") {}
};

struct EmptyTermError : std::runtime_error {
  explicit EmptyTermError(const std::string& op) : std::runtime_error(op + ": empty term") {}
};

struct OutOfRangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Step counter shared across an iteration.  Exhaustion is a diagnostic, never
// a wrong answer.
struct Budget {
  long long limit;
  long long used = 0;
  explicit Budget(long long lim) : limit(lim) {}
  void tick(const char* where) {
    if (++used > limit) throw BudgetExceeded(where, limit);
  }
};

long long default_budget(const TermPtr& t);

// u = left . marker . right with marker not in c(left) and
// c(left.marker) = c(u), unique modulo DRH.
struct LbfTriple {
  TermPtr left;
  Letter marker;
  TermPtr right;
};

using LbfPair = std::pair<TermPtr, Letter>;  // (factor, marker)

// Eventually periodic description of lbf-infinity.  Empty period <=> the
// iteration halts and `preperiod` is the whole finite sequence.  A nonempty
// period is primitive.
struct LbfSequence {
  std::vector<LbfPair> preperiod;
  std::vector<LbfPair> period;

  bool finite() const { return period.empty(); }
  // k-th element of the stream, 0-based; finite sequences return (I, marker)
  // pairs only for k < length.
  const LbfPair& at(std::size_t k) const;
  std::size_t compare_window(const LbfSequence& other) const;

  // Stream equality with a custom factor comparison (markers literal).
  template <typename FactorEq>
  bool stream_equal(const LbfSequence& other, FactorEq&& eq) const {
    if (finite() != other.finite()) return false;
    if (finite()) {
      if (preperiod.size() != other.preperiod.size()) return false;
      for (std::size_t i = 0; i < preperiod.size(); ++i) {
        if (preperiod[i].second != other.preperiod[i].second) return false;
        if (!eq(preperiod[i].first, other.preperiod[i].first)) return false;
      }
      return true;
    }
    std::size_t n = compare_window(other);
    for (std::size_t i = 0; i < n; ++i) {
      const LbfPair& x = at(i);
      const LbfPair& y = other.at(i);
      if (x.second != y.second) return false;
      if (!eq(x.first, y.first)) return false;
    }
    return true;
  }
};

LbfTriple lbf(const TermPtr& t);
LbfTriple lbf(const TermPtr& t, Budget& budget);

std::vector<std::pair<Letter, TermPtr>> first_occurrences(const TermPtr& t);

LbfSequence lbf_seq(const TermPtr& t);
LbfSequence lbf_seq(const TermPtr& t, Budget& budget);

// Stabilized content of the lbf iteration; computed by a direct fold, cheap
// and total (cross-checked against lbf_seq in the tests).
ContentSet cumulative_content(const TermPtr& t);

// First iteration remainder whose content equals the cumulative content;
// nullopt when the cumulative content is empty.
std::optional<TermPtr> regular_part(const TermPtr& t);
std::optional<TermPtr> regular_part(const TermPtr& t, Budget& budget);

bool is_reduced_product(const TermPtr& u, const TermPtr& v);

// Number of end-marked prefixes, as an ordinal below w^w.
Ordinal alpha(const TermPtr& t);

// v = v1.v2 modulo DRH with c(v1) inside cum(u) and v2 empty or starting
// outside cum(u).
std::pair<TermPtr, TermPtr> split_at_cumulative(const TermPtr& u, const TermPtr& v);

// The factor u[beta,gamma[ — from the beta-th end-marked position (marker
// included) up to, but excluding, the gamma-th marker.  extract(t,0,alpha(t))
// is t modulo DRH; extract(t,b,b) is the empty word.
TermPtr extract(const TermPtr& t, const Ordinal& beta, const Ordinal& gamma);

// u = u1 a u2 with a's first occurrence marked; requires a in c(u).
struct LetterSplit {
  TermPtr before;
  TermPtr after;
};
LetterSplit split_at_first_letter(const TermPtr& u, Letter a);

}  // namespace kdrh
