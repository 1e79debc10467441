#pragma once

#include <array>
#include <memory>
#include <optional>

#include "kdrh/semigroup.hpp"
#include "kdrh/term.hpp"

namespace kdrh {

// Image in the free abelian group on the letters: x^(w-1) contributes -1 per
// occurrence because s^(n!) is the identity in any finite abelian group.
struct AbVector {
  std::array<long long, kMaxLetters> v{};

  friend AbVector operator+(AbVector a, const AbVector& b) {
    for (std::size_t i = 0; i < a.v.size(); ++i) a.v[i] += b.v[i];
    return a;
  }
  friend AbVector operator-(AbVector a, const AbVector& b) {
    for (std::size_t i = 0; i < a.v.size(); ++i) a.v[i] -= b.v[i];
    return a;
  }
  AbVector negate() const {
    AbVector r;
    for (std::size_t i = 0; i < v.size(); ++i) r.v[i] = -v[i];
    return r;
  }
  bool is_zero() const {
    for (long long x : v)
      if (x) return false;
    return true;
  }
  friend bool operator==(const AbVector&, const AbVector&) = default;
};

AbVector abelianize(const TermPtr& t);

// Decision oracle for a group pseudovariety H.  equal_mod_H must be an
// equivalence compatible with concatenation; the engine additionally uses
// complete_product to synthesize H-corrections with prescribed content.
class HOracle {
 public:
  virtual ~HOracle() = default;
  virtual std::string name() const = 0;
  virtual std::string description() const = 0;
  virtual bool equal_mod_H(const TermPtr& u, const TermPtr& v) const = 0;

  // A kappa-term z with c(z) <= allowed and phi.z =_H target, if one is
  // found within the oracle's search bounds.
  virtual std::optional<TermPtr> complete_product(const TermPtr& phi, const TermPtr& target,
                                                  ContentSet allowed) const = 0;
};

// H = I, the trivial pseudovariety of groups; DRH = R.
const HOracle& trivial_oracle();

// H = Ab, decided by abelianization vectors.
const HOracle& ab_oracle();

// H = the pseudovariety generated by a finite list of groups, decided by
// exhaustive evaluation (sound and complete for that finitely generated case).
std::unique_ptr<HOracle> make_group_list_oracle(std::vector<FiniteSemigroup> groups, std::string name = "groups");

}  // namespace kdrh
