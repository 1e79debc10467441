#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kdrh/term.hpp"

namespace kdrh {

struct SemigroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Elements are 0-based indices into the Cayley table.  An eval result of
// nullopt stands for the adjoined identity I of S^I.
using Elt = int;
using OptElt = std::optional<Elt>;

// Substitution letters/variables -> elements.
using Substitution = std::map<Letter, Elt>;

class FiniteSemigroup {
 public:
  FiniteSemigroup() = default;
  FiniteSemigroup(int order, std::vector<Elt> table, std::vector<std::string> names = {},
                  std::optional<Elt> identity = std::nullopt);

  // Verifies shape and associativity (O(n^3)); throws SemigroupError with a
  // witness triple on failure.
  static FiniteSemigroup validate(int order, std::vector<Elt> table, std::vector<std::string> names = {},
                                  std::optional<Elt> identity = std::nullopt);

  int order() const { return order_; }
  Elt mul(Elt a, Elt b) const { return table_[a * order_ + b]; }
  OptElt mul(OptElt a, OptElt b) const {
    if (!a) return b;
    if (!b) return a;
    return mul(*a, *b);
  }
  const std::vector<Elt>& table() const { return table_; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Elt> identity() const { return identity_; }
  std::string name_of(OptElt e) const;

  Elt power(Elt s, long long n) const;  // n >= 1
  Elt power_omega(Elt s) const;         // the idempotent power s^w
  // The element t of the kernel group of <s> with t*s = s^w.
  Elt power_omega_minus_one(Elt s) const;

  // Homomorphic evaluation; OmegaMinusOne via power_omega_minus_one, Empty
  // evaluates to the adjoined identity.  Throws on unbound letters.
  OptElt eval(const TermPtr& t, const Substitution& sub) const;

  // Exhaustive pseudoidentity check over all substitutions of
  // c(u) union c(v); capped at 10^6 substitutions.
  bool satisfies(const TermPtr& u, const TermPtr& v) const;
  bool satisfies(const TermPtr& u, const TermPtr& v, Substitution* witness) const;

  std::vector<int> green_R() const;  // element -> R-class id
  bool is_R_trivial() const;
  // Every regular R-class is a group accepted by group_test.
  bool is_in_DRH(const std::function<bool(const FiniteSemigroup&, const std::vector<Elt>&)>& group_test) const;
  bool is_group() const;
  bool is_commutative() const;
  // lcm of the element orders of the kernel groups (the group exponent when
  // S is a group).
  long long subgroup_exponent() const;

  // Direct product with the semilattice of nonempty subsets of A under
  // union, giving the result a content function by construction.
  FiniteSemigroup augment_with_content(ContentSet A) const;

  FiniteSemigroup direct_product(const FiniteSemigroup& other) const;

 private:
  int order_ = 0;
  std::vector<Elt> table_;
  std::vector<std::string> names_;
  std::optional<Elt> identity_;
};

bool group_test_trivial(const FiniteSemigroup& s, const std::vector<Elt>& cls);
bool group_test_abelian(const FiniteSemigroup& s, const std::vector<Elt>& cls);

struct CatalogEntry {
  std::string name;
  FiniteSemigroup sg;
  bool in_R;
  bool in_DRAb;
};

// Handcrafted test catalog: R-trivial members, abelian groups, and products.
const std::vector<CatalogEntry>& catalog();
const FiniteSemigroup& trivial_semigroup();

}  // namespace kdrh
