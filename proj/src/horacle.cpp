#include "kdrh/horacle.hpp"

#include <cstdlib>
#include <numeric>

namespace kdrh {

AbVector abelianize(const TermPtr& t) {
  AbVector out;
  if (!t || t->is_empty()) return out;
  switch (t->kind) {
    case TermKind::Empty:
      break;
    case TermKind::Lit:
      out.v[t->letter] = 1;
      break;
    case TermKind::Power:
      out = abelianize(t->power_base()).negate();
      break;
    case TermKind::Concat:
      for (const auto& c : t->children) out = out + abelianize(c);
      break;
  }
  return out;
}

namespace {

// z with vector d over `allowed`: positive components as a^k, negative as
// (a^(w-1))^k.
std::optional<TermPtr> term_with_vector(const AbVector& d, ContentSet allowed) {
  std::vector<TermPtr> parts;
  for (Letter l = 0; l < kMaxLetters; ++l) {
    long long n = d.v[l];
    if (n == 0) continue;
    if (!allowed.contains(l)) return std::nullopt;
    TermPtr unit = n > 0 ? Term::lit(l) : Term::power(Term::lit(l));
    for (long long i = 0; i < std::llabs(n); ++i) parts.push_back(unit);
  }
  return Term::concat(parts);
}

class TrivialOracle final : public HOracle {
 public:
  std::string name() const override { return "trivial"; }
  std::string description() const override { return "trivial pseudovariety of groups (DRH = R)"; }
  bool equal_mod_H(const TermPtr&, const TermPtr&) const override { return true; }
  std::optional<TermPtr> complete_product(const TermPtr&, const TermPtr&, ContentSet) const override {
    return Term::empty();
  }
};

class AbOracle final : public HOracle {
 public:
  std::string name() const override { return "ab"; }
  std::string description() const override { return "pseudovariety of all finite abelian groups"; }
  bool equal_mod_H(const TermPtr& u, const TermPtr& v) const override {
    return abelianize(u) == abelianize(v);
  }
  std::optional<TermPtr> complete_product(const TermPtr& phi, const TermPtr& target,
                                          ContentSet allowed) const override {
    return term_with_vector(abelianize(target) - abelianize(phi), allowed);
  }
};

class GroupListOracle final : public HOracle {
 public:
  GroupListOracle(std::vector<FiniteSemigroup> groups, std::string name)
      : groups_(std::move(groups)), name_(std::move(name)) {
    for (const auto& g : groups_)
      if (!g.is_group()) throw SemigroupError("group-list oracle requires groups");
  }

  std::string name() const override { return name_; }
  std::string description() const override {
    return "pseudovariety generated by " + std::to_string(groups_.size()) + " finite group(s)";
  }

  bool equal_mod_H(const TermPtr& u, const TermPtr& v) const override {
    for (const auto& g : groups_)
      if (!satisfies_in_group(g, u, v)) return false;
    return true;
  }

  std::optional<TermPtr> complete_product(const TermPtr& phi, const TermPtr& target,
                                          ContentSet allowed) const override {
    // Bounded search over products of letter powers a^e with e below the
    // group exponent; sufficient because values are periodic with it.
    long long expo = 1;
    for (const auto& g : groups_) expo = std::lcm(expo, g.subgroup_exponent());
    std::vector<Letter> letters = allowed.letters();
    double combos = 1;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      combos *= static_cast<double>(expo);
      if (combos > 1e5) return std::nullopt;
    }
    std::vector<long long> e(letters.size(), 0);
    for (;;) {
      std::vector<TermPtr> parts;
      for (std::size_t i = 0; i < letters.size(); ++i)
        for (long long k = 0; k < e[i]; ++k) parts.push_back(Term::lit(letters[i]));
      TermPtr z = Term::concat(parts);
      if (equal_mod_H(Term::concat(phi, z), target)) return z;
      std::size_t k = 0;
      while (k < e.size() && ++e[k] == expo) e[k++] = 0;
      if (k == e.size()) return std::nullopt;
    }
  }

 private:
  static bool satisfies_in_group(const FiniteSemigroup& g, const TermPtr& u, const TermPtr& v) {
    // The empty word evaluates to the group identity (the unique idempotent).
    Elt id = 0;
    for (Elt a = 0; a < g.order(); ++a)
      if (g.mul(a, a) == a) id = a;
    std::vector<Letter> letters = (content(u) | content(v)).letters();
    std::vector<Elt> assign(letters.size(), 0);
    for (;;) {
      Substitution sub;
      for (std::size_t i = 0; i < letters.size(); ++i) sub[letters[i]] = assign[i];
      OptElt a = g.eval(u, sub);
      OptElt b = g.eval(v, sub);
      if (a.value_or(id) != b.value_or(id)) return false;
      std::size_t k = 0;
      while (k < assign.size() && ++assign[k] == g.order()) assign[k++] = 0;
      if (k == assign.size()) break;
    }
    return true;
  }

  std::vector<FiniteSemigroup> groups_;
  std::string name_;
};

}  // namespace

const HOracle& trivial_oracle() {
  static const TrivialOracle o;
  return o;
}

const HOracle& ab_oracle() {
  static const AbOracle o;
  return o;
}

std::unique_ptr<HOracle> make_group_list_oracle(std::vector<FiniteSemigroup> groups, std::string name) {
  return std::make_unique<GroupListOracle>(std::move(groups), std::move(name));
}

}  // namespace kdrh
