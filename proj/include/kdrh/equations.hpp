#pragma once

#include <map>
#include <string>

#include "kdrh/equality.hpp"
#include "kdrh/semigroup.hpp"

namespace kdrh {

struct SystemError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Symbols of equation words: variables ("x", "t_yx") or parameters ("#",
// "#1").  Kappa-terms over symbols are VarTerms.
using Sym = std::string;

enum class VKind : std::uint8_t { Empty, Var, Concat, Power };

struct VarTerm;
using VarTermPtr = std::shared_ptr<const VarTerm>;

struct VarTerm {
  VKind kind;
  Sym sym;
  std::vector<VarTermPtr> children;

  static const VarTermPtr& empty();
  static VarTermPtr var(Sym s);
  static VarTermPtr power(const VarTermPtr& base);
  static VarTermPtr concat(const std::vector<VarTermPtr>& parts);
  static VarTermPtr word(const std::vector<Sym>& syms);

  void collect_syms(std::vector<Sym>& out) const;
};

// Grammar over symbols: sym := [a-z] ( '_' [a-z0-9]+ | [0-9]* ) | '#' [0-9]*;
// powers and "1" as in the letter grammar.  "xyx" reads as x.y.x while
// "t_yx" is one symbol.
VarTermPtr parse_var_term(const std::string& text);
std::string render(const VarTermPtr& t);

// Constraint pair (phi, nu): phi maps letters of A (and parameter letters)
// into S and extends homomorphically to kappa-terms; nu constrains the
// variables.
struct ConstraintPair {
  FiniteSemigroup target;
  std::map<Letter, Elt> phi;
  std::map<Sym, OptElt> nu;

  OptElt apply_phi(const TermPtr& t) const;  // nullopt = adjoined identity
  static ConstraintPair trivial_for(ContentSet alphabet);
};

struct EquationSystem {
  ContentSet alphabet;
  std::vector<Sym> variables;
  std::map<Sym, TermPtr> parameters;  // evaluation ev: P -> kappa-terms over A
  std::vector<std::pair<VarTermPtr, VarTermPtr>> equations;
  // side conditions c(delta(x)) = c(delta(t)) introduced by the omega-power
  // elimination; folded into the constraints via the content coordinate
  std::vector<std::pair<Sym, VarTermPtr>> content_equalities;
  ConstraintPair constraints;

  bool is_word_system() const;
};

// delta: X union P -> kappa-terms over A (I allowed); must agree with ev on
// parameters.
using SolutionMap = std::map<Sym, TermPtr>;

TermPtr apply_solution(const VarTermPtr& t, const SolutionMap& delta);

struct CheckReport {
  struct Entry {
    std::string what;
    bool ok;
  };
  std::vector<Entry> entries;
  bool all_ok() const;
  std::string summary() const;
};

// (S.1) per equation modulo DRH, (S.2) per variable via phi/nu, (S.3) per
// parameter, plus the recorded content equalities.
CheckReport check_solution(const EquationSystem& sys, const SolutionMap& delta, const HOracle& h);

// Lemma-based elimination of every (w-1)-power: each subterm t^(w-1) is
// named by a fresh variable z with word equations {z t z = z, z t = t z} and
// a content constraint c(z) = c(t).  Output equations are word equations.
EquationSystem to_word_system(const EquationSystem& sys, SolutionMap* delta = nullptr);

// Combine several word equations into one via fresh separator parameters
// (weak cancellability of DRH).
std::pair<VarTermPtr, VarTermPtr> to_single_word_equation(const EquationSystem& sys);

// The system S_{u=v} = {u'=v'} union S1 union S2 together with the extended
// solution, built by eliminating non-reduced adjacent products.
struct SuvSystem {
  ContentSet alphabet;
  std::vector<Sym> u_word, v_word;              // include the trailing '#'
  std::vector<std::array<Sym, 3>> s1;           // x y = z  as {x, y, z}
  std::vector<std::pair<Sym, Letter>> s2;       // x a^w = x
  std::vector<Sym> variables;                   // X', deterministic order
  std::vector<Sym> parameters;                  // '#', '#1', ...
  ConstraintPair constraints;                   // nu extended to X'
  SolutionMap delta;                            // extended solution

  std::vector<Sym> full_word() const;  // u_word ++ v_word
};

struct NonKappaSolution : SystemError {
  using SystemError::SystemError;
};

SuvSystem build_S_uv(const std::vector<Sym>& u, const std::vector<Sym>& v, const SolutionMap& delta,
                     const ConstraintPair& constraints, const HOracle& h);

// check_solution specialized to an SuvSystem (u'=v', S1, S2 and constraints).
CheckReport check_suv_solution(const SuvSystem& sys, const SolutionMap& delta, const HOracle& h);

}  // namespace kdrh
