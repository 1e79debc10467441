#pragma once

#include <map>

#include "kdrh/equations.hpp"
#include "kdrh/ordinal.hpp"

namespace kdrh {

struct MalformedSystem : SystemError {
  using SystemError::SystemError;
};
struct VerificationFailed : SystemError {
  using SystemError::SystemError;
};
struct CandidateInvalid : SystemError {
  using SystemError::SystemError;
};

// Pair in S x S^I used by zeta / M / Theta.  The first component may be the
// adjoined identity as well (the paper's phi^I flexibility for I-valued
// variables).
struct SPair {
  OptElt s1;
  OptElt s2;
  friend bool operator==(const SPair&, const SPair&) = default;
  friend auto operator<=>(const SPair& a, const SPair& b) {
    long w = a.s1 ? *a.s1 : -1;
    long x = b.s1 ? *b.s1 : -1;
    if (w != x) return w <=> x;
    long y = a.s2 ? *a.s2 : -1;
    long z = b.s2 ? *b.s2 : -1;
    return y <=> z;
  }
};

// ---- kappa-terms over boundary variables (i|j) and {i|j}_{s,mu} ------------

struct BhTerm;
using BhTermPtr = std::shared_ptr<const BhTerm>;

struct BhTerm {
  enum class K : std::uint8_t { Empty, PairVar, SuffixVar, Concat, Power };
  K kind;
  int i = -1, j = -1;  // J positions; PairVar allows any i < j (chain product)
  SPair s{};           // SuffixVar only
  int mu = 0;          // SuffixVar only
  std::vector<BhTermPtr> children;

  static const BhTermPtr& empty();
  static BhTermPtr pair_var(int i, int j);
  static BhTermPtr suffix_var(int i, int j, SPair s, int mu);
  static BhTermPtr concat(const std::vector<BhTermPtr>& parts);
  static BhTermPtr power(const BhTermPtr& base);
};

std::string render_bh(const BhTermPtr& t, const std::vector<std::string>& index_names);
BhTermPtr parse_bh(const std::string& text, const std::vector<std::string>& index_names,
                   const std::vector<FiniteSemigroup>* = nullptr);

// ---- factorization schemes --------------------------------------------------

// Cut-set data (J, iota, M, Theta) on a word: cuts are the iota image,
// entries attach to consecutive cut pairs.  M(i,j,s) is the number of
// entries with that pair and s-vector; mu indexes them from 0.
struct Scheme {
  struct Entry {
    int left;  // pair (cuts[left], cuts[left+1])
    SPair s;
    int mu;
    TermPtr phi, psi;
  };
  std::vector<Ordinal> cuts;
  std::vector<Entry> entries;

  int pair_count() const { return cuts.empty() ? 0 : static_cast<int>(cuts.size()) - 1; }
  std::vector<const Entry*> entries_at(int left) const;
  std::vector<const Entry*> entries_at(int left, const SPair& s) const;
  const Entry* find(int left, const SPair& s, int mu) const;
  int count(int left, const SPair& s) const;              // M(i,i+1,s)
  std::vector<SPair> zeta(int left) const;                // distinct s-vectors
  ContentSet chi(const TermPtr& w, int left) const;       // cum of the slice
  TermPtr slice(const TermPtr& w, int i, int j) const;    // w[cuts[i], cuts[j][
  void sort_entries();
};

// delta_{w,C}: substitutes (i|j) by w[cuts i, cuts j[ and {i|j}_{s,mu} by the
// entry's Psi.
TermPtr eval_bh(const BhTermPtr& t, const TermPtr& w, const Scheme& c);

struct SchemeReport {
  CheckReport rep;
  bool ok() const { return rep.all_ok(); }
};

// (FS.1) prod Theta = slice modulo DRH, (FS.2) phi-values match, plus shape
// checks (cuts ordered, entries on consecutive pairs, c(Psi) <= cum(Phi)).
SchemeReport verify_scheme(const Scheme& c, const TermPtr& w, const ConstraintPair& phi, const HOracle& h);

// Refining function from a coarse scheme to a fine one: per coarse entry the
// chain of s-vectors and the mu' hit in the fine scheme.
struct Refinement {
  struct Key {
    int left;
    SPair s;
    int mu;
    friend auto operator<=>(const Key&, const Key&) = default;
  };
  struct Image {
    std::vector<SPair> ts;
    int mu2;
  };
  std::map<Key, Image> lam;
};

SchemeReport verify_refinement(const Scheme& coarse, const Scheme& fine, const Refinement& lam,
                               const ConstraintPair& phi, const HOracle& h);

struct CommonRefinement {
  Scheme c3;
  Refinement lam1, lam2;  // from c1 (resp. c2) to c3
};

// Proposition-style construction: J3 = union of cut sets, entries made of
// exact extract-slices; outputs verify and refine both inputs.
CommonRefinement common_refinement(const Scheme& c1, const Scheme& c2, const TermPtr& w,
                                   const ConstraintPair& phi);

// Restriction of `fine` to the cut subset `cuts2` along a candidate refining
// function; validates (C.1)-(C.3) and throws CandidateInvalid naming the
// violated clause.
Scheme restrict_scheme(const Scheme& fine, const std::vector<Ordinal>& cuts2, const Refinement& cand,
                       const TermPtr& w, const ConstraintPair& phi, const HOracle& h);

// ---- systems of boundary relations ------------------------------------------

struct BoundarySystem {
  ConstraintPair constraints;  // target semigroup + phi (nu unused)
  ContentSet alphabet;         // letters of the modelled word
  std::vector<std::string> variables;
  std::map<std::string, std::string> bar;
  std::vector<std::string> J;  // ordered index names
  // zeta with multiplicities: per consecutive pair (position of left index)
  std::vector<std::vector<std::pair<SPair, int>>> zeta_M;
  std::vector<ContentSet> chi;                // per consecutive pair
  std::map<std::string, std::string> right;   // variable -> index name
  struct Relation {
    std::string i, x, j, xbar;
    friend bool operator==(const Relation&, const Relation&) = default;
  };
  std::vector<Relation> B;
  std::vector<std::vector<BhTermPtr>> BH;  // groups of chained equalities

  // metadata linking back to an S_{u=v} build (position p -> symbol x_p);
  // empty for hand-authored systems
  std::vector<Sym> word_syms;
  int r_split = 0;  // |u'| when word_syms is set

  int pos(const std::string& index) const;
  const std::string& bar_of(const std::string& x) const;
  void validate_shape() const;  // throws MalformedSystem
};

struct BoundaryModel {
  TermPtr w;
  std::vector<Ordinal> iota;  // parallel to J
  std::vector<Scheme::Entry> entries;

  Scheme scheme() const { return Scheme{iota, entries}; }
};

struct ModelReport {
  CheckReport rep;
  bool ok() const { return rep.all_ok(); }
};

// Conditions (M.1)-(M.5) with witnesses per entry.
ModelReport verify_model(const BoundarySystem& s, const BoundaryModel& m, const HOracle& h);

// The system S-bar_{u=v} of the reduction, with its canonical model
// M_{u=v} (w = delta(u'v'), iota from prefix alphas, Theta from delta).
std::pair<BoundarySystem, BoundaryModel> build_boundary_system(const SuvSystem& suv);

// epsilon(x) = prod Theta'(first occurrence of x); verified against the
// originating system via check_suv_solution, else VerificationFailed.
SolutionMap extract_solution(const BoundarySystem& s, const BoundaryModel& m, const SuvSystem& suv,
                             const HOracle& h);

// xi_Lambda(B_H): substitute pair variables along xi (coarse J position ->
// fine position) and suffix variables along Lambda.
std::vector<std::vector<BhTermPtr>> translate_BH(const std::vector<std::vector<BhTermPtr>>& groups,
                                                 const std::vector<int>& xi, const Refinement& lam,
                                                 const Scheme& coarse);

}  // namespace kdrh
