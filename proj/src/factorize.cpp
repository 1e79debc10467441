#include "kdrh/factorize.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <unordered_map>

namespace kdrh {

long long default_budget(const TermPtr& t) {
  long long size = t ? static_cast<long long>(t->node_count) : 1;
  int letters = t ? content(t).size() : 0;
  long long b = 10 * size * (1ll << std::min(letters, 20));
  return std::max<long long>(b, 64);
}

namespace {

// ---- alpha / cumulative-content state machine -----------------------------
//
// Appending an atom to a context with cumulative content K:
//   letter a in K        -> absorbed, K unchanged          (Remark on uu0)
//   letter a not in K    -> one end-marked prefix, K resets to {}
//   power s, c(s) <= K   -> absorbed, K unchanged
//   power s, otherwise   -> copies of s are appended until the per-copy
//                           K-state cycles; the ordinal contribution is
//                           pre + (cycle sum) * w and K becomes c(s).

struct Span {
  Ordinal delta;
  ContentSet after;
};

Span seq_span(const std::vector<TermPtr>& atoms, ContentSet K);

Span atom_span(const TermPtr& atom, ContentSet K) {
  if (atom->kind == TermKind::Lit) {
    if (K.contains(atom->letter)) return {Ordinal(0), K};
    return {Ordinal(1), ContentSet()};
  }
  assert(atom->kind == TermKind::Power);
  const TermPtr& base = atom->power_base();
  if (content(base).subset_of(K)) return {Ordinal(0), K};
  auto base_atoms = Term::atoms(base);
  std::vector<ContentSet> k_hist{K};
  std::vector<Ordinal> deltas;
  for (;;) {
    Span s = seq_span(base_atoms, k_hist.back());
    deltas.push_back(s.delta);
    for (std::size_t j = 0; j < k_hist.size(); ++j) {
      if (k_hist[j] == s.after) {
        // copies j+1 .. deltas.size() repeat forever
        Ordinal total;
        for (std::size_t i = 0; i < j; ++i) total += deltas[i];
        Ordinal cycle;
        for (std::size_t i = j; i < deltas.size(); ++i) cycle += deltas[i];
        total += cycle * Ordinal::omega();
        return {total, content(base)};
      }
    }
    k_hist.push_back(s.after);
  }
}

Span seq_span(const std::vector<TermPtr>& atoms, ContentSet K) {
  Ordinal total;
  for (const auto& a : atoms) {
    Span s = atom_span(a, K);
    total += s.delta;
    K = s.after;
  }
  return {total, K};
}

ContentSet cum_of(const TermPtr& t) { return seq_span(Term::atoms(t), ContentSet()).after; }

// ---- scanning for the first letter outside a set ---------------------------

struct Scan {
  TermPtr before;
  Letter letter = 0;
  TermPtr after;
  bool found = false;
};

// t = before . letter . after with c(before) <= R and letter outside R,
// modulo the exact unfolding s^(w-1) = s * (s^(w-1))^2.
Scan split_first_outside(const TermPtr& t, ContentSet R, Budget& budget) {
  std::vector<TermPtr> out;
  auto atoms = Term::atoms(t);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const TermPtr& atom = atoms[i];
    if (atom->kind == TermKind::Lit) {
      if (R.contains(atom->letter)) {
        out.push_back(atom);
        continue;
      }
      std::vector<TermPtr> rest(atoms.begin() + i + 1, atoms.end());
      return {Term::concat(out), atom->letter, Term::concat(rest), true};
    }
    const TermPtr& base = atom->power_base();
    if (content(base).subset_of(R)) {
      out.push_back(atom);
      continue;
    }
    budget.tick("power unfolding");
    Scan inner = split_first_outside(base, R, budget);
    assert(inner.found);
    out.push_back(inner.before);
    std::vector<TermPtr> rest{inner.after, atom, atom};
    rest.insert(rest.end(), atoms.begin() + i + 1, atoms.end());
    return {Term::concat(out), inner.letter, Term::concat(rest), true};
  }
  return {Term::concat(out), 0, Term::empty(), false};
}

LbfTriple lbf_impl(const TermPtr& t, Budget& budget) {
  if (!t || t->is_empty()) throw EmptyTermError("lbf");
  ContentSet full = content(t);
  ContentSet seen;
  std::vector<TermPtr> acc;
  TermPtr cur = t;
  for (;;) {
    budget.tick("lbf scan");
    Scan s = split_first_outside(cur, seen, budget);
    assert(s.found);
    ContentSet next = seen;
    next.add(s.letter);
    if (next == full) {
      acc.push_back(s.before);
      return {Term::concat(acc), s.letter, s.after};
    }
    acc.push_back(s.before);
    acc.push_back(Term::lit(s.letter));
    seen = next;
    cur = s.after;
  }
}

// RemainderKey: collapse maximal runs of structurally identical power atoms
// whose content equals the content of the whole remainder.  Such runs are
// only ever entered by unfolding, never absorbed into an emitted factor, so
// their multiplicity cannot influence the stream.  Runs over a proper
// sub-content do end up inside emitted factors (where the multiplicity is
// visible modulo H) and are kept verbatim; they are consumed or become
// full-content within finitely many steps.
TermPtr collapse_runs(const TermPtr& t) {
  ContentSet full = content(t);
  auto atoms = Term::atoms(t);
  std::vector<TermPtr> out;
  for (const auto& a : atoms) {
    if (a->kind == TermKind::Power && content(a) == full && !out.empty() && term_eq(out.back(), a))
      continue;
    out.push_back(a);
  }
  return Term::concat(out);
}

bool pair_eq(const LbfPair& a, const LbfPair& b) {
  return a.second == b.second && term_eq(a.first, b.first);
}

void primitive_reduce(std::vector<LbfPair>& period) {
  for (std::size_t d = 1; d <= period.size() / 2; ++d) {
    if (period.size() % d) continue;
    bool rep = true;
    for (std::size_t i = d; i < period.size() && rep; ++i) rep = pair_eq(period[i], period[i % d]);
    if (rep) {
      period.resize(d);
      return;
    }
  }
}

}  // namespace

LbfTriple lbf(const TermPtr& t) {
  Budget b(default_budget(t));
  return lbf(t, b);
}

LbfTriple lbf(const TermPtr& t, Budget& budget) { return lbf_impl(t, budget); }

std::vector<std::pair<Letter, TermPtr>> first_occurrences(const TermPtr& t) {
  if (!t || t->is_empty()) throw EmptyTermError("first_occurrences");
  Budget budget(default_budget(t));
  ContentSet full = content(t);
  ContentSet seen;
  std::vector<std::pair<Letter, TermPtr>> out;
  TermPtr cur = t;
  while (seen != full) {
    Scan s = split_first_outside(cur, seen, budget);
    assert(s.found);
    if (!out.empty()) out.back().second = s.before;
    out.emplace_back(s.letter, Term::empty());
    seen.add(s.letter);
    cur = s.after;
  }
  out.back().second = cur;
  return out;
}

const LbfPair& LbfSequence::at(std::size_t k) const {
  if (k < preperiod.size()) return preperiod[k];
  if (period.empty()) throw std::out_of_range("LbfSequence::at beyond finite sequence");
  return period[(k - preperiod.size()) % period.size()];
}

std::size_t LbfSequence::compare_window(const LbfSequence& other) const {
  std::size_t pre = std::max(preperiod.size(), other.preperiod.size());
  std::size_t p1 = period.empty() ? 1 : period.size();
  std::size_t p2 = other.period.empty() ? 1 : other.period.size();
  return pre + std::lcm(p1, p2);
}

LbfSequence lbf_seq(const TermPtr& t) {
  Budget b(default_budget(t));
  return lbf_seq(t, b);
}

LbfSequence lbf_seq(const TermPtr& t, Budget& budget) {
  if (!t || t->is_empty()) throw EmptyTermError("lbf_seq");
  LbfSequence seq;
  std::unordered_map<TermPtr, std::size_t, TermHash, TermEq> seen;
  TermPtr cur = t;
  for (;;) {
    if (cur->is_empty()) return seq;  // finite sequence, empty period
    budget.tick("lbf_seq");
    TermPtr key = collapse_runs(cur);
    auto it = seen.find(key);
    if (it != seen.end()) {
      std::size_t j = it->second;
      seq.period.assign(seq.preperiod.begin() + j, seq.preperiod.end());
      seq.preperiod.resize(j);
      primitive_reduce(seq.period);
      // Pull the boundary left while the preperiod tail matches the period
      // tail; keeps the stored description canonical.
      while (!seq.preperiod.empty() && pair_eq(seq.preperiod.back(), seq.period.back())) {
        seq.preperiod.pop_back();
        std::rotate(seq.period.rbegin(), seq.period.rbegin() + 1, seq.period.rend());
      }
      return seq;
    }
    seen.emplace(key, seq.preperiod.size());
    LbfTriple f = lbf_impl(cur, budget);
    seq.preperiod.emplace_back(f.left, f.marker);
    cur = f.right;
  }
}

ContentSet cumulative_content(const TermPtr& t) {
  if (!t || t->is_empty()) return ContentSet();
  return cum_of(t);
}

std::optional<TermPtr> regular_part(const TermPtr& t) {
  Budget b(default_budget(t));
  return regular_part(t, b);
}

std::optional<TermPtr> regular_part(const TermPtr& t, Budget& budget) {
  if (!t || t->is_empty()) throw EmptyTermError("regular_part");
  ContentSet cum = cumulative_content(t);
  if (cum.empty()) return std::nullopt;
  TermPtr cur = t;
  while (content(cur) != cum) {
    budget.tick("regular_part");
    cur = lbf_impl(cur, budget).right;
  }
  return cur;
}

bool is_reduced_product(const TermPtr& u, const TermPtr& v) {
  if (!v || v->is_empty()) return false;
  return !cumulative_content(u).contains(first_letter(v));
}

Ordinal alpha(const TermPtr& t) {
  if (!t || t->is_empty()) return Ordinal(0);
  return seq_span(Term::atoms(t), ContentSet()).delta;
}

std::pair<TermPtr, TermPtr> split_at_cumulative(const TermPtr& u, const TermPtr& v) {
  if (!v || v->is_empty()) return {Term::empty(), Term::empty()};
  ContentSet K = cumulative_content(u);
  Budget budget(default_budget(v));
  Scan s = split_first_outside(v, K, budget);
  if (!s.found) return {v, Term::empty()};
  return {s.before, Term::concat(Term::lit(s.letter), s.after)};
}

LetterSplit split_at_first_letter(const TermPtr& u, Letter a) {
  if (!u || !content(u).contains(a)) throw OutOfRangeError("split_at_first_letter: letter absent");
  ContentSet others(0xffffffffu);
  others.remove(a);
  Budget budget(default_budget(u));
  Scan s = split_first_outside(u, others, budget);
  assert(s.found && s.letter == a);
  return {s.before, s.after};
}

// ---- extract ---------------------------------------------------------------

namespace {

// Does the first marker of s scanned from K sit at its very start?  If not,
// the power has absorbed material before its first marker, which belongs to
// the piece on the left of a cut at that marker.
bool leads_with_marker(const TermPtr& s, ContentSet K) {
  for (const auto& atom : Term::atoms(s)) {
    if (atom->kind == TermKind::Lit) return !K.contains(atom->letter);
    if (content(atom->power_base()).subset_of(K)) return false;
    return leads_with_marker(atom->power_base(), K);
  }
  return false;
}

struct Extractor {
  Ordinal beta, gamma;
  std::vector<TermPtr> out;
  Budget& budget;

  void take_absorbed(const TermPtr& atom, const Ordinal& pos) {
    if (beta < pos && pos <= gamma) out.push_back(atom);
  }

  // Absorbed prefix of s before its first marker, scanned from K.  Used when
  // a cut sits exactly at a power's first marker: the head belongs to the
  // piece closing there.
  void collect_head(const TermPtr& s, ContentSet K) {
    for (const auto& atom : Term::atoms(s)) {
      if (atom->kind == TermKind::Lit) {
        if (!K.contains(atom->letter)) return;
        out.push_back(atom);
        continue;
      }
      if (content(atom->power_base()).subset_of(K)) {
        out.push_back(atom);
        continue;
      }
      collect_head(atom->power_base(), K);
      return;
    }
  }

  void walk(const std::vector<TermPtr>& atoms, Ordinal& pos, ContentSet& K) {
    for (const auto& atom : atoms) {
      if (atom->kind == TermKind::Lit) {
        if (K.contains(atom->letter)) {
          take_absorbed(atom, pos);
        } else {
          if (beta <= pos && pos < gamma) out.push_back(atom);
          pos += Ordinal(1);
          K = ContentSet();
        }
        continue;
      }
      Span sp = atom_span(atom, K);
      if (sp.delta.is_zero()) {
        take_absorbed(atom, pos);
        K = sp.after;
        continue;
      }
      Ordinal end = pos + sp.delta;
      if (gamma < pos || end <= beta) {
        // entirely outside the piece
      } else if (gamma == pos) {
        if (gamma > beta) collect_head(atom->power_base(), K);
      } else if (beta <= pos && end <= gamma && (beta < pos || leads_with_marker(atom->power_base(), K))) {
        out.push_back(atom);
      } else {
        slice_power(atom->power_base(), K, pos, end);
      }
      pos = end;
      K = sp.after;
    }
  }

  // Collect the part of [beta,gamma) that lies in a power spanning
  // [pos, pow_end), where the piece cuts it properly.
  void slice_power(const TermPtr& s, ContentSet K0, const Ordinal& pos, const Ordinal& pow_end) {
    auto atoms = Term::atoms(s);
    bool to_end = gamma >= pow_end;
    Ordinal cstart = pos;
    ContentSet K = K0;
    long long full_before = 0;
    for (;;) {
      budget.tick("extract");
      Span d = seq_span(atoms, K);
      Ordinal cend = cstart + d.delta;
      if (cend <= beta) {  // copy entirely to the left of the piece
        cstart = cend;
        K = d.after;
        ++full_before;
        continue;
      }
      if (to_end) {
        // z . (s^(w-1))^(full_before+2): exact, since
        // s^(w-1) = s^full_before . (this copy) . (s^(w-1))^(full_before+2).
        Ordinal p = cstart;
        ContentSet kk = K;
        walk(atoms, p, kk);
        for (long long i = 0; i < full_before + 2; ++i) out.push_back(Term::power(s));
        return;
      }
      Ordinal p = cstart;
      ContentSet kk = K;
      walk(atoms, p, kk);
      cstart = cend;
      K = d.after;
      ++full_before;
      if (cstart > gamma) return;
      if (cstart == gamma) {
        // absorbed head of the next copy still belongs to the piece
        Ordinal p2 = cstart;
        ContentSet k2 = K;
        walk(atoms, p2, k2);
        return;
      }
    }
  }
};

}  // namespace

TermPtr extract(const TermPtr& t, const Ordinal& beta, const Ordinal& gamma) {
  Ordinal a = alpha(t);
  if (beta > gamma || gamma > a) throw OutOfRangeError("extract: ordinals out of range");
  if (beta == gamma) return Term::empty();
  Budget budget(default_budget(t));
  Extractor ex{beta, gamma, {}, budget};
  Ordinal pos;
  ContentSet K;
  auto atoms = Term::atoms(t);
  ex.walk(atoms, pos, K);
  return Term::concat(ex.out);
}

}  // namespace kdrh
