#include "kdrh/equations.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "kdrh/factorize.hpp"

namespace kdrh {

const VarTermPtr& VarTerm::empty() {
  static const VarTermPtr e = std::make_shared<const VarTerm>(VarTerm{VKind::Empty, "", {}});
  return e;
}

VarTermPtr VarTerm::var(Sym s) { return std::make_shared<const VarTerm>(VarTerm{VKind::Var, std::move(s), {}}); }

VarTermPtr VarTerm::power(const VarTermPtr& base) {
  if (!base || base->kind == VKind::Empty) return empty();
  return std::make_shared<const VarTerm>(VarTerm{VKind::Power, "", {base}});
}

VarTermPtr VarTerm::concat(const std::vector<VarTermPtr>& parts) {
  std::vector<VarTermPtr> flat;
  for (const auto& p : parts) {
    if (!p || p->kind == VKind::Empty) continue;
    if (p->kind == VKind::Concat)
      flat.insert(flat.end(), p->children.begin(), p->children.end());
    else
      flat.push_back(p);
  }
  if (flat.empty()) return empty();
  if (flat.size() == 1) return flat[0];
  return std::make_shared<const VarTerm>(VarTerm{VKind::Concat, "", std::move(flat)});
}

VarTermPtr VarTerm::word(const std::vector<Sym>& syms) {
  std::vector<VarTermPtr> parts;
  for (const auto& s : syms) parts.push_back(var(s));
  return concat(parts);
}

void VarTerm::collect_syms(std::vector<Sym>& out) const {
  switch (kind) {
    case VKind::Empty:
      break;
    case VKind::Var:
      out.push_back(sym);
      break;
    default:
      for (const auto& c : children) c->collect_syms(out);
  }
}

namespace {

struct VParser {
  const std::string& text;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }

  Sym lex_sym() {
    std::size_t start = pos;
    char c = text[pos++];
    if (c == '#') {
      while (pos < text.size() && isdigit(text[pos])) ++pos;
    } else if (c >= 'a' && c <= 'z') {
      if (pos < text.size() && text[pos] == '_') {
        ++pos;
        while (pos < text.size() && (islower(text[pos]) || isdigit(text[pos]))) ++pos;
      } else {
        while (pos < text.size() && isdigit(text[pos])) ++pos;
      }
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    return text.substr(start, pos - start);
  }

  int exponent() {
    skip();
    if (pos >= text.size() || text[pos] != '^') return 0;
    if (text.compare(pos, 6, "^[w-1]") == 0) {
      pos += 6;
      return 1;
    }
    if (text.compare(pos, 4, "^[w]") == 0) {
      pos += 4;
      return 2;
    }
    throw ParseError("malformed exponent", pos);
  }

  VarTermPtr factor() {
    skip();
    char c = text[pos];
    if (c == '1') {
      ++pos;
      return VarTerm::empty();
    }
    if (c == '(') {
      std::size_t open = pos;
      ++pos;
      VarTermPtr inner = sequence();
      skip();
      if (pos >= text.size() || text[pos] != ')') throw ParseError("unbalanced '('", open);
      ++pos;
      int e = exponent();
      if (e == 1) return VarTerm::power(inner);
      if (e == 2) return VarTerm::concat({inner, VarTerm::power(inner)});
      return inner;
    }
    return VarTerm::var(lex_sym());
  }

  VarTermPtr sequence() {
    std::vector<VarTermPtr> parts;
    skip();
    while (pos < text.size() && text[pos] != ')') {
      parts.push_back(factor());
      skip();
    }
    if (parts.empty()) throw ParseError("empty term", pos);
    return VarTerm::concat(parts);
  }
};

}  // namespace

VarTermPtr parse_var_term(const std::string& text) {
  VParser p{text, 0};
  p.skip();
  if (p.pos >= text.size()) throw ParseError("empty input", 0);
  VarTermPtr t = p.sequence();
  p.skip();
  if (p.pos < text.size()) throw ParseError("trailing input", p.pos);
  return t;
}

std::string render(const VarTermPtr& t) {
  if (!t || t->kind == VKind::Empty) return "1";
  switch (t->kind) {
    case VKind::Var:
      return t->sym;
    case VKind::Power:
      return "(" + render(t->children[0]) + ")^[w-1]";
    case VKind::Concat: {
      std::string out;
      for (std::size_t i = 0; i < t->children.size(); ++i) {
        const auto& c = t->children[i];
        bool sep = i > 0 && t->children[i - 1]->kind == VKind::Var &&
                   (t->children[i - 1]->sym.size() > 1 || (c->kind == VKind::Var && c->sym.size() > 1));
        if (sep) out += " ";
        out += render(c);
      }
      return out;
    }
    default:
      return "1";
  }
}

OptElt ConstraintPair::apply_phi(const TermPtr& t) const {
  Substitution sub;
  for (Letter l : content(t).letters()) {
    auto it = phi.find(l);
    if (it == phi.end()) throw SystemError("phi does not cover letter " + letter_name(l));
    sub[l] = it->second;
  }
  return target.eval(t, sub);
}

ConstraintPair ConstraintPair::trivial_for(ContentSet alphabet) {
  ConstraintPair c;
  c.target = trivial_semigroup();
  for (Letter l = 0; l < kMaxLetters; ++l)
    if (alphabet.contains(l) || is_parameter_letter(l)) c.phi[l] = 0;
  return c;
}

bool EquationSystem::is_word_system() const {
  auto word = [](const VarTermPtr& t) {
    if (t->kind == VKind::Power) return false;
    if (t->kind != VKind::Concat) return true;
    for (const auto& c : t->children)
      if (c->kind != VKind::Var) return false;
    return true;
  };
  for (const auto& [l, r] : equations)
    if (!word(l) || !word(r)) return false;
  return true;
}

TermPtr apply_solution(const VarTermPtr& t, const SolutionMap& delta) {
  if (!t) return Term::empty();
  switch (t->kind) {
    case VKind::Empty:
      return Term::empty();
    case VKind::Var: {
      auto it = delta.find(t->sym);
      if (it == delta.end()) throw SystemError("solution does not cover symbol " + t->sym);
      return it->second;
    }
    case VKind::Power:
      return Term::power(apply_solution(t->children[0], delta));
    case VKind::Concat: {
      std::vector<TermPtr> parts;
      for (const auto& c : t->children) parts.push_back(apply_solution(c, delta));
      return Term::concat(parts);
    }
  }
  return Term::empty();
}

bool CheckReport::all_ok() const {
  for (const auto& e : entries)
    if (!e.ok) return false;
  return true;
}

std::string CheckReport::summary() const {
  std::ostringstream os;
  for (const auto& e : entries) os << (e.ok ? "pass  " : "FAIL  ") << e.what << "\n";
  return os.str();
}

CheckReport check_solution(const EquationSystem& sys, const SolutionMap& delta, const HOracle& h) {
  CheckReport rep;
  EqualityEngine eng(h);
  for (const auto& [lhs, rhs] : sys.equations) {
    TermPtr l = apply_solution(lhs, delta);
    TermPtr r = apply_solution(rhs, delta);
    rep.entries.push_back({"(S.1) " + render(lhs) + " = " + render(rhs), eng.equal(l, r)});
  }
  for (const auto& x : sys.variables) {
    auto nu_it = sys.constraints.nu.find(x);
    if (nu_it == sys.constraints.nu.end()) continue;
    auto d_it = delta.find(x);
    bool ok = d_it != delta.end() && sys.constraints.apply_phi(d_it->second) == nu_it->second;
    rep.entries.push_back({"(S.2) phi(delta(" + x + ")) = nu(" + x + ")", ok});
  }
  for (const auto& [p, ev] : sys.parameters) {
    auto d_it = delta.find(p);
    bool ok = d_it != delta.end() && term_eq(normalize(d_it->second), normalize(ev));
    rep.entries.push_back({"(S.3) delta(" + p + ") = ev(" + p + ")", ok});
  }
  for (const auto& [x, t] : sys.content_equalities) {
    auto d_it = delta.find(x);
    bool ok = d_it != delta.end() && content(d_it->second) == content(apply_solution(t, delta));
    rep.entries.push_back({"content c(" + x + ") = c(" + render(t) + ")", ok});
  }
  return rep;
}

namespace {

bool contains_power(const VarTermPtr& t) {
  if (t->kind == VKind::Power) return true;
  for (const auto& c : t->children)
    if (contains_power(c)) return true;
  return false;
}

// Leftmost innermost power subterm (its base is a word).
VarTermPtr find_innermost_power(const VarTermPtr& t) {
  if (t->kind == VKind::Power) {
    VarTermPtr inner = find_innermost_power(t->children[0]);
    return inner ? inner : t;
  }
  for (const auto& c : t->children) {
    VarTermPtr inner = find_innermost_power(c);
    if (inner) return inner;
  }
  return nullptr;
}

bool var_term_eq(const VarTermPtr& a, const VarTermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind || a->sym != b->sym || a->children.size() != b->children.size()) return false;
  for (std::size_t i = 0; i < a->children.size(); ++i)
    if (!var_term_eq(a->children[i], b->children[i])) return false;
  return true;
}

VarTermPtr substitute(const VarTermPtr& t, const VarTermPtr& what, const Sym& by) {
  if (var_term_eq(t, what)) return VarTerm::var(by);
  if (t->children.empty()) return t;
  std::vector<VarTermPtr> parts;
  for (const auto& c : t->children) parts.push_back(substitute(c, what, by));
  if (t->kind == VKind::Power) return VarTerm::power(parts[0]);
  return VarTerm::concat(parts);
}

Sym fresh_name(const std::string& stem, std::set<Sym>& used) {
  Sym name = stem;
  int k = 2;
  while (used.count(name)) name = stem + "_" + std::to_string(k++);
  used.insert(name);
  return name;
}

}  // namespace

EquationSystem to_word_system(const EquationSystem& sys, SolutionMap* delta) {
  EquationSystem out = sys;
  std::set<Sym> used(out.variables.begin(), out.variables.end());
  for (const auto& [p, ev] : out.parameters) used.insert(p);
  int fresh = 1;
  for (;;) {
    std::size_t idx = out.equations.size();
    for (std::size_t i = 0; i < out.equations.size(); ++i)
      if (contains_power(out.equations[i].first) || contains_power(out.equations[i].second)) {
        idx = i;
        break;
      }
    if (idx == out.equations.size()) break;
    auto [lhs, rhs] = out.equations[idx];
    VarTermPtr p = find_innermost_power(lhs);
    if (!p) p = find_innermost_power(rhs);
    VarTermPtr base = p->children[0];

    // If the equation is exactly  x = base^(w-1)  with x a variable, reuse x
    // as the name and drop the defining equation (the lemma is an iff).
    Sym z;
    if (lhs->kind == VKind::Var && var_term_eq(rhs, p)) {
      z = lhs->sym;
      out.equations.erase(out.equations.begin() + idx);
    } else if (rhs->kind == VKind::Var && var_term_eq(lhs, p)) {
      z = rhs->sym;
      out.equations.erase(out.equations.begin() + idx);
    } else {
      z = fresh_name("w" + std::to_string(fresh++), used);
      out.variables.push_back(z);
      for (auto& [l, r] : out.equations) {
        l = substitute(l, p, z);
        r = substitute(r, p, z);
      }
      if (delta) (*delta)[z] = Term::power(apply_solution(base, *delta));
    }
    VarTermPtr zv = VarTerm::var(z);
    out.equations.emplace_back(VarTerm::concat({zv, base, zv}), zv);
    out.equations.emplace_back(VarTerm::concat({zv, base}), VarTerm::concat({base, zv}));
    out.content_equalities.emplace_back(z, base);
  }
  return out;
}

std::pair<VarTermPtr, VarTermPtr> to_single_word_equation(const EquationSystem& sys) {
  if (!sys.is_word_system()) throw SystemError("to_single_word_equation requires a word system");
  if (sys.equations.empty()) throw SystemError("no equations");
  if (sys.equations.size() == 1) return sys.equations.front();
  std::vector<VarTermPtr> lhs, rhs;
  for (std::size_t i = 0; i < sys.equations.size(); ++i) {
    if (i > 0) {
      Sym sep = "#" + std::to_string(i);
      lhs.push_back(VarTerm::var(sep));
      rhs.push_back(VarTerm::var(sep));
    }
    lhs.push_back(sys.equations[i].first);
    rhs.push_back(sys.equations[i].second);
  }
  return {VarTerm::concat(lhs), VarTerm::concat(rhs)};
}

std::vector<Sym> SuvSystem::full_word() const {
  std::vector<Sym> w = u_word;
  w.insert(w.end(), v_word.begin(), v_word.end());
  return w;
}

namespace {

Letter parameter_letter_of(const Sym& s) {
  if (s == "#") return kHashLetter;
  if (s.size() >= 2 && s[0] == '#') return numbered_hash_letter(std::stoi(s.substr(1)));
  throw SystemError("not a parameter symbol: " + s);
}

bool is_param_sym(const Sym& s) { return !s.empty() && s[0] == '#'; }

}  // namespace

SuvSystem build_S_uv(const std::vector<Sym>& u, const std::vector<Sym>& v, const SolutionMap& delta_in,
                     const ConstraintPair& constraints, const HOracle& h) {
  (void)h;
  SuvSystem out;
  out.u_word = u;
  out.v_word = v;
  out.constraints = constraints;
  out.delta = delta_in;

  std::set<Sym> used;
  int hash_counter = 0;
  auto note_sym = [&](const Sym& s) {
    used.insert(s);
    if (is_param_sym(s) && s.size() > 1) hash_counter = std::max(hash_counter, std::stoi(s.substr(1)));
  };
  for (const auto& s : u) note_sym(s);
  for (const auto& s : v) note_sym(s);
  for (const auto& [x, t] : delta_in) {
    note_sym(x);
    out.alphabet = out.alphabet | content(t);
  }

  std::vector<Sym> var_order;
  auto add_var = [&](const Sym& s) {
    if (is_param_sym(s)) return;
    if (std::find(var_order.begin(), var_order.end(), s) == var_order.end()) var_order.push_back(s);
  };
  for (const auto& s : u) add_var(s);
  for (const auto& s : v) add_var(s);

  auto dval = [&](const Sym& s) -> TermPtr {
    if (is_param_sym(s)) return Term::lit(parameter_letter_of(s));
    auto it = out.delta.find(s);
    if (it == out.delta.end()) throw SystemError("solution does not cover variable " + s);
    return it->second;
  };

  std::vector<std::array<Sym, 3>> s0;  // y = y1 y2, stored as {y, y1, y2}

  // Eliminate non-reduced adjacent products until delta is reduced with
  // respect to u' = v'.
  for (;;) {
    std::vector<Sym>* words[2] = {&out.u_word, &out.v_word};
    Sym px, py;
    bool found = false;
    for (auto* w : words) {
      for (std::size_t i = 0; i + 1 < w->size() && !found; ++i) {
        const Sym& x = (*w)[i];
        const Sym& y = (*w)[i + 1];
        TermPtr dx = dval(x), dy = dval(y);
        if (dx->is_empty() || dy->is_empty()) continue;  // empty-word policy
        if (!is_reduced_product(dx, dy)) {
          px = x;
          py = y;
          found = true;
        }
      }
      if (found) break;
    }
    if (!found) break;

    TermPtr dx = dval(px), dy = dval(py);
    auto replace_pair = [&](std::vector<Sym>& w, const std::vector<Sym>& repl) {
      for (std::size_t i = 0; i + 1 < w.size();) {
        if (w[i] == px && w[i + 1] == py) {
          w.erase(w.begin() + i, w.begin() + i + 2);
          w.insert(w.begin() + i, repl.begin(), repl.end());
          i += repl.size();
        } else {
          ++i;
        }
      }
    };
    if (content(dy).subset_of(cumulative_content(dx))) {
      Sym z = fresh_name("t_" + px + py, used);
      var_order.push_back(z);
      out.s1.push_back({px, py, z});
      out.delta[z] = Term::concat(dx, dy);
      replace_pair(out.u_word, {z});
      replace_pair(out.v_word, {z});
    } else {
      auto [d1, d2] = split_at_cumulative(dx, dy);
      Sym y1 = fresh_name(py + "_1", used);
      Sym y2 = fresh_name(py + "_2", used);
      Sym z = fresh_name("t_" + px + py, used);
      var_order.push_back(y1);
      var_order.push_back(y2);
      var_order.push_back(z);
      s0.push_back({py, y1, y2});
      out.s1.push_back({px, y1, z});
      out.delta[y1] = d1;
      out.delta[y2] = d2;
      out.delta[z] = Term::concat(dx, d1);
      replace_pair(out.u_word, {z, y2});
      replace_pair(out.v_word, {z, y2});
    }
  }

  // Fold S0 into u' = v' and make every variable occur in the equation.
  auto occurs = [&](const Sym& s) {
    return std::find(out.u_word.begin(), out.u_word.end(), s) != out.u_word.end() ||
           std::find(out.v_word.begin(), out.v_word.end(), s) != out.v_word.end();
  };
  auto fresh_hash = [&]() {
    Sym s = "#" + std::to_string(++hash_counter);
    used.insert(s);
    return s;
  };
  for (const auto& [y, y1, y2] : s0) {
    Sym sep = fresh_hash();
    out.u_word.push_back(sep);
    out.u_word.push_back(y);
    out.v_word.push_back(sep);
    out.v_word.push_back(y1);
    out.v_word.push_back(y2);
  }
  for (const auto& x : var_order) {
    if (occurs(x)) continue;
    Sym sep = fresh_hash();
    out.u_word.push_back(sep);
    out.u_word.push_back(x);
    out.v_word.push_back(sep);
    out.v_word.push_back(x);
  }
  out.u_word.push_back("#");
  out.v_word.push_back("#");

  // S2 = { x a^w = x : a in cum(delta(x)) } per variable.
  for (const auto& x : var_order)
    for (Letter a : cumulative_content(dval(x)).letters()) out.s2.emplace_back(x, a);

  out.variables = var_order;
  std::set<Sym> params;
  for (const auto& s : out.full_word())
    if (is_param_sym(s)) params.insert(s);
  out.parameters.assign(params.begin(), params.end());

  // Parameters evaluate to themselves; constraints for X' from the extension.
  for (const auto& p : out.parameters) {
    Letter l = parameter_letter_of(p);
    out.delta[p] = Term::lit(l);
    if (!out.constraints.phi.count(l)) {
      if (constraints.target.identity())
        out.constraints.phi[l] = *constraints.target.identity();
      else
        throw SystemError("phi must cover parameter letter " + p + " (no identity in target)");
    }
  }
  for (const auto& x : var_order) out.constraints.nu[x] = out.constraints.apply_phi(dval(x));
  for (const auto& p : out.parameters) out.constraints.nu[p] = out.constraints.apply_phi(out.delta[p]);

  return out;
}

CheckReport check_suv_solution(const SuvSystem& sys, const SolutionMap& delta, const HOracle& h) {
  CheckReport rep;
  EqualityEngine eng(h);
  auto val = [&](const Sym& s) -> TermPtr {
    auto it = delta.find(s);
    if (it == delta.end()) throw SystemError("solution does not cover symbol " + s);
    return it->second;
  };
  auto word_val = [&](const std::vector<Sym>& w) {
    std::vector<TermPtr> parts;
    for (const auto& s : w) parts.push_back(val(s));
    return Term::concat(parts);
  };
  rep.entries.push_back({"(S.1) u' = v'", eng.equal(word_val(sys.u_word), word_val(sys.v_word))});
  for (const auto& [x, y, z] : sys.s1)
    rep.entries.push_back(
        {"(S.1) " + x + " " + y + " = " + z, eng.equal(Term::concat(val(x), val(y)), val(z))});
  for (const auto& [x, a] : sys.s2) {
    TermPtr aw = Term::concat(Term::lit(a), Term::power(Term::lit(a)));
    rep.entries.push_back({"(S.1) " + x + " " + letter_name(a) + "^w = " + x,
                           eng.equal(Term::concat(val(x), aw), val(x))});
  }
  for (const auto& x : sys.variables) {
    auto nu_it = sys.constraints.nu.find(x);
    if (nu_it == sys.constraints.nu.end()) continue;
    rep.entries.push_back(
        {"(S.2) phi(delta(" + x + ")) = nu(" + x + ")", sys.constraints.apply_phi(val(x)) == nu_it->second});
  }
  for (const auto& p : sys.parameters) {
    bool ok = delta.count(p) && term_eq(val(p), Term::lit(parameter_letter_of(p)));
    rep.entries.push_back({"(S.3) delta(" + p + ") = " + p, ok});
  }
  return rep;
}

}  // namespace kdrh
