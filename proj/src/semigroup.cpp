#include "kdrh/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace kdrh {

FiniteSemigroup::FiniteSemigroup(int order, std::vector<Elt> table, std::vector<std::string> names,
                                 std::optional<Elt> identity)
    : order_(order), table_(std::move(table)), names_(std::move(names)), identity_(identity) {}

FiniteSemigroup FiniteSemigroup::validate(int order, std::vector<Elt> table, std::vector<std::string> names,
                                          std::optional<Elt> identity) {
  if (order <= 0) throw SemigroupError("order must be positive");
  if (static_cast<int>(table.size()) != order * order) throw SemigroupError("table size mismatch");
  for (Elt e : table)
    if (e < 0 || e >= order) throw SemigroupError("table entry out of range");
  FiniteSemigroup s(order, std::move(table), std::move(names), identity);
  for (Elt a = 0; a < order; ++a)
    for (Elt b = 0; b < order; ++b)
      for (Elt c = 0; c < order; ++c)
        if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c)))
          throw SemigroupError("not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                               std::to_string(c) + ")");
  if (identity) {
    for (Elt a = 0; a < order; ++a)
      if (s.mul(*identity, a) != a || s.mul(a, *identity) != a)
        throw SemigroupError("declared identity is not neutral");
  }
  return s;
}

std::string FiniteSemigroup::name_of(OptElt e) const {
  if (!e) return "I";
  if (*e < static_cast<int>(names_.size())) return names_[*e];
  return std::to_string(*e);
}

Elt FiniteSemigroup::power(Elt s, long long n) const {
  Elt acc = s;
  for (long long i = 1; i < n; ++i) acc = mul(acc, s);
  return acc;
}

Elt FiniteSemigroup::power_omega(Elt s) const {
  // Walk s, s^2, ... until the cycle is found; the idempotent power is the
  // unique idempotent in the cycle.
  Elt cur = s;
  for (int i = 0; i < 2 * order_ + 2; ++i) {
    if (mul(cur, cur) == cur) return cur;
    cur = mul(cur, s);
  }
  throw SemigroupError("no idempotent power found (table not associative?)");
}

Elt FiniteSemigroup::power_omega_minus_one(Elt s) const {
  // s^(w-1) = s^j for the least j >= index(s) with j == -1 mod period(s).
  std::vector<Elt> seen;
  Elt cur = s;
  while (std::find(seen.begin(), seen.end(), cur) == seen.end()) {
    seen.push_back(cur);
    cur = mul(cur, s);
  }
  int index = static_cast<int>(std::find(seen.begin(), seen.end(), cur) - seen.begin()) + 1;  // s^index starts cycle
  int period = static_cast<int>(seen.size()) - index + 1;
  long long j = index;
  while ((j + 1) % period != 0) ++j;
  return power(s, j);
}

OptElt FiniteSemigroup::eval(const TermPtr& t, const Substitution& sub) const {
  if (!t || t->is_empty()) return std::nullopt;
  switch (t->kind) {
    case TermKind::Empty:
      return std::nullopt;
    case TermKind::Lit: {
      auto it = sub.find(t->letter);
      if (it == sub.end()) throw SemigroupError("unbound letter " + letter_name(t->letter));
      return it->second;
    }
    case TermKind::Power: {
      OptElt b = eval(t->power_base(), sub);
      if (!b) return std::nullopt;
      return power_omega_minus_one(*b);
    }
    case TermKind::Concat: {
      OptElt acc;
      for (const auto& c : t->children) acc = mul(acc, eval(c, sub));
      return acc;
    }
  }
  return std::nullopt;
}

bool FiniteSemigroup::satisfies(const TermPtr& u, const TermPtr& v) const {
  return satisfies(u, v, nullptr);
}

bool FiniteSemigroup::satisfies(const TermPtr& u, const TermPtr& v, Substitution* witness) const {
  std::vector<Letter> letters = (content(u) | content(v)).letters();
  double combos = 1;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    combos *= order_;
    if (combos > 1e6) throw SemigroupError("substitution sweep too large");
  }
  std::vector<Elt> assign(letters.size(), 0);
  for (;;) {
    Substitution sub;
    for (std::size_t i = 0; i < letters.size(); ++i) sub[letters[i]] = assign[i];
    if (eval(u, sub) != eval(v, sub)) {
      if (witness) *witness = sub;
      return false;
    }
    std::size_t k = 0;
    while (k < assign.size() && ++assign[k] == order_) assign[k++] = 0;
    if (k == assign.size()) break;
    if (assign.empty()) break;
  }
  return true;
}

std::vector<int> FiniteSemigroup::green_R() const {
  // a R b iff aS^1 == bS^1; compare right ideals as sets.
  std::vector<std::set<Elt>> ideals(order_);
  for (Elt a = 0; a < order_; ++a) {
    ideals[a].insert(a);
    for (Elt b = 0; b < order_; ++b) ideals[a].insert(mul(a, b));
  }
  std::vector<int> cls(order_, -1);
  int next = 0;
  for (Elt a = 0; a < order_; ++a) {
    if (cls[a] >= 0) continue;
    cls[a] = next;
    for (Elt b = a + 1; b < order_; ++b)
      if (cls[b] < 0 && ideals[a] == ideals[b]) cls[b] = next;
    ++next;
  }
  return cls;
}

bool FiniteSemigroup::is_R_trivial() const {
  auto cls = green_R();
  return std::set<int>(cls.begin(), cls.end()).size() == static_cast<std::size_t>(order_);
}

bool FiniteSemigroup::is_in_DRH(
    const std::function<bool(const FiniteSemigroup&, const std::vector<Elt>&)>& group_test) const {
  auto cls = green_R();
  int ncls = *std::max_element(cls.begin(), cls.end()) + 1;
  for (int c = 0; c < ncls; ++c) {
    std::vector<Elt> members;
    for (Elt a = 0; a < order_; ++a)
      if (cls[a] == c) members.push_back(a);
    bool regular = false;
    for (Elt a : members)
      if (mul(a, a) == a) regular = true;
    if (!regular) continue;
    // The class must be a group: closed, one idempotent neutral in it, inverses.
    int idem = -1, idems = 0;
    for (Elt a : members)
      if (mul(a, a) == a) {
        idem = a;
        ++idems;
      }
    if (idems != 1) return false;
    bool ok = true;
    for (Elt a : members) {
      if (mul(idem, a) != a || mul(a, idem) != a) ok = false;
      bool inverse = false;
      for (Elt b : members)
        if (mul(a, b) == idem && mul(b, a) == idem) inverse = true;
      if (!inverse) ok = false;
      for (Elt b : members)
        if (std::find(members.begin(), members.end(), mul(a, b)) == members.end()) ok = false;
    }
    if (!ok) return false;
    if (!group_test(*this, members)) return false;
  }
  return true;
}

bool FiniteSemigroup::is_group() const {
  int idem = -1;
  for (Elt a = 0; a < order_; ++a)
    if (mul(a, a) == a) {
      if (idem >= 0) return false;
      idem = a;
    }
  if (idem < 0) return false;
  for (Elt a = 0; a < order_; ++a) {
    if (mul(idem, a) != a || mul(a, idem) != a) return false;
    bool inv = false;
    for (Elt b = 0; b < order_; ++b)
      if (mul(a, b) == idem && mul(b, a) == idem) inv = true;
    if (!inv) return false;
  }
  return true;
}

bool FiniteSemigroup::is_commutative() const {
  for (Elt a = 0; a < order_; ++a)
    for (Elt b = 0; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

long long FiniteSemigroup::subgroup_exponent() const {
  long long l = 1;
  for (Elt s = 0; s < order_; ++s) {
    // order of s inside the kernel group of <s>
    Elt e = power_omega(s);
    Elt g = mul(e, s);  // generator of the kernel group cycle
    long long ord = 1;
    Elt cur = g;
    while (cur != e && ord <= order_ + 1) {
      cur = mul(cur, g);
      ++ord;
    }
    if (cur == e) l = std::lcm(l, ord);
  }
  return l;
}

FiniteSemigroup FiniteSemigroup::augment_with_content(ContentSet A) const {
  std::vector<ContentSet> subsets;
  std::vector<Letter> letters = A.letters();
  int n = static_cast<int>(letters.size());
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    ContentSet c;
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1) c.add(letters[i]);
    subsets.push_back(c);
  }
  int k = static_cast<int>(subsets.size());
  int m = order_ * k;
  std::vector<Elt> table(m * m);
  std::vector<std::string> names(m);
  auto id = [&](Elt s, int c) { return s * k + c; };
  for (Elt s = 0; s < order_; ++s)
    for (int c = 0; c < k; ++c) {
      names[id(s, c)] = name_of(s) + subsets[c].str();
      for (Elt s2 = 0; s2 < order_; ++s2)
        for (int c2 = 0; c2 < k; ++c2) {
          ContentSet uni = subsets[c] | subsets[c2];
          int cu = static_cast<int>(std::find(subsets.begin(), subsets.end(), uni) - subsets.begin());
          table[id(s, c) * m + id(s2, c2)] = id(mul(s, s2), cu);
        }
    }
  return FiniteSemigroup(m, std::move(table), std::move(names));
}

FiniteSemigroup FiniteSemigroup::direct_product(const FiniteSemigroup& other) const {
  int m = order_ * other.order_;
  std::vector<Elt> table(m * m);
  std::vector<std::string> names(m);
  auto id = [&](Elt a, Elt b) { return a * other.order_ + b; };
  for (Elt a = 0; a < order_; ++a)
    for (Elt b = 0; b < other.order_; ++b) {
      names[id(a, b)] = "(" + name_of(a) + "," + other.name_of(b) + ")";
      for (Elt a2 = 0; a2 < order_; ++a2)
        for (Elt b2 = 0; b2 < other.order_; ++b2)
          table[id(a, b) * m + id(a2, b2)] = id(mul(a, a2), other.mul(b, b2));
    }
  std::optional<Elt> ident;
  if (identity_ && other.identity_) ident = id(*identity_, *other.identity_);
  return FiniteSemigroup(m, std::move(table), std::move(names), ident);
}

bool group_test_trivial(const FiniteSemigroup&, const std::vector<Elt>& cls) { return cls.size() == 1; }

bool group_test_abelian(const FiniteSemigroup& s, const std::vector<Elt>& cls) {
  for (Elt a : cls)
    for (Elt b : cls)
      if (s.mul(a, b) != s.mul(b, a)) return false;
  return true;
}

const FiniteSemigroup& trivial_semigroup() {
  static const FiniteSemigroup s = FiniteSemigroup::validate(1, {0}, {"e"}, 0);
  return s;
}

namespace {

FiniteSemigroup cyclic_group(int n) {
  std::vector<Elt> table(n * n);
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = a == 0 ? "1" : (a == 1 ? "g" : "g" + std::to_string(a));
    for (int b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
  }
  return FiniteSemigroup::validate(n, std::move(table), std::move(names), 0);
}

FiniteSemigroup semilattice2() {
  // {1, e} with e*e = e, meet semilattice with identity 1
  return FiniteSemigroup::validate(2, {0, 1, 1, 1}, {"1", "e"}, 0);
}

FiniteSemigroup left_zero2() { return FiniteSemigroup::validate(2, {0, 0, 1, 1}, {"x", "y"}); }

FiniteSemigroup null3() {
  // {m, n, 0} with every product 0
  return FiniteSemigroup::validate(3, {2, 2, 2, 2, 2, 2, 2, 2, 2}, {"m", "n", "0"});
}

FiniteSemigroup monogenic_aperiodic2() {
  // {s, s^2} with s^3 = s^2
  return FiniteSemigroup::validate(2, {1, 1, 1, 1}, {"s", "s2"});
}

FiniteSemigroup monogenic_monoid3() {
  // {1, s, s^2} with s^3 = s^2
  return FiniteSemigroup::validate(3, {0, 1, 2, 1, 2, 2, 2, 2, 2}, {"1", "s", "s2"}, 0);
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> cat = [] {
    std::vector<CatalogEntry> v;
    v.push_back({"trivial", trivial_semigroup(), true, true});
    v.push_back({"sl2", semilattice2(), true, true});
    v.push_back({"lz2", left_zero2(), true, true});
    v.push_back({"null3", null3(), true, true});
    v.push_back({"mono2", monogenic_aperiodic2(), true, true});
    // 6-element R-trivial monoid: Sl2 x {1, s, s^2 : s^3 = s^2}
    v.push_back({"rt6", semilattice2().direct_product(monogenic_monoid3()), true, true});
    v.push_back({"z2", cyclic_group(2), false, true});
    v.push_back({"z3", cyclic_group(3), false, true});
    v.push_back({"z2xsl2", cyclic_group(2).direct_product(semilattice2()), false, true});
    v.push_back({"z3xlz2", cyclic_group(3).direct_product(left_zero2()), false, true});
    return v;
  }();
  return cat;
}

}  // namespace kdrh
