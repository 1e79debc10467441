#include "kdrh/equality.hpp"

namespace kdrh {

std::size_t EqualityEngine::PairHash::operator()(const std::pair<TermPtr, TermPtr>& p) const {
  return p.first->hash * 1000003u ^ p.second->hash;
}

bool EqualityEngine::PairEq::operator()(const std::pair<TermPtr, TermPtr>& a,
                                        const std::pair<TermPtr, TermPtr>& b) const {
  return term_eq(a.first, b.first) && term_eq(a.second, b.second);
}

EqualityEngine::EqualityEngine(const HOracle& h, long long budget_limit)
    : h_(h), budget_(budget_limit > 0 ? budget_limit : 1ll << 22) {}

bool EqualityEngine::r_equivalent(const TermPtr& u, const TermPtr& v) {
  bool ue = !u || u->is_empty();
  bool ve = !v || v->is_empty();
  if (ue || ve) return ue == ve;
  if (content(u) != content(v)) return false;
  if (term_eq(u, v)) return true;
  auto key = std::make_pair(u, v);
  if (auto it = memo_requiv_.find(key); it != memo_requiv_.end()) return it->second;
  LbfSequence su = lbf_seq(u, budget_);
  LbfSequence sv = lbf_seq(v, budget_);
  bool res = su.stream_equal(sv, [this](const TermPtr& a, const TermPtr& b) { return equal(a, b); });
  memo_requiv_.emplace(std::move(key), res);
  return res;
}

bool EqualityEngine::equal(const TermPtr& u, const TermPtr& v) {
  bool ue = !u || u->is_empty();
  bool ve = !v || v->is_empty();
  if (ue || ve) return ue == ve;  // I equals only I
  if (term_eq(u, v)) return true;
  return r_equivalent(u, v) && h_.equal_mod_H(u, v);
}

bool r_equivalent_mod_DRH(const TermPtr& u, const TermPtr& v, const HOracle& h) {
  EqualityEngine e(h);
  return e.r_equivalent(u, v);
}

bool equal_mod_DRH(const TermPtr& u, const TermPtr& v, const HOracle& h) {
  EqualityEngine e(h);
  return e.equal(u, v);
}

bool equal_mod_R(const TermPtr& u, const TermPtr& v) { return equal_mod_DRH(u, v, trivial_oracle()); }

}  // namespace kdrh
