#include <doctest.h>

#include <random>

#include "kdrh/equality.hpp"
#include "kdrh/semigroup.hpp"

using namespace kdrh;

namespace {

TermPtr T(const std::string& s) { return parse_term(s); }

FiniteSemigroup z3() {
  return FiniteSemigroup::validate(3, {0, 1, 2, 1, 2, 0, 2, 0, 1}, {"1", "g", "g2"}, 0);
}

}  // namespace

TEST_CASE("validate") {
  CHECK_NOTHROW(FiniteSemigroup::validate(2, {0, 0, 1, 1}));  // left zero
  CHECK_NOTHROW(z3());
  // a non-associative table: x*x = y, everything else x
  CHECK_THROWS_AS(FiniteSemigroup::validate(2, {1, 0, 0, 0}), SemigroupError);
  CHECK_THROWS_AS(FiniteSemigroup::validate(2, {0, 0, 1}), SemigroupError);
  CHECK_THROWS_AS(FiniteSemigroup::validate(2, {0, 0, 1, 5}), SemigroupError);
}

TEST_CASE("omega powers") {
  FiniteSemigroup g = z3();
  CHECK(g.power_omega_minus_one(1) == 2);  // g^(w-1) = g^2
  CHECK(g.power_omega(1) == 0);
  // monogenic aperiodic s^2 = s^3: s^(w-1) = s^2
  FiniteSemigroup m = FiniteSemigroup::validate(2, {1, 1, 1, 1}, {"s", "s2"});
  CHECK(m.power_omega_minus_one(0) == 1);
  // idempotents are their own (w-1)-power
  FiniteSemigroup sl = FiniteSemigroup::validate(2, {0, 1, 1, 1}, {"1", "e"}, 0);
  CHECK(sl.power_omega_minus_one(1) == 1);
  CHECK(sl.power_omega_minus_one(0) == 0);
}

TEST_CASE("eval") {
  FiniteSemigroup g = z3();
  Substitution sub{{letter_from_char('a'), 1}, {letter_from_char('b'), 1}};
  // (ab)^(w-1) = (g^2)^(w-1) = g
  CHECK(g.eval(T("(ab)^[w-1]"), sub) == OptElt{1});
  FiniteSemigroup lz = FiniteSemigroup::validate(2, {0, 0, 1, 1}, {"x", "y"});
  Substitution sub2{{letter_from_char('a'), 0}, {letter_from_char('b'), 1}};
  CHECK(lz.eval(T("ab"), sub2) == OptElt{0});
  CHECK(!g.eval(T("1"), {}).has_value());
  CHECK_THROWS_AS(g.eval(T("ab"), Substitution{}), SemigroupError);
}

TEST_CASE("satisfies") {
  FiniteSemigroup g = z3();
  CHECK(g.satisfies(T("(x)^[w](y)^[w]"), T("(y)^[w](x)^[w]")));
  FiniteSemigroup lz = FiniteSemigroup::validate(2, {0, 0, 1, 1});
  CHECK(lz.satisfies(T("xy"), T("x")));
  Substitution witness;
  CHECK(!g.satisfies(T("x"), T("xx"), &witness));
  CHECK(witness.at(letter_from_char('x')) == 1);
}

TEST_CASE("green structure") {
  FiniteSemigroup lz = FiniteSemigroup::validate(2, {0, 0, 1, 1});
  CHECK(lz.is_R_trivial());
  CHECK(lz.is_in_DRH(group_test_trivial));

  FiniteSemigroup g = z3();
  CHECK(!g.is_R_trivial());
  CHECK(g.is_in_DRH(group_test_abelian));
  CHECK(g.is_group());
  CHECK(g.is_commutative());

  // 2-element right-zero: one regular R-class of size 2, not a group
  FiniteSemigroup rz = FiniteSemigroup::validate(2, {0, 1, 0, 1});
  CHECK(!rz.is_R_trivial());
  CHECK(!rz.is_in_DRH(group_test_trivial));
  CHECK(!rz.is_in_DRH(group_test_abelian));
}

TEST_CASE("catalog members match their declared classes") {
  for (const auto& entry : catalog()) {
    CAPTURE(entry.name);
    CHECK(entry.in_R == entry.sg.is_R_trivial());
    CHECK(entry.in_R == entry.sg.is_in_DRH(group_test_trivial));
    CHECK(entry.in_DRAb == entry.sg.is_in_DRH(group_test_abelian));
  }
}

TEST_CASE("augment with content") {
  FiniteSemigroup lz = FiniteSemigroup::validate(2, {0, 0, 1, 1});
  CHECK(lz.augment_with_content(ContentSet::from_string("ab")).order() == 6);
  CHECK(trivial_semigroup().augment_with_content(ContentSet::from_string("a")).order() == 1);
  FiniteSemigroup z2 = FiniteSemigroup::validate(2, {0, 1, 1, 0}, {}, 0);
  CHECK(z2.augment_with_content(ContentSet::from_string("a")).order() == 2);
}

TEST_CASE("omega-minus-one sanity: t*s is the idempotent power") {
  for (const auto& entry : catalog()) {
    const auto& s = entry.sg;
    for (Elt e = 0; e < s.order(); ++e) {
      Elt t = s.power_omega_minus_one(e);
      Elt w = s.power_omega(e);
      CHECK(s.mul(t, e) == w);
      CHECK(s.mul(w, w) == w);
    }
  }
}

TEST_CASE("equal terms are satisfied by the catalog") {
  const HOracle& habs = ab_oracle();
  struct Pair {
    const char* u;
    const char* v;
  };
  for (Pair p : {Pair{"(ab)^[w-1]", "(ab)^[w]"}, Pair{"(abc)^[w]", "(abc)^[w](bca)^[w]"},
                 Pair{"a(ba)^[w-1]", "(ab)^[w-1]a(ba)^[w-1]"}}) {
    TermPtr u = T(p.u), v = T(p.v);
    REQUIRE(equal_mod_R(u, v));
    for (const auto& entry : catalog()) {
      if (!entry.in_R) continue;
      CAPTURE(entry.name);
      CHECK(entry.sg.satisfies(u, v));
    }
  }
  for (Pair p : {Pair{"(ab)^[w]ab", "ab(ab)^[w]"}, Pair{"(ab)^[w-1]ab", "ab(ab)^[w-1]"}}) {
    TermPtr u = T(p.u), v = T(p.v);
    REQUIRE(equal_mod_DRH(u, v, habs));
    for (const auto& entry : catalog()) {
      if (!entry.in_DRAb) continue;
      CAPTURE(entry.name);
      CHECK(entry.sg.satisfies(u, v));
    }
  }
}
