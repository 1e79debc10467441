#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kdrh/term.hpp"

using namespace kdrh;

namespace {

TermPtr random_term(std::mt19937& rng, int max_nodes, int max_depth, ContentSet alphabet) {
  std::vector<Letter> letters = alphabet.letters();
  std::uniform_int_distribution<int> pick(0, static_cast<int>(letters.size()) - 1);
  std::uniform_int_distribution<int> shape(0, 9);
  if (max_nodes <= 1 || max_depth <= 0) return Term::lit(letters[pick(rng)]);
  int s = shape(rng);
  if (s < 4) return Term::lit(letters[pick(rng)]);
  if (s < 7) {
    int budget = max_nodes - 1;
    std::vector<TermPtr> parts;
    int n = 2 + shape(rng) % 3;
    for (int i = 0; i < n && budget > 0; ++i) {
      TermPtr p = random_term(rng, budget / 2 + 1, max_depth, alphabet);
      budget -= static_cast<int>(p->node_count);
      parts.push_back(p);
    }
    return Term::concat(parts);
  }
  return Term::power(random_term(rng, max_nodes - 1, max_depth - 1, alphabet));
}

}  // namespace

TermPtr kdrh_test_random_term(std::mt19937& rng, int max_nodes, int max_depth, ContentSet alphabet) {
  return random_term(rng, max_nodes, max_depth, alphabet);
}

TEST_CASE("parse basics") {
  ContentSet ab = ContentSet::from_string("ab");
  TermPtr t = parse_term("ab(ab)^[w-1]", ab);
  CHECK(t->kind == TermKind::Concat);
  CHECK(t->children.size() == 3);
  CHECK(t->children[2]->kind == TermKind::Power);
  CHECK(render(t) == "ab(ab)^[w-1]");

  CHECK(parse_term("1", ab)->is_empty());

  // t^[w] is sugar for t * t^[w-1]
  TermPtr w = parse_term("(a)^[w]", ab);
  TermPtr expanded = Term::concat(Term::lit('a'), Term::power(Term::lit('a')));
  CHECK(term_eq(w, expanded));
}

TEST_CASE("parse errors") {
  ContentSet ab = ContentSet::from_string("ab");
  CHECK_THROWS_AS(parse_term("ac", ab), ParseError);
  CHECK_THROWS_AS(parse_term("(ab", ab), ParseError);
  CHECK_THROWS_AS(parse_term("a)^[w-1]", ab), ParseError);
  CHECK_THROWS_AS(parse_term("(a)^[w-2]", ab), ParseError);
  CHECK_THROWS_AS(parse_term("", ab), ParseError);
}

TEST_CASE("normalize flattens and strips empties") {
  TermPtr a = Term::lit('a');
  TermPtr b = Term::lit('b');
  TermPtr c = Term::lit('c');
  // hand-built unnormalized shapes
  Term raw{TermKind::Concat};
  raw.children = {Term::concat(a, b), c};
  CHECK(term_eq(Term::concat(Term::concat(a, b), c), parse_term("abc")));
  CHECK(term_eq(Term::concat(Term::empty(), a), a));
  CHECK(term_eq(Term::power(Term::concat(std::vector<TermPtr>{a, Term::empty(), b})),
                parse_term("(ab)^[w-1]")));
  CHECK(Term::power(Term::empty())->is_empty());
}

TEST_CASE("content") {
  CHECK(content(parse_term("a(ba)^[w-1]")) == ContentSet::from_string("ab"));
  CHECK(content(parse_term("1")).empty());
  CHECK(content(parse_term("abc")) == ContentSet::from_string("abc"));
}

TEST_CASE("render round-trip on random terms") {
  std::mt19937 rng(12345);
  ContentSet abc = ContentSet::from_string("abc");
  for (int i = 0; i < 1000; ++i) {
    TermPtr t = random_term(rng, 14, 3, abc);
    TermPtr back = parse_term(render(t), abc);
    CAPTURE(render(t));
    CHECK(term_eq(t, back));
    // normalize is idempotent and content-preserving
    CHECK(term_eq(normalize(t), t));
    CHECK(content(normalize(t)) == content(t));
    CHECK(content(Term::power(t)) == content(t));
  }
}

TEST_CASE("parameter letters") {
  TermPtr t = parse_term("a#b#1");
  CHECK(render(t) == "a#b#1");
  CHECK(content(t).contains(kHashLetter));
  CHECK(content(t).contains(numbered_hash_letter(1)));
}
