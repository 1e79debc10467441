#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace kdrh {

// Letters live in a fixed 32-slot universe: 'a'..'z' occupy ids 0..25 and the
// reserved equation parameters '#', '#1'..'#5' occupy ids 26..31.  Parameters
// never appear in user alphabets; the reduction pipeline introduces them.
using Letter = std::uint8_t;
constexpr Letter kMaxLetters = 32;
constexpr Letter kHashLetter = 26;

Letter letter_from_char(char c);
Letter numbered_hash_letter(int k);  // k = 1..5 -> "#1".."#5"
std::string letter_name(Letter l);
bool is_parameter_letter(Letter l);

// A subset of the letter universe.
struct ContentSet {
  std::uint32_t bits = 0;

  constexpr ContentSet() = default;
  constexpr explicit ContentSet(std::uint32_t b) : bits(b) {}

  bool contains(Letter l) const { return (bits >> l) & 1u; }
  void add(Letter l) { bits |= (1u << l); }
  void remove(Letter l) { bits &= ~(1u << l); }
  bool empty() const { return bits == 0; }
  int size() const { return __builtin_popcount(bits); }
  bool subset_of(ContentSet o) const { return (bits & ~o.bits) == 0; }

  friend ContentSet operator|(ContentSet a, ContentSet b) { return ContentSet(a.bits | b.bits); }
  friend ContentSet operator&(ContentSet a, ContentSet b) { return ContentSet(a.bits & b.bits); }
  friend bool operator==(ContentSet a, ContentSet b) { return a.bits == b.bits; }
  friend bool operator!=(ContentSet a, ContentSet b) { return a.bits != b.bits; }

  std::vector<Letter> letters() const;
  std::string str() const;  // e.g. "{a,b}" ; "{}" for empty

  static ContentSet from_string(const std::string& s);  // "ab" -> {a,b}
};

enum class TermKind : std::uint8_t { Empty, Lit, Concat, Power };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable, structurally normalized kappa-term.  Normalization flattens
// nested concatenations and drops empty factors; it applies no power laws.
struct Term {
  TermKind kind;
  Letter letter = 0;               // Lit
  std::vector<TermPtr> children;   // Concat (>=2, each Lit/Power) or Power (1)
  ContentSet content;
  std::size_t node_count = 1;
  std::size_t hash = 0;

  static const TermPtr& empty();
  static TermPtr lit(Letter l);
  static TermPtr lit(char c) { return lit(letter_from_char(c)); }
  static TermPtr power(const TermPtr& base);                 // base^(w-1)
  static TermPtr concat(const std::vector<TermPtr>& parts);  // normalizing
  static TermPtr concat(const TermPtr& a, const TermPtr& b);

  bool is_empty() const { return kind == TermKind::Empty; }
  const TermPtr& power_base() const { return children.front(); }

  // Spine of a normalized term: Empty -> [], Lit/Power -> [self],
  // Concat -> children.  Valid while the shared_ptr holding *this lives.
  static std::vector<TermPtr> atoms(const TermPtr& t);
};

bool term_eq(const TermPtr& a, const TermPtr& b);

struct TermHash {
  std::size_t operator()(const TermPtr& t) const { return t ? t->hash : 0; }
};
struct TermEq {
  bool operator()(const TermPtr& a, const TermPtr& b) const { return term_eq(a, b); }
};

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Grammar: term := factor+ ; factor := letter | "1" | "(" term ")" "^[w-1]"
//                | "(" term ")" "^[w]" ; letter := [a-z] | "#" [0-9]*.
// "t^[w]" is surface sugar for t * t^[w-1].  Whitespace between factors is
// ignored.  Letters outside `alphabet` are rejected.
TermPtr parse_term(const std::string& text, ContentSet alphabet);
TermPtr parse_term(const std::string& text);  // full universe

std::string render(const TermPtr& t);

// Flatten/strip-empty pass over an arbitrarily shaped term.  Terms built via
// the factory functions are already normalized; this re-normalizes terms
// assembled by hand in tests.
TermPtr normalize(const TermPtr& t);

ContentSet content(const TermPtr& t);
Letter first_letter(const TermPtr& t);  // precondition: t non-empty

}  // namespace kdrh
