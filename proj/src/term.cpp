#include "kdrh/term.hpp"

#include <functional>

namespace kdrh {

Letter letter_from_char(char c) {
  if (c >= 'a' && c <= 'z') return static_cast<Letter>(c - 'a');
  if (c == '#') return kHashLetter;
  throw std::invalid_argument(std::string("not a letter: ") + c);
}

Letter numbered_hash_letter(int k) {
  if (k < 1 || k > 5) throw std::invalid_argument("numbered parameter out of range");
  return static_cast<Letter>(kHashLetter + k);
}

std::string letter_name(Letter l) {
  if (l < 26) return std::string(1, static_cast<char>('a' + l));
  if (l == kHashLetter) return "#";
  return "#" + std::to_string(l - kHashLetter);
}

bool is_parameter_letter(Letter l) { return l >= kHashLetter; }

std::vector<Letter> ContentSet::letters() const {
  std::vector<Letter> out;
  for (Letter l = 0; l < kMaxLetters; ++l)
    if (contains(l)) out.push_back(l);
  return out;
}

std::string ContentSet::str() const {
  std::string s = "{";
  bool first = true;
  for (Letter l : letters()) {
    if (!first) s += ",";
    s += letter_name(l);
    first = false;
  }
  s += "}";
  return s;
}

ContentSet ContentSet::from_string(const std::string& s) {
  ContentSet c;
  for (char ch : s) {
    if (ch == ' ' || ch == ',') continue;
    c.add(letter_from_char(ch));
  }
  return c;
}

namespace {

std::size_t combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

TermPtr make_node(Term&& node) {
  switch (node.kind) {
    case TermKind::Empty:
      node.hash = 0x45;
      node.node_count = 1;
      break;
    case TermKind::Lit:
      node.hash = combine(0x4c, node.letter);
      node.content.add(node.letter);
      node.node_count = 1;
      break;
    case TermKind::Power:
      node.hash = combine(0x50, node.children[0]->hash);
      node.content = node.children[0]->content;
      node.node_count = 1 + node.children[0]->node_count;
      break;
    case TermKind::Concat: {
      std::size_t h = 0x43;
      std::size_t n = 1;
      for (const auto& c : node.children) {
        h = combine(h, c->hash);
        node.content = node.content | c->content;
        n += c->node_count;
      }
      node.hash = h;
      node.node_count = n;
      break;
    }
  }
  return std::make_shared<const Term>(std::move(node));
}

}  // namespace

const TermPtr& Term::empty() {
  static const TermPtr e = make_node(Term{TermKind::Empty});
  return e;
}

TermPtr Term::lit(Letter l) {
  if (l >= kMaxLetters) throw std::invalid_argument("letter id out of range");
  Term node{TermKind::Lit};
  node.letter = l;
  return make_node(std::move(node));
}

TermPtr Term::power(const TermPtr& base) {
  if (!base || base->is_empty()) return empty();
  Term node{TermKind::Power};
  node.children = {base};
  return make_node(std::move(node));
}

TermPtr Term::concat(const std::vector<TermPtr>& parts) {
  std::vector<TermPtr> flat;
  for (const auto& p : parts) {
    if (!p || p->is_empty()) continue;
    if (p->kind == TermKind::Concat)
      flat.insert(flat.end(), p->children.begin(), p->children.end());
    else
      flat.push_back(p);
  }
  if (flat.empty()) return empty();
  if (flat.size() == 1) return flat[0];
  Term node{TermKind::Concat};
  node.children = std::move(flat);
  return make_node(std::move(node));
}

TermPtr Term::concat(const TermPtr& a, const TermPtr& b) { return concat(std::vector<TermPtr>{a, b}); }

std::vector<TermPtr> Term::atoms(const TermPtr& t) {
  if (!t || t->is_empty()) return {};
  if (t->kind == TermKind::Concat) return t->children;
  return {t};
}

bool term_eq(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->hash != b->hash) return false;
  switch (a->kind) {
    case TermKind::Empty:
      return true;
    case TermKind::Lit:
      return a->letter == b->letter;
    case TermKind::Power:
      return term_eq(a->children[0], b->children[0]);
    case TermKind::Concat: {
      if (a->children.size() != b->children.size()) return false;
      for (std::size_t i = 0; i < a->children.size(); ++i)
        if (!term_eq(a->children[i], b->children[i])) return false;
      return true;
    }
  }
  return false;
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;
  ContentSet alphabet;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() { return text[pos]; }

  // Parses "^[w-1]" or "^[w]" after a parenthesized group.  Returns 1 for
  // the (w-1)-power, 2 for the w-power, 0 if no exponent follows.
  int parse_exponent() {
    skip_ws();
    if (pos >= text.size() || text[pos] != '^') return 0;
    std::size_t start = pos;
    ++pos;
    if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '[' after '^'", pos);
    ++pos;
    if (pos >= text.size() || text[pos] != 'w') throw ParseError("expected 'w' in exponent", pos);
    ++pos;
    if (pos < text.size() && text[pos] == ']') {
      ++pos;
      return 2;
    }
    if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '1') {
      pos += 2;
      if (pos >= text.size() || text[pos] != ']') throw ParseError("expected ']'", pos);
      ++pos;
      return 1;
    }
    throw ParseError("malformed exponent", start);
  }

  TermPtr parse_factor() {
    skip_ws();
    char c = text[pos];
    if (c == '1') {
      ++pos;
      return Term::empty();
    }
    if (c == '(') {
      std::size_t open = pos;
      ++pos;
      TermPtr inner = parse_sequence();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') throw ParseError("unbalanced '('", open);
      ++pos;
      int exp = parse_exponent();
      if (exp == 1) return Term::power(inner);
      if (exp == 2) return Term::concat(inner, Term::power(inner));
      return inner;
    }
    if (c >= 'a' && c <= 'z') {
      Letter l = letter_from_char(c);
      if (!alphabet.contains(l)) throw ParseError(std::string("letter '") + c + "' outside alphabet", pos);
      ++pos;
      return Term::lit(l);
    }
    if (c == '#') {
      std::size_t start = pos;
      ++pos;
      int k = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        k = k * 10 + (text[pos] - '0');
        ++pos;
      }
      Letter l = (k == 0) ? kHashLetter : numbered_hash_letter(k);
      if (!alphabet.contains(l)) throw ParseError("parameter letter outside alphabet", start);
      return Term::lit(l);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }

  TermPtr parse_sequence() {
    std::vector<TermPtr> factors;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      factors.push_back(parse_factor());
      skip_ws();
    }
    if (factors.empty()) throw ParseError("empty term", pos);
    return Term::concat(factors);
  }
};

}  // namespace

TermPtr parse_term(const std::string& text, ContentSet alphabet) {
  Parser p{text, 0, alphabet};
  if (p.at_end()) throw ParseError("empty input", 0);
  TermPtr t = p.parse_sequence();
  if (!p.at_end()) throw ParseError("trailing input", p.pos);
  return t;
}

TermPtr parse_term(const std::string& text) {
  return parse_term(text, ContentSet(0xffffffffu));
}

namespace {

void render_into(const TermPtr& t, std::string& out) {
  switch (t->kind) {
    case TermKind::Empty:
      out += "1";
      break;
    case TermKind::Lit:
      out += letter_name(t->letter);
      break;
    case TermKind::Power:
      out += "(";
      render_into(t->power_base(), out);
      out += ")^[w-1]";
      break;
    case TermKind::Concat:
      for (const auto& c : t->children) render_into(c, out);
      break;
  }
}

}  // namespace

std::string render(const TermPtr& t) {
  if (!t || t->is_empty()) return "1";
  std::string out;
  render_into(t, out);
  return out;
}

TermPtr normalize(const TermPtr& t) {
  if (!t || t->is_empty()) return Term::empty();
  switch (t->kind) {
    case TermKind::Empty:
      return Term::empty();
    case TermKind::Lit:
      return t;
    case TermKind::Power:
      return Term::power(normalize(t->children[0]));
    case TermKind::Concat: {
      std::vector<TermPtr> parts;
      parts.reserve(t->children.size());
      for (const auto& c : t->children) parts.push_back(normalize(c));
      return Term::concat(parts);
    }
  }
  return Term::empty();
}

ContentSet content(const TermPtr& t) { return t ? t->content : ContentSet(); }

Letter first_letter(const TermPtr& t) {
  if (!t || t->is_empty()) throw std::logic_error("first_letter of empty term");
  const Term* cur = t.get();
  while (true) {
    switch (cur->kind) {
      case TermKind::Lit:
        return cur->letter;
      case TermKind::Power:
      case TermKind::Concat:
        cur = cur->children.front().get();
        break;
      default:
        throw std::logic_error("malformed term");
    }
  }
}

}  // namespace kdrh
