#include "kdrh/ordinal.hpp"

namespace kdrh {

Ordinal Ordinal::single(std::uint32_t exp, std::uint64_t coeff) {
  Ordinal o;
  if (coeff) o.terms_.push_back({exp, coeff});
  return o;
}

std::uint64_t Ordinal::finite_value() const {
  if (terms_.empty()) return 0;
  if (terms_.front().exp != 0) throw OrdinalError("ordinal is not finite: " + str());
  return terms_.front().coeff;
}

int Ordinal::cmp(const Ordinal& a, const Ordinal& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.exp != y.exp) return x.exp < y.exp ? -1 : 1;
    if (x.coeff != y.coeff) return x.coeff < y.coeff ? -1 : 1;
  }
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
  return 0;
}

Ordinal operator+(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  Ordinal out;
  std::uint32_t lead = b.terms_.front().exp;
  // Terms of a below w^lead are absorbed.
  for (const auto& t : a.terms_) {
    if (t.exp > lead)
      out.terms_.push_back(t);
    else if (t.exp == lead)
      out.terms_.push_back({lead, t.coeff + b.terms_.front().coeff});
    else
      break;
  }
  if (out.terms_.empty() || out.terms_.back().exp != lead) out.terms_.push_back(b.terms_.front());
  out.terms_.insert(out.terms_.end(), b.terms_.begin() + 1, b.terms_.end());
  return out;
}

Ordinal operator*(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  Ordinal out;
  std::uint32_t lead = a.terms_.front().exp;
  for (const auto& t : b.terms_) {
    if (t.exp > 0) {
      if (lead + t.exp >= 32) throw OrdinalError("ordinal product exceeds w^w cap");
      out += Ordinal::single(lead + t.exp, t.coeff);
    } else {
      // a * n = w^lead*(c_lead*n) + (rest of a), for finite n >= 1.
      Ordinal part = Ordinal::single(lead, a.terms_.front().coeff * t.coeff);
      for (std::size_t i = 1; i < a.terms_.size(); ++i)
        part += Ordinal::single(a.terms_[i].exp, a.terms_[i].coeff);
      out += part;
    }
  }
  return out;
}

Ordinal Ordinal::left_diff(const Ordinal& base, const Ordinal& target) {
  if (base > target) throw OrdinalError("left_diff: base exceeds target");
  // Strip the longest common prefix of CNF terms, then peel one coefficient.
  std::size_t i = 0;
  while (i < base.terms_.size() && i < target.terms_.size() && base.terms_[i] == target.terms_[i]) ++i;
  Ordinal out;
  if (i == base.terms_.size()) {
    out.terms_.assign(target.terms_.begin() + i, target.terms_.end());
    return out;
  }
  const auto& bt = base.terms_[i];
  const auto& tt = target.terms_[i];
  if (bt.exp != tt.exp || bt.coeff > tt.coeff) {
    // base's remaining part is dominated: everything from target's i-th term on.
    out.terms_.assign(target.terms_.begin() + i, target.terms_.end());
    return out;
  }
  out.terms_.push_back({tt.exp, tt.coeff - bt.coeff});
  if (out.terms_.back().coeff == 0) out.terms_.pop_back();
  out.terms_.insert(out.terms_.end(), target.terms_.begin() + i + 1, target.terms_.end());
  return out;
}

std::string Ordinal::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) s += "+";
    first = false;
    if (t.exp == 0) {
      s += std::to_string(t.coeff);
    } else {
      s += "w";
      if (t.exp > 1) s += "^" + std::to_string(t.exp);
      if (t.coeff > 1) s += "*" + std::to_string(t.coeff);
    }
  }
  return s;
}

Ordinal Ordinal::parse(const std::string& text) {
  Ordinal out;
  std::size_t pos = 0;
  auto skip = [&] { while (pos < text.size() && text[pos] == ' ') ++pos; };
  auto number = [&]() -> std::uint64_t {
    std::uint64_t n = 0;
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') n = n * 10 + (text[pos++] - '0');
    if (pos == start) throw OrdinalError("expected number in ordinal: " + text);
    return n;
  };
  skip();
  if (pos < text.size() && text[pos] == '0' && pos + 1 == text.size()) return out;
  while (true) {
    skip();
    std::uint32_t exp = 0;
    std::uint64_t coeff = 1;
    if (pos < text.size() && text[pos] == 'w') {
      ++pos;
      exp = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        exp = static_cast<std::uint32_t>(number());
      }
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        coeff = number();
      }
    } else {
      coeff = number();
    }
    out += Ordinal::single(exp, coeff);
    skip();
    if (pos >= text.size()) break;
    if (text[pos] != '+') throw OrdinalError("malformed ordinal: " + text);
    ++pos;
  }
  return out;
}

}  // namespace kdrh
