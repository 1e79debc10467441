#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kdrh {

struct OrdinalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ordinal below w^w in Cantor normal form: sum of w^e * c terms with natural
// exponents, positive coefficients, exponents strictly decreasing.  Zero is
// the empty sum.  Comparison is lexicographic on the term lists.
class Ordinal {
 public:
  struct CnfTerm {
    std::uint32_t exp;
    std::uint64_t coeff;
    friend bool operator==(const CnfTerm&, const CnfTerm&) = default;
  };

  Ordinal() = default;
  Ordinal(std::uint64_t n) {  // NOLINT: implicit by design, finite ordinals
    if (n) terms_.push_back({0, n});
  }
  static Ordinal omega() { return single(1, 1); }
  static Ordinal single(std::uint32_t exp, std::uint64_t coeff);

  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const { return terms_.empty() || terms_.front().exp == 0; }
  bool is_limit() const { return !terms_.empty() && terms_.back().exp > 0; }
  std::uint64_t finite_value() const;  // throws unless is_finite()
  std::uint32_t degree() const { return terms_.empty() ? 0 : terms_.front().exp; }
  const std::vector<CnfTerm>& terms() const { return terms_; }

  friend Ordinal operator+(const Ordinal& a, const Ordinal& b);
  friend Ordinal operator*(const Ordinal& a, const Ordinal& b);
  Ordinal& operator+=(const Ordinal& o) { return *this = *this + o; }

  friend bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Ordinal& a, const Ordinal& b) { return !(a == b); }
  friend bool operator<(const Ordinal& a, const Ordinal& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Ordinal& a, const Ordinal& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Ordinal& a, const Ordinal& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Ordinal& a, const Ordinal& b) { return cmp(a, b) >= 0; }
  static int cmp(const Ordinal& a, const Ordinal& b);

  // Unique x with base + x == target; throws OrdinalError if base > target.
  static Ordinal left_diff(const Ordinal& base, const Ordinal& target);

  // Text form: "w^2*3+w+4", "w*2", "0".  Coefficient 1 is omitted, exponent 1
  // prints as plain "w".  The parser also accepts explicit "*1" and "^1".
  std::string str() const;
  static Ordinal parse(const std::string& text);

 private:
  std::vector<CnfTerm> terms_;
};

}  // namespace kdrh
