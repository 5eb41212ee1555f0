#pragma once

#include "mtz/lefschetz.hpp"

namespace mtz {

// Truncated Laurent series in L^-1: exponents below -precision are dropped.
class CompletionElement {
 public:
  explicit CompletionElement(long precision) : precision_(precision) {}
  CompletionElement(const LL& value, long precision);

  long precision() const { return precision_; }
  const LL& value() const { return value_; }

  CompletionElement& operator+=(const CompletionElement& o);
  CompletionElement& operator-=(const CompletionElement& o);
  CompletionElement& operator*=(const CompletionElement& o);
  friend CompletionElement operator+(CompletionElement a, const CompletionElement& b) { return a += b; }
  friend CompletionElement operator-(CompletionElement a, const CompletionElement& b) { return a -= b; }
  friend CompletionElement operator*(CompletionElement a, const CompletionElement& b) { return a *= b; }
  friend bool operator==(const CompletionElement&, const CompletionElement&) = default;

  // (1 - L^-k)^-1 expanded to this precision, scaled by nothing.
  static CompletionElement geometric_inverse(long k, long precision);

  VirtualDim dim() const { return virtual_dim(value_); }
  std::string to_string() const;

 private:
  void check(const CompletionElement& o) const;
  long precision_;
  LL value_;
};

}  // namespace mtz
