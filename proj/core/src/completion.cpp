#include "mtz/completion.hpp"

#include "mtz/errors.hpp"

namespace mtz {

CompletionElement::CompletionElement(const LL& value, long precision)
    : precision_(precision), value_(value.truncated_below(precision)) {}

void CompletionElement::check(const CompletionElement& o) const {
  if (precision_ != o.precision_)
    throw Error(ErrorKind::MixedPrecision, "precision " + std::to_string(precision_) + " vs " +
                                               std::to_string(o.precision_));
}

CompletionElement& CompletionElement::operator+=(const CompletionElement& o) {
  check(o);
  value_ += o.value_;
  return *this;
}

CompletionElement& CompletionElement::operator-=(const CompletionElement& o) {
  check(o);
  value_ -= o.value_;
  return *this;
}

// Exact down to -P only when both factors have dim <= 0; callers with a positive
// prefactor work at a deeper precision and truncate afterwards.
CompletionElement& CompletionElement::operator*=(const CompletionElement& o) {
  check(o);
  value_ = (value_ * o.value_).truncated_below(precision_);
  return *this;
}

CompletionElement CompletionElement::geometric_inverse(long k, long precision) {
  if (k <= 0) throw Error(ErrorKind::InvalidArgument, "geometric_inverse needs k > 0");
  LL v;
  for (long e = 0; e <= precision; e += k) v.add_term(-e, 1);
  return CompletionElement(v, precision);
}

std::string CompletionElement::to_string() const {
  return value_.to_string() + " + O(L^" + std::to_string(-precision_ - 1) + ")";
}

}  // namespace mtz
