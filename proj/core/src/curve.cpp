#include "mtz/curve.hpp"

#include "mtz/errors.hpp"

namespace mtz {

LL CurveData::class_of_curve() const {
  validate();
  if (genus != 0) throw Error(ErrorKind::InvalidArgument, "exact curve class only at genus 0");
  return LL(1) + LL::L();
}

void CurveData::validate() const {
  if (genus < 0) throw Error(ErrorKind::InvalidArgument, "negative genus");
  if (kapranov_numerator.empty() || kapranov_numerator.front() != LL(1))
    throw Error(ErrorKind::InvalidArgument, "Kapranov numerator must have constant term 1");
  if (kapranov_numerator.size() > static_cast<size_t>(2 * genus + 1))
    throw Error(ErrorKind::InvalidArgument, "Kapranov numerator degree exceeds 2g");
  if (genus == 0 && pic0_class != LL(1))
    throw Error(ErrorKind::InvalidArgument, "genus 0 forces [Pic0] = 1");
}

}  // namespace mtz
