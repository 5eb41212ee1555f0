#pragma once

#include <vector>

#include "mtz/lefschetz.hpp"

namespace mtz {

struct CurveData {
  int genus = 0;
  // Coefficients of the Kapranov numerator in T, constant term first.
  std::vector<LL> kapranov_numerator{LL(1)};
  LL pic0_class = LL(1);

  static CurveData projective_line() { return CurveData{}; }
  // Class of the curve: 1 + L at genus 0.
  LL class_of_curve() const;
  void validate() const;
};

}  // namespace mtz
