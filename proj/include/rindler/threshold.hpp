#pragma once

#include <functional>
#include <string>

#include "rindler/types.hpp"

namespace rindler {

enum class ThresholdMode {
  // f >= 0 everywhere, strictly positive at r_lo and zero (<= 1e-12) at r_hi;
  // locates the edge of the positive region. Used on pipeline negativities,
  // which clamp at zero past a sudden-death point.
  PositiveToZero,
  // Classic bisection on a sign change, for analytically continued closed forms.
  SignChange,
};

struct ThresholdResult {
  std::string measure;
  std::string subsystem;
  double r_lo = 0.0;
  double r_hi = 0.0;
  double root = 0.0;
  int iterations = 0;
  double residual = 0.0;  // measure value at the root
};

// Bisect f over [r_lo, r_hi] until the bracket width drops below `tol`.
// Throws NoSignChange when the bracket does not straddle a transition.
ThresholdResult find_threshold(const std::function<double(double)>& f,
                               double r_lo, double r_hi, ThresholdMode mode,
                               std::string measure = {}, std::string subsystem = {},
                               double tol = 1e-8);

}  // namespace rindler
