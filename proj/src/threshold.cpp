#include "rindler/threshold.hpp"

#include <cmath>

namespace rindler {

namespace {
constexpr double kZeroBand = 1e-12;  // pipeline values at or below this count as zero
constexpr int kMaxIterations = 200;
}  // namespace

ThresholdResult find_threshold(const std::function<double(double)>& f,
                               double r_lo, double r_hi, ThresholdMode mode,
                               std::string measure, std::string subsystem,
                               double tol) {
  if (!(r_lo < r_hi)) throw InvalidConfig("find_threshold: bracket must satisfy r_lo < r_hi");

  ThresholdResult out;
  out.measure = std::move(measure);
  out.subsystem = std::move(subsystem);
  out.r_lo = r_lo;
  out.r_hi = r_hi;

  double lo = r_lo, hi = r_hi;
  const double f_lo = f(lo);
  const double f_hi = f(hi);

  if (mode == ThresholdMode::PositiveToZero) {
    if (!(f_lo > kZeroBand) || !(f_hi <= kZeroBand)) {
      throw NoSignChange("find_threshold: no positive-to-zero transition across the bracket");
    }
    while (hi - lo > tol && out.iterations < kMaxIterations) {
      const double mid = 0.5 * (lo + hi);
      (f(mid) > kZeroBand ? lo : hi) = mid;
      ++out.iterations;
    }
  } else {
    if (f_lo == 0.0) { out.root = lo; out.residual = 0.0; return out; }
    if (f_hi == 0.0) { out.root = hi; out.residual = 0.0; return out; }
    if ((f_lo > 0.0) == (f_hi > 0.0)) {
      throw NoSignChange("find_threshold: bracket does not straddle a sign change");
    }
    const bool lo_positive = f_lo > 0.0;
    while (hi - lo > tol && out.iterations < kMaxIterations) {
      const double mid = 0.5 * (lo + hi);
      const double fm = f(mid);
      if (fm == 0.0) { lo = hi = mid; break; }
      ((fm > 0.0) == lo_positive ? lo : hi) = mid;
      ++out.iterations;
    }
  }

  out.root = 0.5 * (lo + hi);
  out.residual = f(out.root);
  return out;
}

}  // namespace rindler
