#include "rindler/closed_forms.hpp"

#include <cmath>

#include "rindler/types.hpp"

namespace rindler {

double pair_negativity_closed_form(double r, int accelerated_in_pair) {
  const double c2 = std::cos(2.0 * r);
  const double c4 = std::cos(4.0 * r);
  switch (accelerated_in_pair) {
    case 0:
      return 0.5 * (std::sqrt(2.0) - 1.0);
    case 1:
      return (-2.0 * c2 - 6.0 +
              std::sqrt(2.0) * std::sqrt(28.0 * c2 + 9.0 * c4 + 27.0)) / 16.0;
    case 2:
      return (2.0 * c2 - c4 - 5.0 +
              2.0 * std::sqrt(5.0 * c4 - 4.0 * c2 + 7.0)) / 8.0;
    default:
      throw Error("pair_negativity_closed_form: accelerated count must be 0, 1 or 2");
  }
}

double pair_sudden_death_r() {
  return std::asin(std::sqrt(0.5 * (std::sqrt(2.0) - 1.0)));
}

std::string subsystem_kind_name(SubsystemKind kind) {
  switch (kind) {
    case SubsystemKind::PairOneAccelerated: return "pair spectrum, one accelerated";
    case SubsystemKind::PairTwoAccelerated: return "pair spectrum, two accelerated";
    case SubsystemKind::TripleOneAccelerated: return "triple spectrum, one accelerated";
    case SubsystemKind::TripleTwoAccelerated: return "triple spectrum, two accelerated";
    case SubsystemKind::TripleThreeAccelerated: return "triple spectrum, three accelerated";
  }
  throw Error("unknown subsystem kind");
}

std::vector<double> subsystem_spectrum_closed_form(double r, SubsystemKind kind,
                                                   FormFidelity fidelity) {
  const bool corrected = fidelity == FormFidelity::Corrected;
  const double c2 = std::cos(2.0 * r);
  const double c4 = std::cos(4.0 * r);
  const double c6 = std::cos(6.0 * r);
  const double cr = std::cos(r);
  const double sr = std::sin(r);

  switch (kind) {
    case SubsystemKind::PairOneAccelerated: {
      // Printed second eigenvalue sin^2(r)/2 breaks unit trace; the reduced
      // density has sin^2(r)/4 there.
      const double lam2 = corrected ? sr * sr / 4.0 : sr * sr / 2.0;
      const double root = std::sqrt(2.0) * std::sqrt(-20.0 * c2 + 9.0 * c4 + 43.0);
      return {cr * cr / 2.0, lam2, (10.0 - 2.0 * c2 - root) / 32.0,
              (10.0 - 2.0 * c2 + root) / 32.0};
    }
    case SubsystemKind::PairTwoAccelerated: {
      return {0.5 * std::pow(cr, 4), (1.0 - c4) / 16.0,
              (4.0 * c2 - c4 + 5.0) / 16.0,
              -0.25 * sr * sr * (c2 - 3.0)};
    }
    case SubsystemKind::TripleOneAccelerated: {
      const double root = std::sqrt(2.0) * std::sqrt(20.0 * c2 + 9.0 * c4 + 43.0);
      return {cr * cr / 4.0, (1.0 - c2) / 4.0,
              (2.0 * c2 - root + 10.0) / 32.0,
              (2.0 * c2 + root + 10.0) / 32.0};
    }
    case SubsystemKind::TripleTwoAccelerated: {
      const double c_pow4 = std::pow(cr, 4);
      const double s_pow4 = std::pow(sr, 4);
      const double root_c = std::sqrt(2.0) * std::sqrt(c4 * c_pow4 + 17.0 * c_pow4);
      const double root_s = std::sqrt(2.0) * std::sqrt(17.0 * s_pow4 + s_pow4 * c4);
      // Printed lambda^(6,7) lack the 1/16 prefactor of their partners.
      const double scale67 = corrected ? 1.0 / 16.0 : 1.0;
      return {c_pow4 / 4.0,
              (1.0 - c4) / 32.0,
              (1.0 - c4) / 32.0,
              (3.0 * c2 + 3.0 - root_c) / 16.0,
              (3.0 * c2 + 3.0 + root_c) / 16.0,
              scale67 * (3.0 - 3.0 * c2 - root_s),
              scale67 * (3.0 - 3.0 * c2 + root_s)};
    }
    case SubsystemKind::TripleThreeAccelerated: {
      return {0.25 * std::pow(cr, 6),
              (c2 - 2.0 * c4 - c6 + 2.0) / 128.0,
              (c2 - 2.0 * c4 - c6 + 2.0) / 128.0,
              (49.0 * c2 + 10.0 * c4 - c6 + 38.0) / 128.0,
              (-c2 - 18.0 * c4 + c6 + 18.0) / 128.0,
              (-c2 - 6.0 * c4 + c6 + 6.0) / 128.0,
              (-c2 - 6.0 * c4 + c6 + 6.0) / 128.0,
              -0.125 * std::pow(sr, 4) * (c2 - 7.0)};
    }
  }
  throw Error("unknown subsystem kind");
}

}  // namespace rindler
