#include "rindler/states.hpp"

#include <cmath>

namespace rindler {

StateVector::StateVector(ModeRegister reg, Vector amplitudes)
    : reg_(std::move(reg)), amp_(std::move(amplitudes)) {
  if (amp_.size() != reg_.dimension()) {
    throw Error("state vector length does not match its register");
  }
  if (std::abs(amp_.squaredNorm() - 1.0) > 1e-12) {
    throw UnnormalizedState("state vector norm deviates from 1");
  }
}

StateVector w_state(int n) {
  if (n < 2) throw PartyCountTooSmall("w_state: need at least 2 parties");
  if (n > kPartyCount) throw Error("w_state: register supports at most 4 parties");
  ModeRegister reg = ModeRegister::minkowski(n);
  Vector amp = Vector::Zero(reg.dimension());
  const double coeff = 1.0 / std::sqrt(static_cast<double>(n));
  for (int i = 0; i < n; ++i) {
    amp[Eigen::Index{1} << (n - 1 - i)] = coeff;  // single excitation on slot i
  }
  return StateVector(std::move(reg), std::move(amp));
}

StateVector ghz_state(int n) {
  if (n < 2) throw PartyCountTooSmall("ghz_state: need at least 2 parties");
  if (n > kPartyCount) throw Error("ghz_state: register supports at most 4 parties");
  ModeRegister reg = ModeRegister::minkowski(n);
  Vector amp = Vector::Zero(reg.dimension());
  const double coeff = 1.0 / std::sqrt(2.0);
  amp[0] = coeff;
  amp[reg.dimension() - 1] = coeff;
  return StateVector(std::move(reg), std::move(amp));
}

DensityMatrix pure_density(const StateVector& psi) {
  if (std::abs(psi.norm() - 1.0) > 1e-9) {
    throw UnnormalizedState("pure_density: state norm deviates from 1");
  }
  Matrix rho = psi.amplitudes() * psi.amplitudes().adjoint();
  return DensityMatrix(psi.reg(), std::move(rho));
}

}  // namespace rindler
