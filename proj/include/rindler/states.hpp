#pragma once

#include "rindler/tensor.hpp"
#include "rindler/types.hpp"

namespace rindler {

// Normalized complex amplitude vector over a mode register, slot 0 = MSB.
class StateVector {
 public:
  StateVector(ModeRegister reg, Vector amplitudes);

  const ModeRegister& reg() const { return reg_; }
  const Vector& amplitudes() const { return amp_; }
  Eigen::Index dimension() const { return amp_.size(); }
  Complex amplitude(Eigen::Index basis_index) const { return amp_[basis_index]; }

  double norm() const { return amp_.norm(); }

 private:
  ModeRegister reg_;
  Vector amp_;
};

// Symmetric single-excitation state over n inertial parties, amplitude
// 1/sqrt(n) on each weight-1 basis ket. Supports the tetrapartite register,
// so 2 <= n <= 4.
StateVector w_state(int n);

// (|0...0> + |1...1>)/sqrt(2) over n inertial parties, 2 <= n <= 4.
StateVector ghz_state(int n);

// |psi><psi| as a density matrix. Throws UnnormalizedState when the norm
// deviates from 1 by more than 1e-9.
DensityMatrix pure_density(const StateVector& psi);

}  // namespace rindler
