#pragma once

#include <array>

#include "rindler/states.hpp"

namespace rindler {

// Which of the four observers are uniformly accelerated, all sharing one
// acceleration parameter r (radians, 0 <= r <= pi/4; r = pi/4 is the
// infinite-acceleration limit).
class Scenario {
 public:
  Scenario(std::array<bool, kPartyCount> accelerated, double r);

  // Convenience: parties listed by letter, e.g. "CD" or "".
  static Scenario from_letters(const std::string& letters, double r);

  bool is_accelerated(Party p) const {
    return accelerated_[static_cast<size_t>(p)];
  }
  int accelerated_count() const;
  double r() const { return r_; }

  // Register of the Rindler-expanded pure state (Region I + II pairs for
  // accelerated parties, Minkowski slots otherwise).
  ModeRegister expanded_register() const;
  // Register of the physical state: one slot per party, Region II removed.
  ModeRegister physical_register() const;

  // The slot a party occupies in the physical register (Minkowski or Region I).
  ModeSlot physical_slot(Party p) const;

  // Sorted letters of the accelerated set; "none" when empty.
  std::string label() const;

 private:
  std::array<bool, kPartyCount> accelerated_;
  double r_;
};

// Mode frequency, proper acceleration and light speed in any consistent
// unit system; only the combination omega * c / a enters.
struct PhysicalAcceleration {
  double a;      // proper acceleration, >= 0
  double omega;  // mode frequency, > 0
  double c;      // speed of light, > 0
};

// Acceleration parameter r = arccos(1/sqrt(1 + exp(-2*pi*omega*c/a))),
// ranging over [0, pi/4); a = 0 maps to r = 0.
double acceleration_parameter(const PhysicalAcceleration& p);

// Rindler expansion of a four-party inertial state: each accelerated party's
// Minkowski slot becomes a (Region I, Region II) pair via
// |0> -> cos(r)|00> + sin(r)|11>,  |1> -> |10>.
// Inertial parties are untouched. The substitution is an isometry, so the
// output stays normalized.
StateVector unruh_expand(const StateVector& psi, const Scenario& scenario);

// Density matrix of the state accessible to the observers: Region II slots
// of the expanded pure state are traced out, leaving one slot per party.
DensityMatrix physical_density(const StateVector& psi_expanded);

}  // namespace rindler
