#pragma once

#include <array>
#include <vector>

#include "rindler/unruh.hpp"

namespace rindler {

// ---------------------------------------------------------------------------
// Entanglement measures of the physical (Region II traced out) state.
//
// Every function takes the initial inertial four-party state explicitly so
// the same machinery runs on the W-class state and on the GHZ comparison
// state. All functions are pure and safe to call concurrently.
// ---------------------------------------------------------------------------

// Negativity 2 * sum |lambda^-| over eigenvalues of the partial transpose
// below -1e-12; equals trace_norm - 1 for a unit-trace input. Transposes
// every slot the party owns in the register.
double negativity(const DensityMatrix& rho, Party transposed);

// One-vs-rest negativity of the four-party physical density.
double one_three_tangle(const StateVector& initial, const Scenario& scenario,
                        Party transposed);

// Pair negativity: reduce the physical density to {p, q}, transpose p.
double one_one_tangle(const StateVector& initial, const Scenario& scenario,
                      Party p, Party q);

// Entropy -sum lambda log2 lambda over eigenvalues above 1e-12, in bits.
double von_neumann_entropy(const DensityMatrix& rho);

// Entropy of the reduction of the physical density onto `parties`.
double subsystem_entropy(const StateVector& initial, const Scenario& scenario,
                         const std::vector<Party>& parties);

// Entropy of the full four-party physical density.
double total_entropy(const StateVector& initial, const Scenario& scenario);

// pi_k = N_{k(rest)}^2 - sum_{x != k} N_{kx}^2.
double residual_tangle(const StateVector& initial, const Scenario& scenario,
                       Party party);

struct TangleSet {
  std::array<double, kPartyCount> residual;  // indexed by Party
  double pi4;      // arithmetic mean of the four residual tangles
  double big_pi4;  // geometric mean with negative factors clamped to 0
  bool clamped;    // set when any factor needed clamping
};

TangleSet tangle_set(const StateVector& initial, const Scenario& scenario);

// Convenience initial states.
StateVector tetrapartite_w();
StateVector tetrapartite_ghz();

}  // namespace rindler
