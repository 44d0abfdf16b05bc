#pragma once

#include <string>
#include <vector>

namespace rindler {

// ---------------------------------------------------------------------------
// Published analytic expressions for pair negativities and subsystem spectra,
// kept for cross-validation against the numeric pipeline. `Verbatim` evaluates
// them exactly as printed; `Corrected` applies the documented fixes for the
// entries whose printed form violates unit trace (see verify.hpp).
// ---------------------------------------------------------------------------

enum class FormFidelity { Verbatim, Corrected };

// Pair negativity closed forms by the number of accelerated pair members
// (0, 1 or 2). Evaluated verbatim; the two-accelerated form continues
// analytically below zero past its sudden-death point, where the pipeline
// value clamps at 0.
double pair_negativity_closed_form(double r, int accelerated_in_pair);

// Acceleration parameter where the two-accelerated pair negativity reaches
// zero: sin^2(r) = (sqrt(2)-1)/2.
double pair_sudden_death_r();

enum class SubsystemKind {
  PairOneAccelerated,
  PairTwoAccelerated,
  TripleOneAccelerated,
  TripleTwoAccelerated,
  TripleThreeAccelerated,
};

std::string subsystem_kind_name(SubsystemKind kind);

// Published eigenvalue lists of reduced W-class densities. List lengths are
// 4, 4, 4, 7 and 8; triples list only nonzero eigenvalues (and the
// two-accelerated triple list omits one even so, see verify notes).
std::vector<double> subsystem_spectrum_closed_form(double r, SubsystemKind kind,
                                                   FormFidelity fidelity);

}  // namespace rindler
