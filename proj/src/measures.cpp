#include "rindler/measures.hpp"

#include <algorithm>
#include <cmath>

#include "rindler/tensor.hpp"

namespace rindler {

double negativity(const DensityMatrix& rho, Party transposed) {
  const std::vector<int> slots = rho.reg().slots_of(transposed);
  if (slots.empty()) {
    throw PartyNotInRegister(std::string("negativity: party ") +
                             party_letter(transposed) + " not in register");
  }
  const Matrix pt = partial_transpose(rho, slots);
  const RealVector eigs = hermitian_eigenvalues(pt);
  double total = 0.0;
  for (Eigen::Index i = 0; i < eigs.size(); ++i) {
    if (eigs[i] < kNegativityFloor) total += -eigs[i];
  }
  return 2.0 * total;
}

namespace {

DensityMatrix physical_state(const StateVector& initial, const Scenario& scenario) {
  return physical_density(unruh_expand(initial, scenario));
}

std::vector<int> party_slots(const ModeRegister& reg, const std::vector<Party>& parties) {
  std::vector<int> keep;
  for (Party p : parties) {
    for (int s : reg.slots_of(p)) keep.push_back(s);
  }
  std::sort(keep.begin(), keep.end());
  return keep;
}

}  // namespace

double one_three_tangle(const StateVector& initial, const Scenario& scenario,
                        Party transposed) {
  return negativity(physical_state(initial, scenario), transposed);
}

double one_one_tangle(const StateVector& initial, const Scenario& scenario,
                      Party p, Party q) {
  if (p == q) throw IdenticalParties("one_one_tangle: pair members must differ");
  const DensityMatrix rho = physical_state(initial, scenario);
  const DensityMatrix pair = partial_trace(rho, party_slots(rho.reg(), {p, q}));
  return negativity(pair, p);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const RealVector eigs = hermitian_eigenvalues(rho.matrix());
  double s = 0.0;
  for (Eigen::Index i = 0; i < eigs.size(); ++i) {
    if (eigs[i] > kEntropyFloor) s -= eigs[i] * std::log2(eigs[i]);
  }
  return s;
}

double subsystem_entropy(const StateVector& initial, const Scenario& scenario,
                         const std::vector<Party>& parties) {
  const DensityMatrix rho = physical_state(initial, scenario);
  return von_neumann_entropy(partial_trace(rho, party_slots(rho.reg(), parties)));
}

double total_entropy(const StateVector& initial, const Scenario& scenario) {
  return von_neumann_entropy(physical_state(initial, scenario));
}

double residual_tangle(const StateVector& initial, const Scenario& scenario,
                       Party party) {
  const DensityMatrix rho = physical_state(initial, scenario);
  const double one_three = negativity(rho, party);
  double pair_sum = 0.0;
  for (int i = 0; i < kPartyCount; ++i) {
    const Party other = static_cast<Party>(i);
    if (other == party) continue;
    const DensityMatrix pair = partial_trace(rho, party_slots(rho.reg(), {party, other}));
    const double n = negativity(pair, party);
    pair_sum += n * n;
  }
  return one_three * one_three - pair_sum;
}

TangleSet tangle_set(const StateVector& initial, const Scenario& scenario) {
  TangleSet out{};
  double sum = 0.0;
  double product = 1.0;
  out.clamped = false;
  for (int i = 0; i < kPartyCount; ++i) {
    const double pi = residual_tangle(initial, scenario, static_cast<Party>(i));
    out.residual[static_cast<size_t>(i)] = pi;
    sum += pi;
    if (pi < 0.0) out.clamped = true;
    product *= std::max(pi, 0.0);
  }
  out.pi4 = sum / 4.0;
  out.big_pi4 = std::pow(product, 0.25);
  return out;
}

StateVector tetrapartite_w() { return w_state(kPartyCount); }

StateVector tetrapartite_ghz() { return ghz_state(kPartyCount); }

}  // namespace rindler
