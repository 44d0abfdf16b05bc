#include "rindler/unruh.hpp"

#include <algorithm>
#include <cmath>

namespace rindler {

Scenario::Scenario(std::array<bool, kPartyCount> accelerated, double r)
    : accelerated_(accelerated), r_(r) {
  if (!(r >= 0.0 && r <= kMaxAcceleration)) {
    throw InvalidScenario("acceleration parameter r must lie in [0, pi/4]");
  }
}

Scenario Scenario::from_letters(const std::string& letters, double r) {
  std::array<bool, kPartyCount> acc{};
  for (char c : letters) {
    if (c == ',' || c == ' ') continue;
    if (c == 'n') return Scenario(acc, r);  // "none"
    acc[static_cast<size_t>(party_from_letter(c))] = true;
  }
  return Scenario(acc, r);
}

int Scenario::accelerated_count() const {
  return static_cast<int>(std::count(accelerated_.begin(), accelerated_.end(), true));
}

ModeRegister Scenario::expanded_register() const {
  std::vector<ModeSlot> slots;
  for (int i = 0; i < kPartyCount; ++i) {
    const Party p = static_cast<Party>(i);
    if (is_accelerated(p)) {
      slots.push_back({p, Region::RindlerI});
      slots.push_back({p, Region::RindlerII});
    } else {
      slots.push_back({p, Region::Minkowski});
    }
  }
  return ModeRegister(std::move(slots));
}

ModeRegister Scenario::physical_register() const {
  std::vector<ModeSlot> slots;
  for (int i = 0; i < kPartyCount; ++i) {
    slots.push_back(physical_slot(static_cast<Party>(i)));
  }
  return ModeRegister(std::move(slots));
}

ModeSlot Scenario::physical_slot(Party p) const {
  return {p, is_accelerated(p) ? Region::RindlerI : Region::Minkowski};
}

std::string Scenario::label() const {
  std::string out;
  for (int i = 0; i < kPartyCount; ++i) {
    if (accelerated_[static_cast<size_t>(i)]) out += party_letter(static_cast<Party>(i));
  }
  return out.empty() ? "none" : out;
}

double acceleration_parameter(const PhysicalAcceleration& p) {
  if (p.a < 0.0 || p.omega <= 0.0 || p.c <= 0.0) {
    throw Error("acceleration_parameter: a >= 0, omega > 0, c > 0 required");
  }
  if (p.a == 0.0) return 0.0;  // exponent -> -inf, cos r -> 1
  const double expo = std::exp(-2.0 * M_PI * p.omega * p.c / p.a);
  return std::acos(1.0 / std::sqrt(1.0 + expo));
}

StateVector unruh_expand(const StateVector& psi, const Scenario& scenario) {
  if (psi.reg() != ModeRegister::minkowski(kPartyCount)) {
    throw InvalidScenario("unruh_expand: input must cover Minkowski slots of all four parties");
  }
  const ModeRegister out_reg = scenario.expanded_register();
  const int n_out = out_reg.size();
  const double cr = std::cos(scenario.r());
  const double sr = std::sin(scenario.r());

  Vector out = Vector::Zero(out_reg.dimension());
  const Eigen::Index dim_in = psi.dimension();
  for (Eigen::Index in_idx = 0; in_idx < dim_in; ++in_idx) {
    const Complex amp = psi.amplitude(in_idx);
    if (amp == Complex(0.0, 0.0)) continue;
    // Distribute this ket over the accelerated parties' branch choices:
    // |0> splits into cos(r)|0_I 0_II> and sin(r)|1_I 1_II>, |1> maps to |1_I 0_II>.
    struct Branch { Eigen::Index index; double weight; };
    std::vector<Branch> branches{{0, 1.0}};
    for (int party = 0; party < kPartyCount; ++party) {
      const Party p = static_cast<Party>(party);
      const int bit = slot_bit(in_idx, party, kPartyCount);
      std::vector<Branch> next;
      next.reserve(branches.size() * 2);
      if (scenario.is_accelerated(p)) {
        const int slot_i = out_reg.find(p, Region::RindlerI);
        const int slot_ii = out_reg.find(p, Region::RindlerII);
        const Eigen::Index bit_i = Eigen::Index{1} << (n_out - 1 - slot_i);
        const Eigen::Index bit_ii = Eigen::Index{1} << (n_out - 1 - slot_ii);
        for (const Branch& b : branches) {
          if (bit == 0) {
            next.push_back({b.index, b.weight * cr});
            next.push_back({b.index | bit_i | bit_ii, b.weight * sr});
          } else {
            next.push_back({b.index | bit_i, b.weight});
          }
        }
      } else {
        const int slot_m = out_reg.find(p, Region::Minkowski);
        const Eigen::Index bit_m = Eigen::Index{1} << (n_out - 1 - slot_m);
        for (const Branch& b : branches) {
          next.push_back({bit ? (b.index | bit_m) : b.index, b.weight});
        }
      }
      branches = std::move(next);
    }
    for (const Branch& b : branches) out[b.index] += amp * b.weight;
  }
  return StateVector(out_reg, std::move(out));
}

DensityMatrix physical_density(const StateVector& psi_expanded) {
  const ModeRegister& reg = psi_expanded.reg();
  const int n = reg.size();
  std::vector<int> keep, traced;
  for (int s = 0; s < n; ++s) {
    (reg.slot(s).region == Region::RindlerII ? traced : keep).push_back(s);
  }

  const int nk = static_cast<int>(keep.size());
  const int nt = static_cast<int>(traced.size());
  const Eigen::Index dim_keep = Eigen::Index{1} << nk;
  const Eigen::Index dim_env = Eigen::Index{1} << nt;

  auto scatter = [&](Eigen::Index ik, Eigen::Index ie) {
    Eigen::Index full = 0;
    for (int b = 0; b < nk; ++b) {
      full |= static_cast<Eigen::Index>((ik >> (nk - 1 - b)) & 1)
              << (n - 1 - keep[static_cast<size_t>(b)]);
    }
    for (int b = 0; b < nt; ++b) {
      full |= static_cast<Eigen::Index>((ie >> (nt - 1 - b)) & 1)
              << (n - 1 - traced[static_cast<size_t>(b)]);
    }
    return full;
  };

  // Gram accumulation straight from the amplitudes; the expanded density
  // matrix itself (up to 256 x 256) is never materialized.
  Matrix rho = Matrix::Zero(dim_keep, dim_keep);
  for (Eigen::Index e = 0; e < dim_env; ++e) {
    for (Eigen::Index i = 0; i < dim_keep; ++i) {
      const Complex ai = psi_expanded.amplitude(scatter(i, e));
      if (ai == Complex(0.0, 0.0)) continue;
      for (Eigen::Index j = 0; j < dim_keep; ++j) {
        rho(i, j) += ai * std::conj(psi_expanded.amplitude(scatter(j, e)));
      }
    }
  }
  return DensityMatrix(reg.subset(keep), std::move(rho));
}

}  // namespace rindler
