#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace rindler {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;   // dense, row/col indexable, dim <= 256 in practice
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-12;   // max |M - M^dagger| entry
inline constexpr double kTraceTol = 1e-10;       // |tr(rho) - 1|
inline constexpr double kPsdTol = -1e-10;        // smallest admissible eigenvalue
inline constexpr double kNegativityFloor = -1e-12;  // eigenvalues below this count as negative
inline constexpr double kEntropyFloor = 1e-12;      // eigenvalues above this enter the entropy sum
inline constexpr double kMaxAcceleration = 0.78539816339744830962;  // pi/4

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonHermitianInput : Error { using Error::Error; };
struct EmptyKeepSet : Error { using Error::Error; };
struct EmptyTransposeSet : Error { using Error::Error; };
struct PartyCountTooSmall : Error { using Error::Error; };
struct UnnormalizedState : Error { using Error::Error; };
struct InvalidScenario : Error { using Error::Error; };
struct PartyNotInRegister : Error { using Error::Error; };
struct IdenticalParties : Error { using Error::Error; };
struct NoSignChange : Error { using Error::Error; };
struct InvalidConfig : Error { using Error::Error; };
struct IoFailure : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// Parties, regions, mode registers
// ---------------------------------------------------------------------------

enum class Party : int { A = 0, B = 1, C = 2, D = 3 };

enum class Region : int {
  Minkowski = 0,  // inertial mode
  RindlerI = 1,   // accelerated observer's accessible wedge
  RindlerII = 2,  // causally disconnected wedge, traced out of physical states
};

inline constexpr int kPartyCount = 4;

char party_letter(Party p);
Party party_from_letter(char c);

// One binary fermionic mode slot: which observer owns it and in which frame.
struct ModeSlot {
  Party party;
  Region region;

  bool operator==(const ModeSlot&) const = default;
};

// Label such as "A" (Minkowski), "DI" (Region I), "DII" (Region II).
std::string slot_label(const ModeSlot& slot);

// Ordered list of mode slots. Canonical order: parties ascend A..D and,
// within a party, Minkowski < Region I < Region II. Basis convention:
// slot 0 is the most significant bit of a basis index.
class ModeRegister {
 public:
  ModeRegister() = default;
  explicit ModeRegister(std::vector<ModeSlot> slots);

  // Minkowski register for the first `parties` of A,B,C,D.
  static ModeRegister minkowski(int parties);

  int size() const { return static_cast<int>(slots_.size()); }
  Eigen::Index dimension() const { return Eigen::Index{1} << slots_.size(); }
  const ModeSlot& slot(int i) const { return slots_.at(static_cast<size_t>(i)); }
  const std::vector<ModeSlot>& slots() const { return slots_; }

  // Index of an exact (party, region) slot; -1 when absent.
  int find(Party p, Region r) const;
  // All slot indices owned by a party (Region I and II count).
  std::vector<int> slots_of(Party p) const;
  bool contains_party(Party p) const { return !slots_of(p).empty(); }

  // Sub-register of the given slot indices (must be ascending).
  ModeRegister subset(const std::vector<int>& keep) const;

  // Concatenated slot labels, e.g. "ABCIDI".
  std::string label() const;

  bool operator==(const ModeRegister&) const = default;

 private:
  std::vector<ModeSlot> slots_;
};

// Bit of basis index `index` at slot `slot` for an n-slot register (slot 0 = MSB).
inline int slot_bit(Eigen::Index index, int slot, int n_slots) {
  return static_cast<int>((index >> (n_slots - 1 - slot)) & 1);
}

}  // namespace rindler
