#pragma once

#include <string>
#include <vector>

#include "rindler/measures.hpp"

namespace rindler {

enum class StateFamily { WClass, GHZ };

StateVector initial_state(StateFamily family);

enum class MeasureKind {
  OneThreeTangle,  // parties: the transposed party
  OneOneTangle,    // parties: the pair
  ResidualTangle,  // parties: the party
  Pi4,             // no parties
  BigPi4,          // no parties
  PiDiff,          // pi4 - big_pi4, no parties
  Entropy,         // parties: kept subsystem; empty = whole physical state
  StateNorm,       // norm of the Rindler-expanded state, no parties
};

std::string measure_name(MeasureKind kind);
MeasureKind measure_from_name(const std::string& name);

struct MeasureRequest {
  MeasureKind kind;
  std::vector<Party> parties;
};

// One computed quantity at one grid point.
struct MeasureRecord {
  std::string scenario;   // sorted letters of the accelerated set, or "none"
  double r;
  std::string measure;
  std::string subsystem;  // physical slot labels, e.g. "A(BCDI)", "CIDI", "all"
  double value;
};

struct SweepConfig {
  StateFamily family = StateFamily::WClass;
  std::vector<std::string> scenarios;  // accelerated sets by letters; "" = inertial
  double r_min = 0.0;
  double r_max = kMaxAcceleration;
  int points = 200;
  std::vector<MeasureRequest> measures;
  std::string out_path;  // consumed by callers; run_sweep itself never writes
};

// One measure at one point.
double evaluate_measure(const StateVector& initial, const Scenario& scenario,
                        const MeasureRequest& request);

// Evaluates every (scenario, grid point, measure) combination. Output rows are
// sorted by (scenario, measure, subsystem, r) and deterministic across runs.
std::vector<MeasureRecord> run_sweep(const SweepConfig& config);

// Datasets backing the six summary figures: the distinct curve classes of the
// 1-3 tangle (7), the 1-1 tangle (3), residual tangles, whole-entanglement
// averages, their gap, and the von Neumann entropies.
enum class Figure {
  OneThreeTangles = 1,
  OneOneTangles = 2,
  ResidualTangles = 3,
  WholeTangles = 4,
  TangleGap = 5,
  Entropies = 6,
};

std::vector<MeasureRecord> run_figure(Figure figure, int points = 200);

// Writes `scenario,r,measure,subsystem,value` with 12 significant digits and
// LF line endings; returns the number of data rows.
size_t emit_csv(const std::vector<MeasureRecord>& records, const std::string& path);

// Subsystem label helpers shared with the CLI.
std::string physical_label(const Scenario& scenario, const std::vector<Party>& parties);
std::vector<Party> parse_party_labels(const std::string& labels,
                                      std::vector<bool>* tagged_accelerated = nullptr);

}  // namespace rindler
