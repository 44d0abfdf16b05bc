#include "rindler/sweep.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace rindler {

StateVector initial_state(StateFamily family) {
  return family == StateFamily::WClass ? tetrapartite_w() : tetrapartite_ghz();
}

std::string measure_name(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::OneThreeTangle: return "one_three_tangle";
    case MeasureKind::OneOneTangle: return "one_one_tangle";
    case MeasureKind::ResidualTangle: return "residual_tangle";
    case MeasureKind::Pi4: return "pi4";
    case MeasureKind::BigPi4: return "big_pi4";
    case MeasureKind::PiDiff: return "pi_diff";
    case MeasureKind::Entropy: return "entropy";
    case MeasureKind::StateNorm: return "state_norm";
  }
  throw Error("unknown measure kind");
}

MeasureKind measure_from_name(const std::string& name) {
  for (MeasureKind kind : {MeasureKind::OneThreeTangle, MeasureKind::OneOneTangle,
                           MeasureKind::ResidualTangle, MeasureKind::Pi4,
                           MeasureKind::BigPi4, MeasureKind::PiDiff,
                           MeasureKind::Entropy, MeasureKind::StateNorm}) {
    if (measure_name(kind) == name) return kind;
  }
  throw InvalidConfig("unknown measure name: " + name);
}

std::string physical_label(const Scenario& scenario, const std::vector<Party>& parties) {
  std::string out;
  for (Party p : parties) out += slot_label(scenario.physical_slot(p));
  return out;
}

std::vector<Party> parse_party_labels(const std::string& labels,
                                      std::vector<bool>* tagged_accelerated) {
  std::vector<Party> parties;
  if (tagged_accelerated) tagged_accelerated->clear();
  for (size_t i = 0; i < labels.size();) {
    const char c = labels[i];
    if (c == ',' || c == ' ' || c == '+') { ++i; continue; }
    parties.push_back(party_from_letter(c));
    ++i;
    bool tagged = false;
    if (i < labels.size() && (labels[i] == 'I' || labels[i] == 'i')) {
      tagged = true;
      ++i;
    }
    if (tagged_accelerated) tagged_accelerated->push_back(tagged);
  }
  return parties;
}

namespace {

std::vector<Party> other_parties(Party p) {
  std::vector<Party> out;
  for (int i = 0; i < kPartyCount; ++i) {
    if (static_cast<Party>(i) != p) out.push_back(static_cast<Party>(i));
  }
  return out;
}

std::string subsystem_label(const Scenario& scenario, const MeasureRequest& req) {
  switch (req.kind) {
    case MeasureKind::OneThreeTangle:
      return physical_label(scenario, {req.parties.at(0)}) + "(" +
             physical_label(scenario, other_parties(req.parties.at(0))) + ")";
    case MeasureKind::OneOneTangle:
    case MeasureKind::ResidualTangle:
      return physical_label(scenario, req.parties);
    case MeasureKind::Pi4:
    case MeasureKind::BigPi4:
    case MeasureKind::PiDiff:
      return "all";
    case MeasureKind::Entropy:
      if (req.parties.empty()) {
        return physical_label(scenario, {Party::A, Party::B, Party::C, Party::D});
      }
      return physical_label(scenario, req.parties);
    case MeasureKind::StateNorm:
      return "state";
  }
  throw Error("unknown measure kind");
}

void check_party_count(const MeasureRequest& req) {
  const size_t n = req.parties.size();
  switch (req.kind) {
    case MeasureKind::OneThreeTangle:
    case MeasureKind::ResidualTangle:
      if (n != 1) throw InvalidConfig(measure_name(req.kind) + " takes exactly one party");
      break;
    case MeasureKind::OneOneTangle:
      if (n != 2) throw InvalidConfig("one_one_tangle takes exactly two parties");
      break;
    case MeasureKind::Pi4:
    case MeasureKind::BigPi4:
    case MeasureKind::PiDiff:
    case MeasureKind::StateNorm:
      if (n != 0) throw InvalidConfig(measure_name(req.kind) + " takes no subsystem");
      break;
    case MeasureKind::Entropy:
      break;  // empty means the whole physical state
  }
}

}  // namespace

double evaluate_measure(const StateVector& initial, const Scenario& scenario,
                        const MeasureRequest& req) {
  check_party_count(req);
  switch (req.kind) {
    case MeasureKind::OneThreeTangle:
      return one_three_tangle(initial, scenario, req.parties[0]);
    case MeasureKind::OneOneTangle:
      return one_one_tangle(initial, scenario, req.parties[0], req.parties[1]);
    case MeasureKind::ResidualTangle:
      return residual_tangle(initial, scenario, req.parties[0]);
    case MeasureKind::Pi4:
      return tangle_set(initial, scenario).pi4;
    case MeasureKind::BigPi4:
      return tangle_set(initial, scenario).big_pi4;
    case MeasureKind::PiDiff: {
      const TangleSet t = tangle_set(initial, scenario);
      return t.pi4 - t.big_pi4;
    }
    case MeasureKind::Entropy:
      if (req.parties.empty()) return total_entropy(initial, scenario);
      return subsystem_entropy(initial, scenario, req.parties);
    case MeasureKind::StateNorm:
      return unruh_expand(initial, scenario).norm();
  }
  throw Error("unknown measure kind");
}

std::vector<MeasureRecord> run_sweep(const SweepConfig& config) {
  if (!(config.r_min >= 0.0) || !(config.r_min < config.r_max) ||
      !(config.r_max <= kMaxAcceleration + 1e-15)) {
    throw InvalidConfig("run_sweep: need 0 <= r_min < r_max <= pi/4");
  }
  if (config.points < 2) throw InvalidConfig("run_sweep: need at least 2 grid points");
  for (const MeasureRequest& req : config.measures) check_party_count(req);

  const StateVector initial = initial_state(config.family);
  std::vector<MeasureRecord> records;
  records.reserve(config.scenarios.size() * static_cast<size_t>(config.points) *
                  config.measures.size());

  for (const std::string& letters : config.scenarios) {
    for (int i = 0; i < config.points; ++i) {
      const double r = config.r_min + (config.r_max - config.r_min) *
                       static_cast<double>(i) / static_cast<double>(config.points - 1);
      const Scenario scenario = Scenario::from_letters(letters, std::min(r, kMaxAcceleration));
      for (const MeasureRequest& req : config.measures) {
        records.push_back({scenario.label(), scenario.r(), measure_name(req.kind),
                           subsystem_label(scenario, req),
                           evaluate_measure(initial, scenario, req)});
      }
    }
  }

  std::sort(records.begin(), records.end(), [](const MeasureRecord& a, const MeasureRecord& b) {
    if (a.scenario != b.scenario) return a.scenario < b.scenario;
    if (a.measure != b.measure) return a.measure < b.measure;
    if (a.subsystem != b.subsystem) return a.subsystem < b.subsystem;
    return a.r < b.r;
  });
  return records;
}

namespace {

SweepConfig figure_config(const std::string& scenario, std::vector<MeasureRequest> measures,
                          int points) {
  SweepConfig config;
  config.scenarios = {scenario};
  config.points = points;
  config.measures = std::move(measures);
  return config;
}

void append_sweep(std::vector<MeasureRecord>& into, const SweepConfig& config) {
  const std::vector<MeasureRecord> rows = run_sweep(config);
  into.insert(into.end(), rows.begin(), rows.end());
}

}  // namespace

std::vector<MeasureRecord> run_figure(Figure figure, int points) {
  using MK = MeasureKind;
  std::vector<MeasureRecord> records;
  const std::vector<std::string> scenarios = {"D", "CD", "BCD", "ABCD"};

  switch (figure) {
    case Figure::OneThreeTangles:
      // The seven distinct one-vs-rest curves: per scenario one inertial and
      // one accelerated representative (the fully accelerated case has one).
      append_sweep(records, figure_config("D", {{MK::OneThreeTangle, {Party::A}},
                                                {MK::OneThreeTangle, {Party::D}}}, points));
      append_sweep(records, figure_config("CD", {{MK::OneThreeTangle, {Party::A}},
                                                 {MK::OneThreeTangle, {Party::D}}}, points));
      append_sweep(records, figure_config("BCD", {{MK::OneThreeTangle, {Party::A}},
                                                  {MK::OneThreeTangle, {Party::D}}}, points));
      append_sweep(records, figure_config("ABCD", {{MK::OneThreeTangle, {Party::A}}}, points));
      break;
    case Figure::OneOneTangles:
      // Three classes: two inertial, one accelerated, two accelerated members.
      append_sweep(records, figure_config("CD", {{MK::OneOneTangle, {Party::A, Party::B}},
                                                 {MK::OneOneTangle, {Party::C, Party::D}}},
                                          points));
      append_sweep(records, figure_config("D", {{MK::OneOneTangle, {Party::A, Party::D}}},
                                          points));
      break;
    case Figure::ResidualTangles:
      for (const std::string& s : scenarios) {
        append_sweep(records, figure_config(s, {{MK::ResidualTangle, {Party::A}},
                                                {MK::ResidualTangle, {Party::B}},
                                                {MK::ResidualTangle, {Party::C}},
                                                {MK::ResidualTangle, {Party::D}}}, points));
      }
      break;
    case Figure::WholeTangles:
      for (const std::string& s : scenarios) {
        append_sweep(records, figure_config(s, {{MK::Pi4, {}}, {MK::BigPi4, {}}}, points));
      }
      break;
    case Figure::TangleGap:
      for (const std::string& s : scenarios) {
        append_sweep(records, figure_config(s, {{MK::PiDiff, {}}}, points));
      }
      break;
    case Figure::Entropies:
      for (const std::string& s : scenarios) {
        append_sweep(records, figure_config(s, {{MK::Entropy, {}}}, points));
      }
      // Tripartite reductions with 0..3 accelerated members.
      append_sweep(records, figure_config("D", {{MK::Entropy, {Party::A, Party::B, Party::C}},
                                                {MK::Entropy, {Party::A, Party::B, Party::D}}},
                                          points));
      append_sweep(records, figure_config("CD", {{MK::Entropy, {Party::B, Party::C, Party::D}}},
                                          points));
      append_sweep(records, figure_config("BCD", {{MK::Entropy, {Party::B, Party::C, Party::D}}},
                                          points));
      // Bipartite reductions with 0..2 accelerated members.
      append_sweep(records, figure_config("CD", {{MK::Entropy, {Party::A, Party::B}},
                                                 {MK::Entropy, {Party::C, Party::D}}}, points));
      append_sweep(records, figure_config("D", {{MK::Entropy, {Party::A, Party::D}}}, points));
      break;
  }
  return records;
}

size_t emit_csv(const std::vector<MeasureRecord>& records, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoFailure("emit_csv: cannot open " + path);
  os << "scenario,r,measure,subsystem,value\n";
  char buf[64];
  for (const MeasureRecord& rec : records) {
    std::snprintf(buf, sizeof(buf), "%.12g", rec.r);
    os << rec.scenario << ',' << buf << ',' << rec.measure << ',' << rec.subsystem << ',';
    std::snprintf(buf, sizeof(buf), "%.12g", rec.value);
    os << buf << '\n';
  }
  os.flush();
  if (!os.good()) throw IoFailure("emit_csv: write failed for " + path);
  return records.size();
}

}  // namespace rindler
