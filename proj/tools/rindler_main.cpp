// Command-line front end: acceleration sweeps, sudden-death thresholds,
// figure-data CSV regeneration and the closed-form verification report.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rindler/measures.hpp"
#include "rindler/sweep.hpp"
#include "rindler/threshold.hpp"
#include "rindler/verify.hpp"

namespace {

using namespace rindler;

constexpr int kExitOk = 0;
constexpr int kExitBadArguments = 1;
constexpr int kExitVerifyFailure = 2;
constexpr int kExitIoFailure = 3;

StateFamily family_from_name(const std::string& name) {
  if (name == "w" || name == "wclass" || name == "w-class") return StateFamily::WClass;
  if (name == "ghz") return StateFamily::GHZ;
  throw InvalidConfig("unknown state family: " + name + " (expected w or ghz)");
}

// Scenario letters for a subsystem label: tagged parties accelerate. When
// --accelerated was given explicitly, tags must agree with it.
std::string scenario_for_subsystem(const std::string& subsystem,
                                   const std::string& accelerated_flag) {
  std::vector<bool> tags;
  const std::vector<Party> parties = parse_party_labels(subsystem, &tags);
  std::string derived;
  for (size_t i = 0; i < parties.size(); ++i) {
    if (tags[i]) derived += party_letter(parties[i]);
  }
  if (accelerated_flag.empty()) return derived;
  const Scenario scenario = Scenario::from_letters(accelerated_flag, 0.0);
  for (size_t i = 0; i < parties.size(); ++i) {
    if (tags[i] != scenario.is_accelerated(parties[i])) {
      throw InvalidConfig("subsystem tag for party " +
                          std::string(1, party_letter(parties[i])) +
                          " conflicts with --accelerated " + accelerated_flag);
    }
  }
  return accelerated_flag;
}

MeasureRequest make_request(const std::string& measure, const std::string& subsystem) {
  MeasureRequest req;
  req.kind = measure_from_name(measure);
  req.parties = parse_party_labels(subsystem);
  return req;
}

void validate_tags(const Scenario& scenario, const std::string& subsystem) {
  std::vector<bool> tags;
  const std::vector<Party> parties = parse_party_labels(subsystem, &tags);
  for (size_t i = 0; i < parties.size(); ++i) {
    if (tags[i] && !scenario.is_accelerated(parties[i])) {
      throw InvalidConfig("subsystem tags party " + std::string(1, party_letter(parties[i])) +
                          " as accelerated but the scenario does not");
    }
  }
}

double point_value(StateFamily family, const std::string& scenario_letters, double r,
                   const MeasureRequest& req) {
  return evaluate_measure(initial_state(family), Scenario::from_letters(scenario_letters, r),
                          req);
}

int cmd_sweep(const std::string& figure, const std::string& out,
              const std::string& out_dir, const std::vector<std::string>& accelerated,
              const std::vector<std::string>& measures,
              const std::vector<std::string>& subsystems, double r_min, double r_max,
              int grid, const std::string& state) {
  if (!figure.empty()) {
    const std::map<std::string, Figure> figures = {
        {"fig1", Figure::OneThreeTangles}, {"fig2", Figure::OneOneTangles},
        {"fig3", Figure::ResidualTangles}, {"fig4", Figure::WholeTangles},
        {"fig5", Figure::TangleGap},       {"fig6", Figure::Entropies}};
    if (figure == "all") {
      for (const auto& [name, id] : figures) {
        const std::string path = (out_dir.empty() ? std::string(".") : out_dir) + "/" + name + ".csv";
        const size_t rows = emit_csv(run_figure(id, grid), path);
        std::cout << name << ": " << rows << " rows -> " << path << "\n";
      }
      return kExitOk;
    }
    const auto it = figures.find(figure);
    if (it == figures.end()) throw InvalidConfig("unknown figure: " + figure);
    const std::string path = out.empty() ? figure + ".csv" : out;
    const size_t rows = emit_csv(run_figure(it->second, grid), path);
    std::cout << figure << ": " << rows << " rows -> " << path << "\n";
    return kExitOk;
  }

  if (measures.empty()) throw InvalidConfig("sweep: give --measure or --figure");
  SweepConfig config;
  config.family = family_from_name(state);
  config.scenarios = accelerated.empty() ? std::vector<std::string>{""} : accelerated;
  config.r_min = r_min;
  config.r_max = r_max;
  config.points = grid;
  for (size_t i = 0; i < measures.size(); ++i) {
    const std::string subsystem = i < subsystems.size() ? subsystems[i] : std::string();
    config.measures.push_back(make_request(measures[i], subsystem));
    for (const std::string& letters : config.scenarios) {
      validate_tags(Scenario::from_letters(letters, 0.0), subsystem);
    }
  }
  if (out.empty()) throw InvalidConfig("sweep: --out is required");
  const size_t rows = emit_csv(run_sweep(config), out);
  std::cout << rows << " rows -> " << out << "\n";
  return kExitOk;
}

int cmd_threshold(const std::string& measure, const std::string& subsystem,
                  double r_lo, double r_hi, const std::string& mode,
                  const std::string& state, const std::string& accelerated) {
  const StateFamily family = family_from_name(state);
  const std::string scenario_letters = scenario_for_subsystem(subsystem, accelerated);
  ThresholdResult result;

  if (mode == "closed-form") {
    if (measure != measure_name(MeasureKind::OneOneTangle)) {
      throw InvalidConfig("closed-form mode only covers one_one_tangle");
    }
    std::vector<bool> tags;
    parse_party_labels(subsystem, &tags);
    const int acc = static_cast<int>(std::count(tags.begin(), tags.end(), true));
    result = find_threshold([acc](double r) { return pair_negativity_closed_form(r, acc); },
                            r_lo, r_hi, ThresholdMode::SignChange, measure, subsystem);
  } else if (mode == "pipeline") {
    const MeasureRequest req = make_request(measure, subsystem);
    result = find_threshold(
        [&](double r) { return point_value(family, scenario_letters, r, req); },
        r_lo, r_hi, ThresholdMode::PositiveToZero, measure, subsystem);
  } else {
    throw InvalidConfig("unknown threshold mode: " + mode);
  }

  std::printf("measure:    %s\n", result.measure.c_str());
  std::printf("subsystem:  %s\n", result.subsystem.c_str());
  std::printf("bracket:    [%.12g, %.12g]\n", result.r_lo, result.r_hi);
  std::printf("root r*:    %.12g\n", result.root);
  std::printf("iterations: %d\n", result.iterations);
  std::printf("residual:   %.12g\n", result.residual);
  return kExitOk;
}

int cmd_verify(int grid, const std::string& out) {
  const std::vector<double> r_grid = uniform_grid(grid);
  bool ok;
  if (out.empty()) {
    ok = write_verification_report(std::cout, r_grid);
  } else {
    ok = write_verification_report(out, r_grid);
    std::cout << "report -> " << out << (ok ? " (OK)" : " (FAIL)") << "\n";
  }
  return ok ? kExitOk : kExitVerifyFailure;
}

int cmd_state(const std::string& accelerated, double r, const std::string& state) {
  const Scenario scenario = Scenario::from_letters(accelerated, r);
  const StateVector psi = unruh_expand(initial_state(family_from_name(state)), scenario);
  std::cout << "register: ";
  for (int s = 0; s < psi.reg().size(); ++s) {
    std::cout << slot_label(psi.reg().slot(s)) << (s + 1 < psi.reg().size() ? " " : "");
  }
  std::cout << "\nnorm: ";
  std::printf("%.15g\n", psi.norm());
  for (Eigen::Index i = 0; i < psi.dimension(); ++i) {
    const Complex a = psi.amplitude(i);
    if (std::abs(a) < 1e-14) continue;
    std::cout << "|";
    for (int s = 0; s < psi.reg().size(); ++s) std::cout << slot_bit(i, s, psi.reg().size());
    std::printf("> %+.12g %+.12g\n", a.real(), a.imag());
  }
  return kExitOk;
}

int cmd_measure(const std::string& accelerated, double r, const std::string& measure,
                const std::string& subsystem, const std::string& state) {
  const MeasureRequest req = make_request(measure, subsystem);
  const Scenario scenario = Scenario::from_letters(accelerated, r);
  validate_tags(scenario, subsystem);
  const double value = point_value(family_from_name(state), accelerated, r, req);
  std::printf("%.12g\n", value);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tetrapartite W-class entanglement under uniform acceleration"};
  app.require_subcommand(1);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Evaluate measures over an r grid, write CSV");
  std::string figure, out, out_dir, state = "w";
  std::vector<std::string> accelerated, measures, subsystems;
  double r_min = 0.0, r_max = kMaxAcceleration, r = 0.0;
  int grid = 200;
  sweep->add_option("--figure", figure, "Preset dataset: fig1..fig6 or all");
  sweep->add_option("--accelerated", accelerated, "Accelerated party sets, e.g. D CD (repeatable)");
  sweep->add_option("--measure", measures, "Measure name (repeatable)");
  sweep->add_option("--subsystem", subsystems, "Subsystem labels per measure, e.g. AB or CIDI");
  sweep->add_option("--r-min", r_min, "Grid start (radians)")->capture_default_str();
  sweep->add_option("--r-max", r_max, "Grid end (radians)")->capture_default_str();
  sweep->add_option("--grid", grid, "Grid point count")->capture_default_str();
  sweep->add_option("--out", out, "Output CSV path");
  sweep->add_option("--out-dir", out_dir, "Output directory for --figure all");
  sweep->add_option("--state", state, "Initial state family: w or ghz")->capture_default_str();

  // threshold
  auto* threshold = app.add_subcommand("threshold", "Bisect a sudden-death acceleration");
  std::string th_measure = "one_one_tangle", th_subsystem = "CIDI", th_mode = "pipeline";
  std::string th_state = "w", th_accelerated;
  double r_lo = 0.3, r_hi = 0.6;
  threshold->add_option("--measure", th_measure, "Measure name")->capture_default_str();
  threshold->add_option("--subsystem", th_subsystem, "Subsystem labels with I tags")
      ->capture_default_str();
  threshold->add_option("--r-lo", r_lo, "Bracket start")->capture_default_str();
  threshold->add_option("--r-hi", r_hi, "Bracket end")->capture_default_str();
  threshold->add_option("--mode", th_mode, "pipeline or closed-form")->capture_default_str();
  threshold->add_option("--state", th_state, "w or ghz")->capture_default_str();
  threshold->add_option("--accelerated", th_accelerated,
                        "Scenario letters (default: derived from subsystem tags)");

  // verify
  auto* verify = app.add_subcommand("verify", "Closed-form verification report");
  int verify_grid = 50;
  std::string verify_out;
  verify->add_option("--grid", verify_grid, "Grid point count")->capture_default_str();
  verify->add_option("--out", verify_out, "Report path (default: stdout)");

  // state
  auto* state_cmd = app.add_subcommand("state", "Dump a Rindler-expanded state vector");
  std::string st_accelerated, st_state = "w";
  state_cmd->add_option("--accelerated", st_accelerated, "Accelerated parties, e.g. CD");
  state_cmd->add_option("--r", r, "Acceleration parameter (radians)")->required();
  state_cmd->add_option("--state", st_state, "w or ghz")->capture_default_str();

  // measure
  auto* measure_cmd = app.add_subcommand("measure", "Evaluate one measure at one point");
  std::string m_accelerated, m_measure, m_subsystem, m_state = "w";
  double m_r = 0.0;
  measure_cmd->add_option("--accelerated", m_accelerated, "Accelerated parties");
  measure_cmd->add_option("--r", m_r, "Acceleration parameter (radians)")->required();
  measure_cmd->add_option("--measure", m_measure, "Measure name")->required();
  measure_cmd->add_option("--subsystem", m_subsystem, "Subsystem labels");
  measure_cmd->add_option("--state", m_state, "w or ghz")->capture_default_str();

  try {
    app.parse(argc, argv);
    if (sweep->parsed()) {
      return cmd_sweep(figure, out, out_dir, accelerated, measures, subsystems,
                       r_min, r_max, grid, state);
    }
    if (threshold->parsed()) {
      return cmd_threshold(th_measure, th_subsystem, r_lo, r_hi, th_mode, th_state,
                           th_accelerated);
    }
    if (verify->parsed()) return cmd_verify(verify_grid, verify_out);
    if (state_cmd->parsed()) return cmd_state(st_accelerated, r, st_state);
    if (measure_cmd->parsed()) return cmd_measure(m_accelerated, m_r, m_measure,
                                                  m_subsystem, m_state);
    return kExitBadArguments;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadArguments;
  } catch (const IoFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArguments;
  }
}
