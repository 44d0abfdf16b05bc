#include "rindler/verify.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>

#include "rindler/measures.hpp"
#include "rindler/tensor.hpp"

namespace rindler {

namespace {

// Max distance from each closed-form value to its nearest distinct pipeline
// eigenvalue. The pipeline spectrum may be longer (reductions carry exact
// zeros and, for one printed list, an omitted eigenvalue).
double spectrum_match_deviation(std::vector<double> closed, std::vector<double> pipeline) {
  std::sort(closed.begin(), closed.end(), [](double a, double b) {
    return std::abs(a) > std::abs(b);
  });
  std::multiset<double> pool(pipeline.begin(), pipeline.end());
  double worst = 0.0;
  for (double value : closed) {
    auto it = pool.lower_bound(value);
    if (it == pool.end()) --it;
    if (it != pool.begin()) {
      auto prev = std::prev(it);
      if (std::abs(*prev - value) < std::abs(*it - value)) it = prev;
    }
    worst = std::max(worst, std::abs(*it - value));
    pool.erase(it);
  }
  return worst;
}

struct SpectrumProbe {
  SubsystemKind kind;
  std::string scenario;         // minimal scenario realizing the statuses
  std::vector<Party> parties;   // kept subsystem
};

const std::vector<SpectrumProbe>& spectrum_probes() {
  static const std::vector<SpectrumProbe> probes = {
      {SubsystemKind::PairOneAccelerated, "D", {Party::A, Party::D}},
      {SubsystemKind::PairTwoAccelerated, "CD", {Party::C, Party::D}},
      {SubsystemKind::TripleOneAccelerated, "D", {Party::B, Party::C, Party::D}},
      {SubsystemKind::TripleTwoAccelerated, "CD", {Party::B, Party::C, Party::D}},
      {SubsystemKind::TripleThreeAccelerated, "BCD", {Party::B, Party::C, Party::D}},
  };
  return probes;
}

std::vector<double> pipeline_spectrum(const StateVector& w, const Scenario& scenario,
                                      const std::vector<Party>& parties) {
  const DensityMatrix rho = physical_density(unruh_expand(w, scenario));
  std::vector<int> keep;
  for (Party p : parties) {
    for (int s : rho.reg().slots_of(p)) keep.push_back(s);
  }
  std::sort(keep.begin(), keep.end());
  const RealVector eigs = hermitian_eigenvalues(partial_trace(rho, keep).matrix());
  return {eigs.begin(), eigs.end()};
}

std::string spectrum_note(SubsystemKind kind) {
  switch (kind) {
    case SubsystemKind::PairOneAccelerated:
      return "printed second eigenvalue sin^2(r)/2 breaks unit trace "
             "(spectrum sums to 9/8 at r=pi/4); the reduction gives sin^2(r)/4";
    case SubsystemKind::TripleTwoAccelerated:
      return "printed sixth/seventh eigenvalues lack the 1/16 prefactor of their "
             "partners, and the printed list of 7 omits the sin^4(r)/4 eigenvalue "
             "(exactly the residual trace deficit)";
    default:
      return "";
  }
}

}  // namespace

std::vector<double> uniform_grid(int points) {
  if (points < 2) throw InvalidConfig("uniform_grid: need at least 2 points");
  std::vector<double> grid(static_cast<size_t>(points));
  for (int i = 0; i < points; ++i) {
    grid[static_cast<size_t>(i)] =
        kMaxAcceleration * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return grid;
}

std::vector<FormCheck> verify_closed_forms(const std::vector<double>& r_grid) {
  for (double r : r_grid) {
    if (!(r >= 0.0 && r <= kMaxAcceleration + 1e-15)) {
      throw InvalidConfig("verify_closed_forms: grid point outside [0, pi/4]");
    }
  }
  const StateVector w = tetrapartite_w();
  std::vector<FormCheck> checks;

  // Pair negativities: two inertial / one accelerated / two accelerated members.
  const std::array<const char*, 3> negativity_names = {
      "pair negativity, two inertial", "pair negativity, one accelerated",
      "pair negativity, two accelerated"};
  for (int acc = 0; acc <= 2; ++acc) {
    FormCheck check;
    check.name = negativity_names[static_cast<size_t>(acc)];
    for (double r : r_grid) {
      const Scenario scenario = Scenario::from_letters(acc == 0 ? "CD" : (acc == 1 ? "D" : "CD"), r);
      const Party p = acc == 2 ? Party::C : Party::A;
      const Party q = acc == 0 ? Party::B : Party::D;
      const double numeric = one_one_tangle(w, scenario, p, q);
      const double closed = pair_negativity_closed_form(r, acc);
      check.verbatim_deviation = std::max(check.verbatim_deviation, std::abs(closed - numeric));
      // A negativity clamps at zero where the analytic expression continues below.
      check.corrected_deviation =
          std::max(check.corrected_deviation, std::abs(std::max(closed, 0.0) - numeric));
    }
    if (acc == 2) {
      check.note = "analytic form continues negative past its zero near r=0.4725; "
                   "the pipeline negativity stays 0 there";
    }
    checks.push_back(std::move(check));
  }

  // Reduced-density spectra.
  for (const SpectrumProbe& probe : spectrum_probes()) {
    FormCheck check;
    check.name = subsystem_kind_name(probe.kind);
    check.note = spectrum_note(probe.kind);
    for (double r : r_grid) {
      const Scenario scenario = Scenario::from_letters(probe.scenario, r);
      const std::vector<double> numeric = pipeline_spectrum(w, scenario, probe.parties);
      const std::vector<double> verbatim =
          subsystem_spectrum_closed_form(r, probe.kind, FormFidelity::Verbatim);
      const std::vector<double> corrected =
          subsystem_spectrum_closed_form(r, probe.kind, FormFidelity::Corrected);
      check.verbatim_deviation =
          std::max(check.verbatim_deviation, spectrum_match_deviation(verbatim, numeric));
      check.corrected_deviation =
          std::max(check.corrected_deviation, spectrum_match_deviation(corrected, numeric));
      double trace = 0.0;
      for (double v : verbatim) trace += v;
      check.verbatim_trace_defect = std::max(check.verbatim_trace_defect, std::abs(trace - 1.0));
    }
    checks.push_back(std::move(check));
  }
  return checks;
}

bool write_verification_report(std::ostream& os, const std::vector<double>& r_grid) {
  const std::vector<FormCheck> checks = verify_closed_forms(r_grid);
  bool ok = true;

  os << "closed-form verification against the numeric pipeline\n";
  os << "grid: " << r_grid.size() << " points in [" << std::setprecision(6)
     << (r_grid.empty() ? 0.0 : r_grid.front()) << ", "
     << (r_grid.empty() ? 0.0 : r_grid.back()) << "]\n\n";
  os << std::left << std::setw(42) << "form" << std::right << std::setw(14) << "verbatim"
     << std::setw(14) << "corrected" << std::setw(14) << "trace defect" << "\n";
  os << std::string(84, '-') << "\n";
  os << std::scientific << std::setprecision(3);
  for (const FormCheck& check : checks) {
    os << std::left << std::setw(42) << check.name << std::right << std::setw(14)
       << check.verbatim_deviation << std::setw(14) << check.corrected_deviation
       << std::setw(14) << check.verbatim_trace_defect << "\n";
    if (check.corrected_deviation > kClosedFormTol) ok = false;
  }

  os << "\nitemized deviations above " << kClosedFormTol << " (verbatim forms):\n";
  bool any_note = false;
  for (const FormCheck& check : checks) {
    if (check.verbatim_deviation > kClosedFormTol) {
      any_note = true;
      os << "  - " << check.name << ": max deviation " << check.verbatim_deviation;
      if (check.verbatim_trace_defect > kClosedFormTol) {
        os << ", printed spectrum trace defect up to " << check.verbatim_trace_defect;
      }
      os << "\n";
      if (!check.note.empty()) os << "    suspected erratum: " << check.note << "\n";
    }
  }
  if (!any_note) os << "  none\n";

  os << "\nresult: " << (ok ? "OK" : "FAIL")
     << " (corrected forms within " << kClosedFormTol << " of the pipeline)\n";
  return ok;
}

bool write_verification_report(const std::string& path, const std::vector<double>& r_grid) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoFailure("write_verification_report: cannot open " + path);
  const bool ok = write_verification_report(os, r_grid);
  os.flush();
  if (!os.good()) throw IoFailure("write_verification_report: write failed for " + path);
  return ok;
}

}  // namespace rindler
