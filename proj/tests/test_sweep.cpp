#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "rindler/closed_forms.hpp"
#include "rindler/sweep.hpp"
#include "rindler/threshold.hpp"

using namespace rindler;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/rindler_test_") + name;
}

size_t curve_count(const std::vector<MeasureRecord>& rows) {
  std::set<std::pair<std::string, std::string>> groups;
  for (const MeasureRecord& row : rows) groups.insert({row.scenario, row.subsystem});
  return groups.size();
}

}  // namespace

TEST_CASE("two-point sweep of the inertial pair negativity") {
  SweepConfig config;
  config.scenarios = {"CD"};
  config.points = 2;
  config.measures = {{MeasureKind::OneOneTangle, {Party::A, Party::B}}};
  const std::vector<MeasureRecord> rows = run_sweep(config);
  REQUIRE(rows.size() == 2);
  const double inertial = 0.5 * (std::sqrt(2.0) - 1.0);
  for (const MeasureRecord& row : rows) {
    CHECK(row.value == doctest::Approx(inertial).epsilon(1e-10));
    CHECK(row.scenario == "CD");
    CHECK(row.subsystem == "AB");
    CHECK(row.measure == "one_one_tangle");
  }
  CHECK(rows[0].r == 0.0);
  CHECK(rows[1].r == doctest::Approx(kMaxAcceleration));
}

TEST_CASE("norm check sweep stays at unity") {
  SweepConfig config;
  config.scenarios = {"D", "ABCD"};
  config.points = 200;
  config.measures = {{MeasureKind::StateNorm, {}}};
  for (const MeasureRecord& row : run_sweep(config)) {
    CHECK(std::abs(row.value - 1.0) <= 1e-12);
  }
}

TEST_CASE("sweep validation") {
  SweepConfig config;
  config.scenarios = {"D"};
  config.measures = {{MeasureKind::Pi4, {}}};
  config.points = 1;
  CHECK_THROWS_AS(run_sweep(config), InvalidConfig);
  config.points = 5;
  config.r_min = 0.5;
  config.r_max = 0.2;
  CHECK_THROWS_AS(run_sweep(config), InvalidConfig);
  config.r_min = 0.0;
  config.r_max = 1.0;  // past pi/4
  CHECK_THROWS_AS(run_sweep(config), InvalidConfig);
  config.r_max = 0.5;
  config.measures = {{MeasureKind::Pi4, {Party::A}}};
  CHECK_THROWS_AS(run_sweep(config), InvalidConfig);
}

TEST_CASE("records arrive sorted and deterministic") {
  SweepConfig config;
  config.scenarios = {"CD", "D"};
  config.points = 7;
  config.measures = {{MeasureKind::OneThreeTangle, {Party::A}},
                     {MeasureKind::Entropy, {Party::A, Party::B}}};
  const auto a = run_sweep(config);
  const auto b = run_sweep(config);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].scenario == b[i].scenario);
    CHECK(a[i].value == b[i].value);
  }
  for (size_t i = 1; i < a.size(); ++i) {
    const auto key = [](const MeasureRecord& m) {
      return std::tuple(m.scenario, m.measure, m.subsystem, m.r);
    };
    CHECK(key(a[i - 1]) < key(a[i]));
  }
}

TEST_CASE("csv emission format") {
  const std::string path = temp_path("empty.csv");
  CHECK(emit_csv({}, path) == 0);
  CHECK(slurp(path) == "scenario,r,measure,subsystem,value\n");

  const std::string one = temp_path("one.csv");
  MeasureRecord rec{"CD", 0.123456789012345, "one_one_tangle", "AB", 0.207106781186548};
  CHECK(emit_csv({rec}, one) == 1);
  const std::string text = slurp(one);
  CHECK(text == "scenario,r,measure,subsystem,value\n"
                "CD,0.123456789012,one_one_tangle,AB,0.207106781187\n");
  CHECK(text.find("\r") == std::string::npos);

  CHECK_THROWS_AS(emit_csv({}, "/nonexistent-dir/x.csv"), IoFailure);

  std::remove(path.c_str());
  std::remove(one.c_str());
}

TEST_CASE("csv files are byte-identical across runs") {
  SweepConfig config;
  config.scenarios = {"BCD"};
  config.points = 11;
  config.measures = {{MeasureKind::Pi4, {}}, {MeasureKind::BigPi4, {}}};
  const std::string p1 = temp_path("det1.csv");
  const std::string p2 = temp_path("det2.csv");
  emit_csv(run_sweep(config), p1);
  emit_csv(run_sweep(config), p2);
  CHECK(slurp(p1) == slurp(p2));
  std::remove(p1.c_str());
  std::remove(p2.c_str());
}

TEST_CASE("figure presets carry the caption curve classes") {
  const auto fig1 = run_figure(Figure::OneThreeTangles, 5);
  CHECK(curve_count(fig1) == 7);
  for (const MeasureRecord& row : fig1) CHECK(row.value > 0.0);

  const auto fig2 = run_figure(Figure::OneOneTangles, 5);
  CHECK(curve_count(fig2) == 3);

  const auto fig3 = run_figure(Figure::ResidualTangles, 3);
  CHECK(curve_count(fig3) == 16);

  const auto fig4 = run_figure(Figure::WholeTangles, 3);
  CHECK(curve_count(fig4) == 4);  // per scenario, two measures share a subsystem key
  std::set<std::string> measures;
  for (const auto& row : fig4) measures.insert(row.measure);
  CHECK(measures == std::set<std::string>{"big_pi4", "pi4"});

  const auto fig6 = run_figure(Figure::Entropies, 3);
  std::set<std::string> subsystems;
  for (const auto& row : fig6) subsystems.insert(row.subsystem);
  // 4 total-system registers + 4 triples + 3 pairs.
  CHECK(subsystems.size() == 11);
}

TEST_CASE("threshold bisection on the doubly accelerated pair") {
  // Pipeline mode: positive-to-zero transition of the pair negativity.
  const StateVector w = tetrapartite_w();
  auto pipeline = [&](double r) {
    return one_one_tangle(w, Scenario::from_letters("CD", r), Party::C, Party::D);
  };
  const ThresholdResult res =
      find_threshold(pipeline, 0.3, 0.6, ThresholdMode::PositiveToZero,
                     "one_one_tangle", "CIDI");
  CHECK(res.root == doctest::Approx(0.472473).epsilon(1e-4));
  CHECK(res.r_hi - res.r_lo == doctest::Approx(0.3));
  CHECK(res.iterations <= 40);
  CHECK(std::abs(res.residual) <= 1e-7);

  // Closed-form mode agrees through the sign change.
  const ThresholdResult closed = find_threshold(
      [](double r) { return pair_negativity_closed_form(r, 2); }, 0.3, 0.6,
      ThresholdMode::SignChange);
  CHECK(closed.root == doctest::Approx(res.root).epsilon(1e-6));

  // Constant-positive measures cannot bracket.
  auto flat = [&](double r) {
    return one_one_tangle(w, Scenario::from_letters("CD", r), Party::A, Party::B);
  };
  CHECK_THROWS_AS(find_threshold(flat, 0.1, 0.7, ThresholdMode::PositiveToZero),
                  NoSignChange);
  CHECK_THROWS_AS(find_threshold([](double) { return 1.0; }, 0.1, 0.7,
                                 ThresholdMode::SignChange),
                  NoSignChange);
}

TEST_CASE("parse_party_labels handles tags") {
  std::vector<bool> tags;
  auto parties = parse_party_labels("CIDI", &tags);
  REQUIRE(parties.size() == 2);
  CHECK(parties[0] == Party::C);
  CHECK(parties[1] == Party::D);
  CHECK(tags == std::vector<bool>{true, true});

  parties = parse_party_labels("A,B", &tags);
  REQUIRE(parties.size() == 2);
  CHECK(tags == std::vector<bool>{false, false});

  parties = parse_party_labels("ADI");
  REQUIRE(parties.size() == 2);
  CHECK(parties[1] == Party::D);
}
