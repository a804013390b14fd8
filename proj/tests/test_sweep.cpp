#include <doctest.h>

#include <cmath>

#include "ceit/errors.hpp"
#include "ceit/sweep.hpp"

using namespace ceit;

TEST_CASE("spec validation") {
  SweepSpec spec;
  spec.axis1 = {SweepAxis::DeltaC, -1.0, 1.0, 1};
  CHECK_THROWS_AS(spec.validate(), InvalidParams);
  spec.axis1.resolution = 8;
  spec.mfa = false;
  spec.qme = false;
  CHECK_THROWS_AS(spec.validate(), InvalidParams);
  spec.mfa = true;
  CHECK_NOTHROW(spec.validate());

  spec.axis2 = AxisSpec{SweepAxis::U0, 0.0, 1.0, 4};
  CHECK_THROWS_AS(sweep_1d(spec), InvalidParams);
  spec.axis2.reset();
  CHECK_THROWS_AS(phase_diagram_2d(spec), InvalidParams);
}

TEST_CASE("sweep output is independent of the thread partition") {
  SweepSpec spec;
  spec.base.u0 = 8.0;
  spec.axis1 = {SweepAxis::DeltaC, -1.2, 0.4, 33};
  spec.qme = true;

  spec.threads = 1;
  const SpectrumResult serial = sweep_1d(spec);
  spec.threads = 4;
  const SpectrumResult parallel = sweep_1d(spec);

  REQUIRE(serial.points.size() == parallel.points.size());
  for (std::size_t i = 0; i < serial.points.size(); ++i) {
    const auto& a = serial.points[i];
    const auto& b = parallel.points[i];
    CHECK(a.axis_value == b.axis_value);  // bitwise
    REQUIRE(a.branches.size() == b.branches.size());
    for (std::size_t k = 0; k < a.branches.size(); ++k) {
      CHECK(a.branches[k].n_s == b.branches[k].n_s);  // bitwise
    }
    REQUIRE(a.qme.has_value() == b.qme.has_value());
    if (a.qme) {
      CHECK(a.qme->n_s == b.qme->n_s);    // bitwise
      CHECK(a.qme->g2_0 == b.qme->g2_0);  // bitwise
    }
  }
}

TEST_CASE("spectrum at u0=0 is symmetric in delta_c") {
  SweepSpec spec;
  spec.axis1 = {SweepAxis::DeltaC, -5.0, 5.0, 41};
  const SpectrumResult r = sweep_1d(spec);
  const std::size_t n = r.points.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& left = r.points[i];
    const auto& right = r.points[n - 1 - i];
    REQUIRE(left.branches.size() == 1);
    CHECK(left.branches[0].n_s ==
          doctest::Approx(right.branches[0].n_s).epsilon(1e-9));
  }
}

TEST_CASE("phase diagram classifies solution counts and the u0=0 line") {
  SweepSpec spec;
  spec.base.eta = 0.6;
  spec.axis1 = {SweepAxis::DeltaC, -2.0, 8.0, 41};
  spec.axis2 = AxisSpec{SweepAxis::U0, 0.0, 24.0, 41};
  const PhaseDiagram pd = phase_diagram_2d(spec);
  REQUIRE(pd.cells.size() == 41 * 41);

  bool has1 = false, has3 = false, has5 = false;
  for (const auto& cell : pd.cells) {
    CHECK(cell.status.empty());
    if (cell.n_solutions == 1) has1 = true;
    if (cell.n_solutions == 3) has3 = true;
    if (cell.n_solutions == 5) has5 = true;
    if (!cell.fold_degenerate) {
      CHECK(cell.n_solutions % 2 == 1);
      CHECK(cell.n_stable == (cell.n_solutions + 1) / 2);
    }
    if (cell.n_stable > 0) CHECK(std::isfinite(cell.n_s_lowest));
  }
  CHECK(has1);
  CHECK(has3);
  CHECK(has5);
  for (int ix = 0; ix < 41; ++ix) {
    CHECK(pd.cell(ix, 0).n_solutions == 1);  // u0 = 0 row
  }
}

TEST_CASE("QME cell budget is enforced on 2-D sweeps") {
  SweepSpec spec;
  spec.axis1 = {SweepAxis::DeltaC, -2.0, 8.0, 100};
  spec.axis2 = AxisSpec{SweepAxis::U0, 0.0, 24.0, 100};
  spec.qme = true;
  spec.qme_cell_budget = 64;
  CHECK_THROWS_AS(phase_diagram_2d(spec), InvalidParams);
}

TEST_CASE("quasi-dark peak location, mean-field mode") {
  SystemParams p;
  p.u0 = 8.0;
  const QuasiDarkPeak peak = find_quasi_dark_peak(p, -2.0, 0.5);
  CHECK(peak.delta_c_peak == doctest::Approx(-0.58).epsilon(0.05));
  CHECK(peak.t_p > 0.0);
  CHECK(!peak.g2_0.has_value());
}

TEST_CASE("quasi-dark peak location, QME mode sits redward of mean-field") {
  SystemParams p;
  p.u0 = 8.0;
  const QuasiDarkPeak mfa = find_quasi_dark_peak(p, -2.0, 0.5);
  const QuasiDarkPeak qme = find_quasi_dark_peak(p, -2.0, 0.5, true);
  REQUIRE(qme.g2_0.has_value());
  CHECK(qme.delta_c_peak < mfa.delta_c_peak);
  CHECK(qme.delta_c_peak == doctest::Approx(-0.68).epsilon(0.05));
  CHECK(*qme.g2_0 < 1.0);
}

TEST_CASE("windows without an interior maximum are rejected") {
  SystemParams p;  // u0 = 0: transmission rises toward the sideband at 4.12
  CHECK_THROWS_AS(find_quasi_dark_peak(p, 4.5, 6.0), SolverFailure);
  CHECK_THROWS_AS(find_quasi_dark_peak(p, 1.0, 1.0), InvalidParams);
}
