#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ceit/meanfield.hpp"
#include "ceit/params.hpp"
#include "ceit/qme.hpp"

namespace ceit {

struct AxisSpec {
  SweepAxis axis = SweepAxis::DeltaC;
  double lo = 0.0;
  double hi = 0.0;
  int resolution = 2;
};

struct SweepSpec {
  SystemParams base;
  AxisSpec axis1;
  std::optional<AxisSpec> axis2;  // set for 2-D phase diagrams
  bool mfa = true;
  bool qme = false;
  CutoffPolicy cutoff;
  // Dense Liouvillian solves dominate runtime; 2-D sweeps refuse to run
  // QME on more cells than this.
  int qme_cell_budget = 4096;
  int threads = 0;  // 0 = hardware concurrency

  void validate() const;
};

struct QmePoint {
  double n_s = 0.0;
  double t_a = 0.0;
  double g2_0 = 0.0;
  int n_max_used = 0;
};

struct SweepPoint {
  double axis_value = 0.0;
  std::vector<FixedPoint> branches;      // empty if MFA disabled or failed
  std::optional<QmePoint> qme;
  std::string status;                    // empty = ok, else error text
};

struct SpectrumResult {
  SweepSpec spec;
  std::vector<SweepPoint> points;
};

// Deterministic 1-D sweep; per-point failures are recorded in the point's
// status and the sweep continues.
SpectrumResult sweep_1d(const SweepSpec& spec);

struct PhaseCell {
  int n_solutions = 0;
  int n_stable = 0;
  double n_s_lowest = 0.0;   // lowest stable branch; NaN if none
  bool fold_degenerate = false;  // a Marginal (merged) root was present
  std::optional<QmePoint> qme;
  std::string status;
};

struct PhaseDiagram {
  SweepSpec spec;
  std::vector<double> xs;  // axis1 values
  std::vector<double> ys;  // axis2 values
  std::vector<PhaseCell> cells;  // row-major: cell(ix, iy) = cells[iy*nx + ix]

  const PhaseCell& cell(int ix, int iy) const {
    return cells[static_cast<std::size_t>(iy) * xs.size() + ix];
  }
};

PhaseDiagram phase_diagram_2d(const SweepSpec& spec);

struct QuasiDarkPeak {
  double delta_c_peak = 0.0;
  double t_p = 0.0;                // peak transmission
  std::optional<double> g2_0;      // QME correlation at the peak, if requested
};

// Golden-section refinement of the transmission maximum inside
// [window_lo, window_hi]: on the QME transmission curve when with_qme is set,
// else on the lowest stable mean-field branch. The window must bracket one
// interior maximum. Refinement tolerance 1e-4 kappa.
QuasiDarkPeak find_quasi_dark_peak(const SystemParams& params,
                                   double window_lo, double window_hi,
                                   bool with_qme = false,
                                   const CutoffPolicy& policy = {});

}  // namespace ceit
