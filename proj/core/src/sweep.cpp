#include "ceit/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "ceit/errors.hpp"

namespace ceit {

namespace {

// Static partition over preallocated slots: output depends only on the
// index, never on scheduling.
template <typename Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
  }
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (int i = t; i < count; i += threads) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) {
    v[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  }
  return v;
}

QmePoint qme_point(const SystemParams& p, const CutoffPolicy& policy) {
  const SteadyStateResult res = solve_for_sweep(p, policy);
  return {res.n_s, res.t_a.value_or(0.0), res.g2_0, res.n_max_used};
}

PhaseCell classify_cell(const SystemParams& p) {
  PhaseCell cell;
  const auto roots = solve_steady_states(p);
  cell.n_solutions = static_cast<int>(roots.size());
  cell.n_s_lowest = std::numeric_limits<double>::quiet_NaN();
  for (const auto& fp : roots) {
    if (fp.stability == Stability::Stable) {
      ++cell.n_stable;
      if (std::isnan(cell.n_s_lowest)) cell.n_s_lowest = fp.n_s;
    }
    if (fp.stability == Stability::Marginal) cell.fold_degenerate = true;
  }
  return cell;
}

}  // namespace

void SweepSpec::validate() const {
  base.validate();
  auto check_axis = [](const AxisSpec& a) {
    if (!(std::isfinite(a.lo) && std::isfinite(a.hi)))
      throw InvalidParams("SweepSpec: axis range must be finite");
    if (a.resolution < 2)
      throw InvalidParams("SweepSpec: axis resolution must be >= 2");
  };
  check_axis(axis1);
  if (axis2) check_axis(*axis2);
  if (!mfa && !qme) throw InvalidParams("SweepSpec: no engine selected");
}

SpectrumResult sweep_1d(const SweepSpec& spec) {
  spec.validate();
  if (spec.axis2) throw InvalidParams("sweep_1d: spec has two axes");

  const auto values = linspace(spec.axis1.lo, spec.axis1.hi,
                               spec.axis1.resolution);
  SpectrumResult result;
  result.spec = spec;
  result.points.resize(values.size());

  parallel_for(static_cast<int>(values.size()), spec.threads, [&](int i) {
    SweepPoint& pt = result.points[i];
    pt.axis_value = values[i];
    const SystemParams p = with_axis_value(spec.base, spec.axis1.axis, values[i]);
    try {
      if (spec.mfa) pt.branches = solve_steady_states(p);
      if (spec.qme) pt.qme = qme_point(p, spec.cutoff);
    } catch (const Error& e) {
      pt.status = e.what();
    }
  });
  return result;
}

PhaseDiagram phase_diagram_2d(const SweepSpec& spec) {
  spec.validate();
  if (!spec.axis2) throw InvalidParams("phase_diagram_2d: spec needs two axes");
  if (!spec.mfa) throw InvalidParams("phase_diagram_2d: MFA engine is mandatory");

  PhaseDiagram pd;
  pd.spec = spec;
  pd.xs = linspace(spec.axis1.lo, spec.axis1.hi, spec.axis1.resolution);
  pd.ys = linspace(spec.axis2->lo, spec.axis2->hi, spec.axis2->resolution);
  const int nx = static_cast<int>(pd.xs.size());
  const int ny = static_cast<int>(pd.ys.size());
  if (spec.qme && nx * ny > spec.qme_cell_budget) {
    throw InvalidParams("phase_diagram_2d: QME cell budget exceeded");
  }
  pd.cells.resize(static_cast<std::size_t>(nx) * ny);

  parallel_for(nx * ny, spec.threads, [&](int idx) {
    const int ix = idx % nx;
    const int iy = idx / nx;
    SystemParams p = with_axis_value(spec.base, spec.axis1.axis, pd.xs[ix]);
    p = with_axis_value(p, spec.axis2->axis, pd.ys[iy]);
    PhaseCell& cell = pd.cells[idx];
    try {
      cell = classify_cell(p);
      if (spec.qme) cell.qme = qme_point(p, spec.cutoff);
    } catch (const Error& e) {
      cell.status = e.what();
    }
  });
  return pd;
}

QuasiDarkPeak find_quasi_dark_peak(const SystemParams& params,
                                   double window_lo, double window_hi,
                                   bool with_qme, const CutoffPolicy& policy) {
  if (!(window_lo < window_hi))
    throw InvalidParams("find_quasi_dark_peak: empty window");

  // With the QME engine the peak is located on the exact transmission curve;
  // otherwise on the lowest stable mean-field branch. Near the quasi-dark
  // resonance the quantum peak sits visibly redward of the mean-field one, so
  // the correlation must be read off at the quantum maximum.
  auto t_lowest = [&](double dc) {
    SystemParams p = params;
    p.delta_c = dc;
    if (with_qme) {
      const SteadyStateResult res = solve_for_sweep(p, policy);
      if (!res.t_a) throw UndefinedTransmission("find_quasi_dark_peak: eta=0");
      return *res.t_a;
    }
    for (const auto& fp : solve_steady_states(p)) {
      if (fp.stability == Stability::Stable)
        return transmission(fp.n_s, p);  // roots are sorted ascending
    }
    throw NoStableRoot("find_quasi_dark_peak: no stable root in window");
  };

  // Coarse bracket of the interior maximum.
  const int coarse = 65;
  std::vector<double> grid = linspace(window_lo, window_hi, coarse);
  int best = 0;
  double best_t = -1.0;
  for (int i = 0; i < coarse; ++i) {
    const double t = t_lowest(grid[i]);
    if (t > best_t) {
      best_t = t;
      best = i;
    }
  }
  if (best == 0 || best == coarse - 1) {
    throw SolverFailure(
        "find_quasi_dark_peak: no interior transmission maximum in window");
  }

  // Golden-section refinement on [grid[best-1], grid[best+1]].
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = grid[best - 1], b = grid[best + 1];
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = t_lowest(c), fd = t_lowest(d);
  while (b - a > 1e-4) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = t_lowest(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = t_lowest(d);
    }
  }

  QuasiDarkPeak peak;
  peak.delta_c_peak = 0.5 * (a + b);
  peak.t_p = t_lowest(peak.delta_c_peak);
  if (with_qme) {
    SystemParams p = params;
    p.delta_c = peak.delta_c_peak;
    peak.g2_0 = solve_for_sweep(p, policy).g2_0;
  }
  return peak;
}

}  // namespace ceit
