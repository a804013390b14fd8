#include "ceit/checks.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <memory>
#include <random>
#include <sstream>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "ceit/errors.hpp"
#include "ceit/hilbert.hpp"
#include "ceit/meanfield.hpp"
#include "ceit/qme.hpp"
#include "ceit/sweep.hpp"

namespace ceit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Thrown when a check target is demonstrably unreachable within the model
// itself (as opposed to a wrong implementation); the message carries the
// measured behavior.
struct KnownLimit {
  std::string msg;
};

class Suite {
 public:
  explicit Suite(std::vector<CheckResult>& out) : out_(out) {}

  void run(const std::string& name, const std::function<std::string()>& body) {
    CheckResult r;
    r.name = name;
    try {
      r.detail = body();  // empty or informational detail on success
      r.pass = true;
    } catch (const KnownLimit& kl) {
      r.pass = false;
      r.known_limit = true;
      r.detail = kl.msg;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    out_.push_back(r);
  }

 private:
  std::vector<CheckResult>& out_;
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// Operating points used throughout the checks (kappa units; Omega/g = 0.35,
// g/kappa = 4).
SystemParams base_params() {
  SystemParams p;  // defaults: g=4, gamma=0.047, omega=1.4, eta=0.1
  return p;
}

SystemParams scurve_params() {
  SystemParams p = base_params();
  p.delta_c = -0.48;  // delta_c/g = -0.12
  p.u0 = 8.0;         // u0/g = 2
  return p;
}

int stable_count(const std::vector<FixedPoint>& roots) {
  int n = 0;
  for (const auto& fp : roots)
    if (fp.stability == Stability::Stable) ++n;
  return n;
}

int unstable_count(const std::vector<FixedPoint>& roots) {
  int n = 0;
  for (const auto& fp : roots)
    if (fp.stability == Stability::Unstable) ++n;
  return n;
}

// ---------------------------------------------------------------------------
// Property checks
// ---------------------------------------------------------------------------

void property_checks(Suite& suite, const CheckOptions& opt) {
  suite.run("coefficient identity: expanded quintic equals residual at 6 nodes",
            [&] {
    SystemParams p = scurve_params();
    p.eta = 0.155;
    QuinticCoeffs q = quintic_coeffs(p);
    if (opt.corrupt_quintic_c1) q.c[1] *= 1.0 + 1e-6;
    for (double n = 0.0; n <= 0.51; n += 0.1) {
      const double f = residual_F(n, p);
      const double qv = q.eval(n);
      const double scale = std::max(1.0, std::abs(f));
      require(std::abs(f - qv) <= 1e-10 * scale,
              "mismatch at n=" + fmt(n) + ": " + fmt(f) + " vs " + fmt(qv));
    }
    return std::string();
  });

  suite.run("printed-coefficient cross-check (c1 discrepancy expected)", [&] {
    SystemParams p = scurve_params();
    p.eta = 0.155;
    const CoeffComparison cmp = compare_printed_coeffs(p);
    for (int k : {0, 2, 3, 4, 5}) {
      require(cmp.matches[k], "printed c" + std::to_string(k) +
                                  " does not match the expansion");
    }
    require(!cmp.matches[1],
            "printed c1 unexpectedly matches; the chi*delta_c term should "
            "differ from the expanded chi*delta_c^2");
    return "printed c1 has chi*delta_c where the expansion gives "
           "chi*delta_c^2; the cleared-denominator form is authoritative";
  });

  suite.run("quintic roots: scaled residual <= 1e-9, odd count off folds", [&] {
    for (double u0 : {0.0, 2.0, 8.0, 16.0}) {
      for (double dc : {-0.7, 0.0, 1.3, 3.68}) {
        for (double eta : {0.1, 0.155, 0.6}) {
          SystemParams p = base_params();
          p.u0 = u0;
          p.delta_c = dc;
          p.eta = eta;
          const auto roots = solve_steady_states(p);
          require(!roots.empty(), "no roots at u0=" + fmt(u0));
          bool fold = false;
          for (const auto& fp : roots) {
            require(fp.refined, "unrefined root at u0=" + fmt(u0) +
                                    " dc=" + fmt(dc) + " eta=" + fmt(eta));
            if (fp.stability == Stability::Marginal) fold = true;
          }
          require(fold || roots.size() % 2 == 1,
                  "even root count off fold at u0=" + fmt(u0) +
                      " dc=" + fmt(dc) + " eta=" + fmt(eta));
        }
      }
    }
    return std::string();
  });

  suite.run("delta_c parity of mean-field roots at u0=0", [&] {
    for (double dc : {0.5, 1.0, 3.0, 4.5}) {
      SystemParams plus = base_params();
      plus.delta_c = dc;
      SystemParams minus = plus;
      minus.delta_c = -dc;
      const auto a = solve_steady_states(plus);
      const auto b = solve_steady_states(minus);
      require(a.size() == b.size(), "root count differs at dc=" + fmt(dc));
      for (std::size_t k = 0; k < a.size(); ++k) {
        require(std::abs(a[k].n_s - b[k].n_s) <= 1e-8,
                "root asymmetry at dc=" + fmt(dc));
      }
    }
    return std::string();
  });

  suite.run("g=0 limit: unique analytic root, dynamically stable", [&] {
    SystemParams p = base_params();
    p.g = 0.0;
    p.u0 = 1.3;
    p.delta_c = 0.7;
    const double alpha =
        (p.delta_c + p.u0) * (p.delta_c + p.u0) + p.kappa * p.kappa / 4.0;
    const double expected = p.eta * p.eta / alpha;
    const auto roots = solve_steady_states(p);
    require(roots.size() == 1, "expected a single root");
    require(std::abs(roots[0].n_s - expected) <= 1e-9 * expected,
            "root " + fmt(roots[0].n_s) + " vs analytic " + fmt(expected));
    require(roots[0].stability == Stability::Stable, "root not Stable");
    return std::string();
  });

  suite.run("trace-preservation: vec(I) is a left null vector", [&] {
    const HilbertSpace space(4);
    const OperatorSet ops = build_operators(space);
    SystemParams p = scurve_params();
    p.eta = 0.155;
    const Liouvillian liou = build_liouvillian(p, ops);
    const int d = space.dim();
    Eigen::VectorXcd vec_id = Eigen::VectorXcd::Zero(d * d);
    for (int j = 0; j < d; ++j) vec_id(j * d + j) = 1.0;
    const double norm = (liou.mat.transpose() * vec_id).norm();
    require(norm <= 1e-12, "left null-vector residual " + fmt(norm));
    return std::string();
  });

  suite.run("Liouvillian action matches direct master-equation evaluation", [&] {
    const HilbertSpace space(3);
    const OperatorSet ops = build_operators(space);
    SystemParams p = scurve_params();
    const Liouvillian liou = build_liouvillian(p, ops);
    const Matrix h = build_hamiltonian(p, ops);
    const int d = space.dim();
    std::mt19937 rng(12345);
    std::normal_distribution<double> dist;
    for (int trial = 0; trial < 10; ++trial) {
      Matrix m(d, d);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) m(r, c) = Complex(dist(rng), dist(rng));
      Matrix rho = 0.5 * (m + m.adjoint());
      rho /= rho.norm();
      const Matrix direct = lindblad_rhs(h, ops, p, rho);
      const Eigen::VectorXcd via_l =
          liou.mat * Eigen::Map<const Eigen::VectorXcd>(rho.data(), d * d);
      const double diff =
          (via_l - Eigen::Map<const Eigen::VectorXcd>(direct.data(), d * d))
              .norm();
      require(diff <= 1e-12 * (1.0 + direct.norm()),
              "action mismatch " + fmt(diff));
    }
    return std::string();
  });

  suite.run("steady-state invariants: trace, positivity, residual, variance identity",
            [&] {
    std::vector<SystemParams> points;
    {
      SystemParams p = base_params();
      points.push_back(p);  // EIT point, u0=0, dc=0
      p = scurve_params();
      p.eta = 0.155;
      points.push_back(p);  // bistable window midpoint
      p = base_params();
      p.u0 = 8.0;
      p.delta_c = -0.7;
      points.push_back(p);  // quasi-dark peak region
    }
    for (const auto& p : points) {
      const HilbertSpace space(10);
      const OperatorSet ops = build_operators(space);
      const Liouvillian liou = build_liouvillian(p, ops);
      const Matrix rho = steady_state(liou);
      const int d = space.dim();

      require(std::abs(rho.trace().real() - 1.0) <= 1e-10, "trace violation");
      require((rho - rho.adjoint()).norm() <= 1e-10, "hermiticity violation");
      Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
      require(es.eigenvalues().minCoeff() >= -1e-9, "negative eigenvalue");
      const double res =
          (liou.mat * Eigen::Map<const Eigen::VectorXcd>(rho.data(), d * d))
              .norm();
      require(res <= 1e-9, "kernel residual " + fmt(res));

      const Observables obs = observables(rho, ops, p);
      if (obs.n_s > kCorrelationFloor) {
        const double g2 = g2_zero(rho, ops);
        const double identity =
            obs.n_s * obs.n_s * (g2 + 1.0 / obs.n_s - 1.0);
        require(std::abs(obs.var_n - identity) <= 1e-10,
                "variance identity off by " + fmt(obs.var_n - identity));
      }
    }
    return std::string();
  });

  suite.run("g=0 limit: coherent cavity state from the master equation", [&] {
    SystemParams p = base_params();
    p.g = 0.0;
    p.u0 = 1.3;
    p.delta_c = 0.7;
    const SteadyStateResult res = solve_with_adaptive_cutoff(p);
    const double alpha2 =
        (p.delta_c + p.u0) * (p.delta_c + p.u0) + p.kappa * p.kappa / 4.0;
    const double expected = p.eta * p.eta / alpha2;
    require(std::abs(res.n_s - expected) <= 1e-8 * std::max(1.0, expected),
            "n_s " + fmt(res.n_s) + " vs analytic " + fmt(expected));
    require(std::abs(res.g2_0 - 1.0) <= 1e-8, "g2(0) " + fmt(res.g2_0));
    require(std::abs(res.var_n - res.n_s) <= 1e-8,
            "variance " + fmt(res.var_n) + " vs Poisson " + fmt(res.n_s));
    return std::string();
  });

  suite.run("QME parity at u0=0: n_s and g2(0) even in delta_c", [&] {
    for (double dc : {1.0, 2.0}) {
      SystemParams plus = base_params();
      plus.delta_c = dc;
      SystemParams minus = plus;
      minus.delta_c = -dc;
      const auto a = solve_fixed_cutoff(plus, 8);
      const auto b = solve_fixed_cutoff(minus, 8);
      require(std::abs(a.n_s - b.n_s) <= 1e-8, "n_s parity at dc=" + fmt(dc));
      require(std::abs(a.g2_0 - b.g2_0) <= 1e-8, "g2 parity at dc=" + fmt(dc));
    }
    return std::string();
  });

  suite.run("g2(tau): matches g2(0) at tau=0 and factorizes at the tail", [&] {
    const SystemParams p = base_params();  // EIT point
    const SteadyStateResult res = solve_for_sweep(p);
    const HilbertSpace space(res.n_max_used);
    const OperatorSet ops = build_operators(space);
    const Liouvillian liou = build_liouvillian(p, ops);
    const G2Series series =
        g2_tau(res.rho, liou, ops, {0.0, 1.0, 5.0, 20.0, 50.0});
    require(series.converged, "integration did not converge");
    require(std::abs(series.g2.front() - g2_zero(res.rho, ops)) <= 1e-8,
            "g2(0) mismatch with the direct formula");
    require(std::abs(series.g2.back() - 1.0) <= 1e-3,
            "tail g2(50)=" + fmt(series.g2.back()));
    return std::string();
  });

  suite.run("cutoff stability: +50% cutoff moves n_s and g2 by < 1e-6 relative",
            [&] {
    SystemParams p = scurve_params();
    p.eta = 0.155;
    const auto a = solve_fixed_cutoff(p, 10);
    const auto b = solve_fixed_cutoff(p, 15);
    require(std::abs(a.n_s - b.n_s) <= 1e-6 * b.n_s, "n_s drift");
    require(std::abs(a.g2_0 - b.g2_0) <= 1e-6 * b.g2_0, "g2 drift");
    return std::string();
  });
}

// ---------------------------------------------------------------------------
// Acceptance checks (end-to-end)
// ---------------------------------------------------------------------------

struct SpectrumContext {
  SpectrumResult sweep;
  double step = 0.0;
};

SpectrumContext run_eit_spectrum(const CheckOptions& opt) {
  SweepSpec spec;
  spec.base = base_params();  // u0 = 0, eta = 0.1
  spec.axis1 = {SweepAxis::DeltaC, -6.0, 6.0, 601};
  spec.mfa = true;
  spec.qme = true;
  spec.threads = opt.threads;
  SpectrumContext ctx;
  ctx.sweep = sweep_1d(spec);
  ctx.step = 12.0 / 600.0;
  return ctx;
}

void acceptance_checks(Suite& suite, const CheckOptions& opt) {
  std::shared_ptr<SpectrumContext> ctx;
  auto spectrum = [&]() -> SpectrumContext& {
    if (!ctx) ctx = std::make_shared<SpectrumContext>(run_eit_spectrum(opt));
    return *ctx;
  };

  suite.run("EIT spectrum: central dark-state peak with g2=1 and vacuum-Rabi "
            "sidebands at +-sqrt(g^2+kappa^2)",
            [&] {
    const auto& sp = spectrum();
    const auto& pts = sp.sweep.points;
    // Local maxima of the (single-branch) mean-field photon number.
    std::vector<int> maxima;
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
      const double n0 = pts[i - 1].branches.at(0).n_s;
      const double n1 = pts[i].branches.at(0).n_s;
      const double n2 = pts[i + 1].branches.at(0).n_s;
      if (n1 > n0 && n1 > n2) maxima.push_back(static_cast<int>(i));
    }
    const double target = std::sqrt(17.0);  // +-sqrt(g^2+kappa^2), g=4
    bool central = false, left = false, right = false;
    double left_at = 0.0, right_at = 0.0;
    for (int i : maxima) {
      const double dc = pts[i].axis_value;
      if (std::abs(dc) < sp.step) {
        central = true;
        require(pts[i].qme.has_value(), "no QME data at the central peak");
        require(std::abs(pts[i].qme->g2_0 - 1.0) <= 0.01,
                "central-peak g2 " + fmt(pts[i].qme->g2_0));
      }
      if (dc < -2.0) left_at = dc;
      if (dc > 2.0 && right_at == 0.0) right_at = dc;
      if (std::abs(dc + target) <= sp.step) left = true;
      if (std::abs(dc - target) <= sp.step) right = true;
    }
    require(central, "no central transmission peak within one grid step of 0");
    if (!(left && right)) {
      // The linear response of the model peaks where (Dc^2 - Omega^2) = g^2,
      // i.e. at +-sqrt(g^2 + Omega^2), not at the quoted +-sqrt(g^2+kappa^2).
      const SystemParams& p = sp.sweep.spec.base;
      const double actual = std::sqrt(p.g * p.g + p.omega * p.omega);
      require(left_at != 0.0 && right_at != 0.0, "no sideband maxima found");
      if (std::abs(left_at + actual) <= sp.step &&
          std::abs(right_at - actual) <= sp.step) {
        throw KnownLimit{
            "central peak ok (g2=1), but the sideband maxima sit at " +
            fmt(left_at) + " and " + fmt(right_at) +
            " = +-sqrt(g^2+Omega^2), not at the quoted +-sqrt(g^2+kappa^2) "
            "= +-" + fmt(target) +
            "; the target is not an extremum of the model's own response"};
      }
      require(false, "sideband maxima at " + fmt(left_at) + ", " +
                         fmt(right_at) + " match neither +-" + fmt(target) +
                         " nor +-" + fmt(actual));
    }
    return std::string();
  });

  suite.run("MFA-QME agreement at u0=0: n_s within 10% wherever n_s > 1e-4",
            [&] {
    const auto& sp = spectrum();
    double worst = 0.0, worst_at = 0.0, at_resonance = 1.0;
    for (const auto& pt : sp.sweep.points) {
      require(pt.status.empty(), "sweep error: " + pt.status);
      const double mfa = pt.branches.at(0).n_s;
      if (std::abs(pt.axis_value) < 1e-12)
        at_resonance = std::abs(pt.qme->n_s - mfa) / mfa;
      if (mfa <= 1e-4) continue;
      const double rel = std::abs(pt.qme->n_s - mfa) / mfa;
      if (rel > worst) {
        worst = rel;
        worst_at = pt.axis_value;
      }
    }
    if (worst > 0.10) {
      // The curves agree exactly at the dark-state resonance and match
      // closely at the peaks, but a single saturable atom departs from the
      // mean field by tens of percent on the window shoulders.
      require(at_resonance <= 1e-6 && worst <= 1.0,
              "disagreement beyond quantum-correction scale: worst " +
                  fmt(worst) + " at delta_c=" + fmt(worst_at) +
                  ", resonance deviation " + fmt(at_resonance));
      throw KnownLimit{
          "exact agreement at delta_c=0 (rel " + fmt(at_resonance) +
          ") but worst deviation " + fmt(worst) + " at delta_c=" +
          fmt(worst_at) + " exceeds the 10% target; single-atom quantum "
          "corrections on the window shoulders, not a numerical artifact "
          "(both engines are converged)"};
    }
    return "worst relative deviation " + fmt(worst);
  });

  suite.run("antibunching at the quasi-dark peak for u0/g=2", [&] {
    SystemParams p = base_params();
    p.u0 = 8.0;
    const QuasiDarkPeak peak =
        find_quasi_dark_peak(p, -2.0, 0.5, /*with_qme=*/true);
    require(peak.g2_0.has_value(), "no QME correlation at the peak");
    require(*peak.g2_0 < 1.0, "peak g2 " + fmt(*peak.g2_0));
    return "peak at delta_c=" + fmt(peak.delta_c_peak) +
           ", g2=" + fmt(*peak.g2_0);
  });

  suite.run("bistability onset in u0: window with 3-root cells and "
            "quasi-dark-peak bunching",
            [&] {
    std::vector<double> window;
    for (double u0 = 12.0; u0 <= 24.0; u0 += 2.0) {
      SystemParams p = base_params();
      p.u0 = u0;
      bool has3 = false;
      for (int i = 0; i < 301 && !has3; ++i) {
        p.delta_c = -6.0 + 12.0 * i / 300.0;
        if (solve_steady_states(p).size() >= 3) has3 = true;
      }
      if (!has3) continue;
      p.delta_c = 0.0;
      const QuasiDarkPeak peak =
          find_quasi_dark_peak(p, -2.5, 0.5, /*with_qme=*/true);
      if (peak.g2_0 && *peak.g2_0 > 1.0) window.push_back(u0);
    }
    require(!window.empty(),
            "no u0 with both bistable delta_c cells and peak g2 > 1");
    return "bunching bistable window contains u0 in [" + fmt(window.front()) +
           ", " + fmt(window.back()) + "]";
  });

  suite.run("S-curve: 3-root eta window, n_s <= 0.05, QME between the stable "
            "branches, bunching nonincreasing in eta",
            [&] {
    const SystemParams base = scurve_params();
    // Locate the 3-root window on a fine eta grid.
    double lo = -1.0, hi = -1.0;
    for (int i = 0; i <= 600; ++i) {
      SystemParams p = base;
      p.eta = 0.02 + (0.30 - 0.02) * i / 600.0;
      const auto roots = solve_steady_states(p);
      if (roots.size() == 3 && stable_count(roots) == 2 &&
          unstable_count(roots) == 1) {
        if (lo < 0.0) lo = p.eta;
        hi = p.eta;
      }
    }
    require(lo > 0.0 && hi > lo, "no 3-root eta window found");

    const int res = 50;
    const double margin = (hi - lo) / res;
    double prev_g2 = -1.0;
    for (int i = 0; i < res; ++i) {
      SystemParams p = base;
      p.eta = (lo + margin) + (hi - lo - 2.0 * margin) * i / (res - 1);
      const auto roots = solve_steady_states(p);
      require(roots.size() == 3 && stable_count(roots) == 2,
              "window interior lost the 3-root structure at eta=" + fmt(p.eta));
      const double low_n = roots.front().n_s;
      const double high_n = roots.back().n_s;
      require(low_n <= 0.05 && high_n <= 0.05,
              "stable branch above 0.05 at eta=" + fmt(p.eta));
      const SteadyStateResult q = solve_for_sweep(p);
      require(q.n_s > low_n && q.n_s < high_n,
              "QME n_s not between the stable branches at eta=" + fmt(p.eta));
      require(q.g2_0 > 1.0, "no bunching at eta=" + fmt(p.eta));
      if (prev_g2 > 0.0) {
        require(q.g2_0 <= prev_g2 * (1.0 + 1e-4),
                "g2 increased at eta=" + fmt(p.eta));
      }
      prev_g2 = q.g2_0;
    }
    return "window eta in [" + fmt(lo) + ", " + fmt(hi) + "]";
  });

  suite.run("delta_c-u0 diagram: 3- and 5-solution regions, u0=0 line "
            "single-valued, low-photon lowest branch matching QME",
            [&] {
    SweepSpec spec;
    spec.base = base_params();
    spec.base.eta = 0.6;
    spec.axis1 = {SweepAxis::DeltaC, -2.0, 8.0, 150};
    spec.axis2 = AxisSpec{SweepAxis::U0, 0.0, 24.0, 150};
    spec.threads = opt.threads;
    const PhaseDiagram pd = phase_diagram_2d(spec);

    bool has3 = false, has5 = false;
    for (const auto& cell : pd.cells) {
      if (cell.n_solutions == 3) has3 = true;
      if (cell.n_solutions == 5) has5 = true;
    }
    require(has3 && has5, "missing 3- or 5-solution region");
    for (std::size_t ix = 0; ix < pd.xs.size(); ++ix) {
      require(pd.cell(static_cast<int>(ix), 0).n_solutions == 1,
              "u0=0 line not single-valued");
    }

    // Along delta_c/g = 0.92 the lowest stable branch stays below 0.01 in
    // the bi/multistable windows and tracks the unique QME solution.
    double worst = 0.0;
    for (int i = 0; i <= 20; ++i) {
      SystemParams p = spec.base;
      p.delta_c = 3.68;
      p.u0 = 8.0 + 10.0 * i / 20.0;
      const auto roots = solve_steady_states(p);
      if (roots.size() < 3) continue;
      double lowest = -1.0;
      for (const auto& fp : roots) {
        if (fp.stability == Stability::Stable) {
          lowest = fp.n_s;
          break;
        }
      }
      require(lowest >= 0.0, "no stable root at u0=" + fmt(p.u0));
      require(lowest < 0.01,
              "lowest stable branch " + fmt(lowest) + " at u0=" + fmt(p.u0));
      const SteadyStateResult q = solve_for_sweep(p);
      const double rel = std::abs(q.n_s - lowest) / lowest;
      worst = std::max(worst, rel);
      require(rel <= 0.15, "QME deviation " + fmt(rel) + " at u0=" + fmt(p.u0));
    }
    return "worst QME-vs-lowest-branch deviation " + fmt(worst);
  });

  suite.run("eta-omega diagram: 5-solution region confined to omega/g < 0.7 "
            "and eta > 0.5",
            [&] {
    SweepSpec spec;
    spec.base = base_params();
    spec.base.u0 = 8.0;
    spec.base.delta_c = 4.0;
    spec.axis1 = {SweepAxis::Omega, 0.1, 4.0, 150};
    spec.axis2 = AxisSpec{SweepAxis::Eta, 0.02, 2.0, 150};
    spec.threads = opt.threads;
    const PhaseDiagram pd = phase_diagram_2d(spec);

    bool has5 = false;
    for (std::size_t iy = 0; iy < pd.ys.size(); ++iy) {
      for (std::size_t ix = 0; ix < pd.xs.size(); ++ix) {
        const auto& cell = pd.cell(static_cast<int>(ix), static_cast<int>(iy));
        if (cell.n_solutions == 5) {
          has5 = true;
          require(pd.xs[ix] < 0.7 * 4.0,
                  "5-solution cell at omega=" + fmt(pd.xs[ix]));
          require(pd.ys[iy] > 0.5, "5-solution cell at eta=" + fmt(pd.ys[iy]));
        }
      }
    }
    require(has5, "no 5-solution region found");
    return std::string();
  });

  suite.run("performance: single QME solve at dim 48 < 5 s; 200x200 "
            "mean-field diagram < 60 s",
            [&] {
    SystemParams p = scurve_params();
    p.eta = 0.155;
    auto t0 = Clock::now();
    (void)solve_fixed_cutoff(p, 15);  // Hilbert dim 48
    const double t_qme = seconds_since(t0);
    require(t_qme < 5.0, "QME solve took " + fmt(t_qme) + " s");

    SweepSpec spec;
    spec.base = base_params();
    spec.base.eta = 0.6;
    spec.axis1 = {SweepAxis::DeltaC, -2.0, 8.0, 200};
    spec.axis2 = AxisSpec{SweepAxis::U0, 0.0, 24.0, 200};
    spec.threads = opt.threads;
    t0 = Clock::now();
    (void)phase_diagram_2d(spec);
    const double t_phase = seconds_since(t0);
    require(t_phase < 60.0, "phase diagram took " + fmt(t_phase) + " s");
    return "QME " + fmt(t_qme) + " s, diagram " + fmt(t_phase) + " s";
  });
}

}  // namespace

std::vector<CheckResult> run_property_checks(const CheckOptions& opt) {
  std::vector<CheckResult> out;
  Suite suite(out);
  property_checks(suite, opt);
  return out;
}

std::vector<CheckResult> run_acceptance_checks(const CheckOptions& opt) {
  std::vector<CheckResult> out;
  Suite suite(out);
  acceptance_checks(suite, opt);
  return out;
}

std::vector<CheckResult> run_all_checks(const CheckOptions& opt) {
  std::vector<CheckResult> out = run_property_checks(opt);
  if (!opt.quick) {
    for (auto& r : run_acceptance_checks(opt)) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace ceit
