#pragma once

#include <array>
#include <complex>
#include <vector>

#include "ceit/params.hpp"

namespace ceit {

// Quintic photon-number polynomial sum_k c[k] n^k whose nonnegative real
// roots are the mean-field steady photon numbers. Obtained by clearing
// denominators of the steady-state field equations; identical (as a
// polynomial) to residual_F.
struct QuinticCoeffs {
  std::array<double, 6> c{};  // ascending powers
  double alpha = 0.0;         // (Dc+U0)^2 + kappa^2/4
  double beta = 0.0;          // g^2 (Dc+U0)
  double chi = 0.0;           // (Dc+U0)^2 g13^2/4 + (g^2 + kappa g13/4)^2

  double eval(double n) const {
    double v = 0.0;
    for (int k = 5; k >= 0; --k) v = v * n + c[k];
    return v;
  }
};

enum class Stability { Stable, Unstable, Marginal };

// One mean-field steady-state branch.
struct FixedPoint {
  double n_s = 0.0;
  std::complex<double> a_s{0.0, 0.0};
  std::complex<double> sigma12{0.0, 0.0};
  std::complex<double> sigma13{0.0, 0.0};
  Stability stability = Stability::Marginal;
  double residual = 0.0;      // |F(n_s)| after polishing
  bool refined = true;        // false if Newton polishing failed to converge
};

// F(n) = n [alpha u^2 - 2 beta d u + chi d^2] - eta^2 [u^2 + d^2 g13^2/4]
// with d = Dc - U0 n and u = d^2 - Omega^2. Roots of F on n >= 0 are
// exactly the steady photon numbers; the cleared form has no poles.
double residual_F(double n, const SystemParams& params);

// Exact symbolic expansion of residual_F.
QuinticCoeffs quintic_coeffs(const SystemParams& params);

// Coefficients exactly as printed in the literature source, kept as a
// cross-check only. All entries agree with quintic_coeffs except c[1],
// where the printed form carries chi*Dc instead of chi*Dc^2 (a typo;
// see compare_printed_coeffs and the meanfield tests).
std::array<double, 6> printed_coeffs(const SystemParams& params);

struct CoeffComparison {
  std::array<double, 6> expanded;
  std::array<double, 6> printed;
  std::array<bool, 6> matches;  // relative agreement to 1e-9
};
CoeffComparison compare_printed_coeffs(const SystemParams& params);

// All nonnegative real roots of the quintic, each back-substituted into the
// field equations and labeled by dynamical stability. Sorted ascending by
// n_s. eta = 0 returns the trivial n = 0 fixed point.
std::vector<FixedPoint> solve_steady_states(const SystemParams& params);

// Linearizes the weak-excitation equations of motion (variables sigma12,
// sigma13, a and conjugates; 6 complex dimensions) at the fixed point.
// Stable iff every Jacobian eigenvalue has real part < -eps_stab,
// Unstable iff any exceeds +eps_stab, else Marginal.
Stability classify_stability(const SystemParams& params, const FixedPoint& fp);

inline constexpr double kStabilityEps = 1e-9;

// T_a = n_s / (eta/kappa)^2. Throws UndefinedTransmission if eta = 0.
double transmission(double n_s, const SystemParams& params);

enum class SweepAxis { Eta, DeltaC, U0, Omega };
enum class ScanDirection { Up, Down };

// Hysteresis branch trace: at each step the stable root nearest to the
// previous step's n_s is followed; when that branch disappears at a fold
// the trace jumps to the nearest remaining stable root and records it.
struct BranchTrace {
  SweepAxis axis = SweepAxis::Eta;
  ScanDirection direction = ScanDirection::Up;
  std::vector<double> axis_values;
  std::vector<double> n_s;
  std::vector<int> jump_indices;  // indices into axis_values where jumps occur
};

BranchTrace hysteresis_scan(const SystemParams& params, SweepAxis axis,
                            double lo, double hi, int resolution,
                            ScanDirection direction);

// Trapezoid integral of |n_up - n_down| over the common axis grid.
double hysteresis_loop_area(const BranchTrace& up, const BranchTrace& down);

// Helper shared with the sweep engine.
SystemParams with_axis_value(SystemParams p, SweepAxis axis, double value);

}  // namespace ceit
