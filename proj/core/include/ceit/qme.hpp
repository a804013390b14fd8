#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "ceit/hilbert.hpp"
#include "ceit/params.hpp"

namespace ceit {

inline constexpr double kCorrelationFloor = 1e-12;

// Lindblad generator on column-stacked density matrices:
//   L vec(rho) = vec(-i[H,rho] + (k/2)D[a] + (g13/2)D[s13] + (g23/2)D[s23])
// with D[o]rho = 2 o rho o^dag - o^dag o rho - rho o^dag o.
// Stored sparse; dense() materializes for spectral checks at small sizes.
struct Liouvillian {
  Eigen::SparseMatrix<Complex> mat;  // dim^2 x dim^2
  SystemParams params;
  int n_max = 0;

  int dim() const { return 3 * (n_max + 1); }
  Matrix dense() const { return Matrix(mat); }
};

Liouvillian build_liouvillian(const SystemParams& params, const OperatorSet& ops);

// Direct (superoperator-free) evaluation of the master-equation right-hand
// side; used by the regression-theorem propagator and as the oracle the
// vectorized Liouvillian is checked against.
Matrix lindblad_rhs(const Matrix& h, const OperatorSet& ops,
                    const SystemParams& params, const Matrix& rho);

// Unique steady-state density matrix: solves L vec(rho) = 0 with one row
// replaced by the trace constraint, then Hermitizes. Throws
// DegenerateSteadyState when the kernel is not one-dimensional.
Matrix steady_state(const Liouvillian& liou);

struct Observables {
  double n_s = 0.0;
  double var_n = 0.0;
  std::optional<double> t_a;  // empty when eta = 0
};

Observables observables(const Matrix& rho_s, const OperatorSet& ops,
                        const SystemParams& params);

// g2(0) = Tr(a^dag a^dag a a rho) / Tr(a^dag a rho)^2.
double g2_zero(const Matrix& rho_s, const OperatorSet& ops);

struct G2Series {
  std::vector<double> tau;
  std::vector<double> g2;
  bool converged = false;  // step-doubling reached the target tolerance
};

// Quantum regression theorem: evolve X(tau) from X(0) = a rho_s a^dag under
// the master equation; g2(tau) = Tr[a^dag a X(tau)] / n_s^2.
G2Series g2_tau(const Matrix& rho_s, const Liouvillian& liou,
                const OperatorSet& ops, const std::vector<double>& tau_grid);

struct SteadyStateResult {
  Matrix rho;
  double n_s = 0.0;
  std::optional<double> t_a;
  double g2_0 = 0.0;           // NaN when n_s below the correlation floor
  double var_n = 0.0;
  int n_max_used = 0;
  double top_fock_population = 0.0;  // total population of top two layers
  bool ill_conditioned = false;
};

struct CutoffPolicy {
  int start = 10;
  int growth = 2;
  double top_population_threshold = 1e-8;
  int cap = 60;
};

// Solve at a fixed Fock cutoff; fills every observable.
SteadyStateResult solve_fixed_cutoff(const SystemParams& params, int n_max);

// Grows the cutoff geometrically until the top two Fock layers hold less
// than the threshold population AND n_s is stable to 1e-8 relative against
// the next-larger cutoff. Throws TruncationFailure past the cap.
SteadyStateResult solve_with_adaptive_cutoff(const SystemParams& params,
                                             const CutoffPolicy& policy = {});

// Lighter per-point convergence used by sweeps: accepts the first cutoff
// whose top-layer population is below threshold, without the doubled
// confirmation solve.
SteadyStateResult solve_for_sweep(const SystemParams& params,
                                  const CutoffPolicy& policy = {});

}  // namespace ceit
