#include "ceit/qme.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include <Eigen/SparseLU>

#include "ceit/errors.hpp"

namespace ceit {

namespace {

using Triplet = Eigen::Triplet<Complex>;
using Sparse = Eigen::SparseMatrix<Complex>;

// Adds scale * (B^T kron A), the vectorization of rho -> A rho B under
// column stacking, to the triplet list.
void add_sandwich(std::vector<Triplet>& trips, const Matrix& a,
                  const Matrix& b, Complex scale, int d) {
  const Sparse sa = a.sparseView();
  const Sparse sb = b.sparseView();
  for (int kb = 0; kb < sb.outerSize(); ++kb) {
    for (Sparse::InnerIterator itb(sb, kb); itb; ++itb) {
      // B(i,j) multiplies column block j -> row block... entry sits at
      // row (j*d + r1), col (i*d + r2) since we need B(c2, c1).
      const int c1 = static_cast<int>(itb.col());
      const int c2 = static_cast<int>(itb.row());
      for (int ka = 0; ka < sa.outerSize(); ++ka) {
        for (Sparse::InnerIterator ita(sa, ka); ita; ++ita) {
          trips.emplace_back(c1 * d + static_cast<int>(ita.row()),
                             c2 * d + static_cast<int>(ita.col()),
                             scale * ita.value() * itb.value());
        }
      }
    }
  }
}

void add_dissipator(std::vector<Triplet>& trips, const Matrix& o, double rate,
                    const Matrix& id, int d) {
  if (rate == 0.0) return;
  const Matrix odag_o = o.adjoint() * o;
  add_sandwich(trips, o, o.adjoint(), Complex(rate, 0.0), d);
  add_sandwich(trips, odag_o, id, Complex(-rate / 2.0, 0.0), d);
  add_sandwich(trips, id, odag_o, Complex(-rate / 2.0, 0.0), d);
}

double top_two_layer_population(const Matrix& rho, const HilbertSpace& space) {
  double pop = 0.0;
  for (int atom = 0; atom < 3; ++atom) {
    for (int n = std::max(0, space.n_max - 1); n <= space.n_max; ++n) {
      pop += rho(space.index(atom, n), space.index(atom, n)).real();
    }
  }
  return pop;
}

}  // namespace

Matrix lindblad_rhs(const Matrix& h, const OperatorSet& ops,
                    const SystemParams& p, const Matrix& rho) {
  const Complex i(0.0, 1.0);
  Matrix out = -i * (h * rho - rho * h);
  auto diss = [&](const Matrix& o, double rate) {
    if (rate == 0.0) return;
    const Matrix odag = o.adjoint();
    const Matrix odag_o = odag * o;
    out += (rate / 2.0) *
           (2.0 * o * rho * odag - odag_o * rho - rho * odag_o);
  };
  diss(ops.a, p.kappa);
  diss(ops.sig(1, 3), p.gamma13);
  diss(ops.sig(2, 3), p.gamma23);
  return out;
}

Liouvillian build_liouvillian(const SystemParams& params,
                              const OperatorSet& ops) {
  params.validate();
  const int d = ops.dim();
  const Matrix h = build_hamiltonian(params, ops);
  const Matrix id = Matrix::Identity(d, d);
  const Complex i(0.0, 1.0);

  std::vector<Triplet> trips;
  add_sandwich(trips, h, id, -i, d);
  add_sandwich(trips, id, h, i, d);
  add_dissipator(trips, ops.a, params.kappa, id, d);
  add_dissipator(trips, ops.sig(1, 3), params.gamma13, id, d);
  add_dissipator(trips, ops.sig(2, 3), params.gamma23, id, d);

  Liouvillian liou;
  liou.params = params;
  liou.n_max = ops.n_max;
  liou.mat = Sparse(d * d, d * d);
  liou.mat.setFromTriplets(trips.begin(), trips.end());
  liou.mat.prune(Complex(0.0, 0.0));
  return liou;
}

Matrix steady_state(const Liouvillian& liou) {
  const int d = liou.dim();
  const int dd = d * d;
  if (liou.mat.rows() != dd) {
    throw DimensionMismatch("steady_state: inconsistent Liouvillian");
  }

  // Replace the row for rho(0,0) with the trace constraint Tr rho = 1.
  const int trace_row = 0;
  std::vector<Triplet> trips;
  trips.reserve(liou.mat.nonZeros() + d);
  for (int k = 0; k < liou.mat.outerSize(); ++k) {
    for (Sparse::InnerIterator it(liou.mat, k); it; ++it) {
      if (it.row() != trace_row) {
        trips.emplace_back(static_cast<int>(it.row()),
                           static_cast<int>(it.col()), it.value());
      }
    }
  }
  for (int j = 0; j < d; ++j) {
    trips.emplace_back(trace_row, j * d + j, Complex(1.0, 0.0));
  }
  Sparse a(dd, dd);
  a.setFromTriplets(trips.begin(), trips.end());
  a.makeCompressed();

  Eigen::SparseLU<Sparse> lu;
  lu.compute(a);
  if (lu.info() != Eigen::Success) {
    throw DegenerateSteadyState(
        "steady_state: trace-replaced system is singular "
        "(Liouvillian kernel is not one-dimensional)");
  }
  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(dd);
  b(trace_row) = 1.0;
  const Eigen::VectorXcd x = lu.solve(b);
  if (!x.allFinite()) {
    throw DegenerateSteadyState("steady_state: solve produced non-finite values");
  }

  Matrix rho = Eigen::Map<const Matrix>(x.data(), d, d);
  rho = 0.5 * (rho + rho.adjoint()).eval();
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > 1e-6) {
    throw DegenerateSteadyState("steady_state: trace normalization failed");
  }
  rho /= tr;

  const double residual =
      (liou.mat * Eigen::Map<const Eigen::VectorXcd>(rho.data(), dd)).norm();
  if (residual > 1e-8) {
    std::ostringstream msg;
    msg << "steady_state: residual " << residual
        << " exceeds tolerance (degenerate or ill-posed kernel)";
    throw DegenerateSteadyState(msg.str());
  }
  return rho;
}

Observables observables(const Matrix& rho_s, const OperatorSet& ops,
                        const SystemParams& params) {
  Observables obs;
  const Matrix num = ops.a_dag * ops.a;
  obs.n_s = (num * rho_s).trace().real();
  obs.var_n = (num * num * rho_s).trace().real() - obs.n_s * obs.n_s;
  if (params.eta > 0.0) {
    obs.t_a = obs.n_s * params.kappa * params.kappa / (params.eta * params.eta);
  }
  return obs;
}

double g2_zero(const Matrix& rho_s, const OperatorSet& ops) {
  const Matrix num = ops.a_dag * ops.a;
  const double n_s = (num * rho_s).trace().real();
  if (n_s <= kCorrelationFloor) {
    throw UndefinedCorrelation("g2_zero: steady photon number below floor");
  }
  const double g4 =
      (ops.a_dag * ops.a_dag * ops.a * ops.a * rho_s).trace().real();
  return g4 / (n_s * n_s);
}

G2Series g2_tau(const Matrix& rho_s, const Liouvillian& liou,
                const OperatorSet& ops, const std::vector<double>& tau_grid) {
  if (tau_grid.empty() || tau_grid.front() != 0.0) {
    throw InvalidParams("g2_tau: tau grid must start at 0");
  }
  for (std::size_t k = 1; k < tau_grid.size(); ++k) {
    if (tau_grid[k] <= tau_grid[k - 1]) {
      throw InvalidParams("g2_tau: tau grid must be strictly ascending");
    }
  }

  const Matrix num = ops.a_dag * ops.a;
  const double n_s = (num * rho_s).trace().real();
  if (n_s <= kCorrelationFloor) {
    throw UndefinedCorrelation("g2_tau: steady photon number below floor");
  }

  const Matrix h = build_hamiltonian(liou.params, ops);
  const Matrix x0 = ops.a * rho_s * ops.a_dag;
  const double tau_end = tau_grid.back();

  // RK4 step limit from the fastest scale of the generator.
  const double scale =
      h.cwiseAbs().rowwise().sum().maxCoeff() + liou.params.kappa +
      liou.params.gamma13 + liou.params.gamma23 + 1.0;

  auto integrate = [&](double hstep) {
    std::vector<double> series;
    series.reserve(tau_grid.size());
    Matrix x = x0;
    double tau = 0.0;
    for (double target : tau_grid) {
      while (tau < target - 1e-15) {
        const double h1 = std::min(hstep, target - tau);
        const Matrix k1 = lindblad_rhs(h, ops, liou.params, x);
        const Matrix k2 = lindblad_rhs(h, ops, liou.params, x + 0.5 * h1 * k1);
        const Matrix k3 = lindblad_rhs(h, ops, liou.params, x + 0.5 * h1 * k2);
        const Matrix k4 = lindblad_rhs(h, ops, liou.params, x + h1 * k3);
        x += (h1 / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        tau += h1;
      }
      series.push_back((num * x).trace().real() / (n_s * n_s));
    }
    return series;
  };

  const double tol = 1e-8 * std::max(1.0, tau_end);
  double hstep = std::min(1.0 / scale, tau_end > 0.0 ? tau_end : 1.0);
  std::vector<double> prev = integrate(hstep);
  G2Series out;
  out.tau = tau_grid;
  for (int halving = 0; halving < 14; ++halving) {
    hstep /= 2.0;
    std::vector<double> next = integrate(hstep);
    double diff = 0.0;
    bool finite = true;
    for (std::size_t k = 0; k < next.size(); ++k) {
      if (!std::isfinite(next[k]) || !std::isfinite(prev[k])) finite = false;
      diff = std::max(diff, std::abs(next[k] - prev[k]));
    }
    prev = std::move(next);
    if (finite && diff < tol) {
      out.converged = true;
      break;
    }
  }
  if (!out.converged && !std::isfinite(prev.back())) {
    throw SolverFailure("g2_tau: integration diverged");
  }
  out.g2 = std::move(prev);
  return out;
}

SteadyStateResult solve_fixed_cutoff(const SystemParams& params, int n_max) {
  const HilbertSpace space(n_max);
  const OperatorSet ops = build_operators(space);
  const Liouvillian liou = build_liouvillian(params, ops);

  SteadyStateResult res;
  res.rho = steady_state(liou);
  res.n_max_used = n_max;

  // Positivity: eigenvalues more negative than -1e-9 indicate a broken
  // solve; smaller negative values are round-off and tolerated unclipped.
  Eigen::SelfAdjointEigenSolver<Matrix> es(res.rho,
                                           Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9) {
    throw DegenerateSteadyState(
        "solve_fixed_cutoff: steady state has a significant negative eigenvalue");
  }

  const Observables obs = observables(res.rho, ops, params);
  res.n_s = obs.n_s;
  res.var_n = obs.var_n;
  res.t_a = obs.t_a;
  res.g2_0 = res.n_s > kCorrelationFloor
                 ? g2_zero(res.rho, ops)
                 : std::numeric_limits<double>::quiet_NaN();
  res.top_fock_population = top_two_layer_population(res.rho, space);
  return res;
}

SteadyStateResult solve_with_adaptive_cutoff(const SystemParams& params,
                                             const CutoffPolicy& policy) {
  params.validate();
  if (policy.start < 1 || policy.growth < 2 || policy.cap < policy.start) {
    throw InvalidParams("solve_with_adaptive_cutoff: bad policy");
  }
  if (params.eta == 0.0) {
    return solve_fixed_cutoff(params, 1);  // dark steady state |1,0><1,0|
  }

  int n = policy.start;
  SteadyStateResult current = solve_fixed_cutoff(params, n);
  while (true) {
    const int next = n * policy.growth;
    const bool pop_ok =
        current.top_fock_population < policy.top_population_threshold;
    if (next > policy.cap) {
      std::ostringstream msg;
      msg << "solve_with_adaptive_cutoff: cap " << policy.cap
          << " exceeded at n_max=" << n
          << " (top-layer population=" << current.top_fock_population
          << ", n_s=" << current.n_s << ")";
      throw TruncationFailure(msg.str());
    }
    const SteadyStateResult larger = solve_fixed_cutoff(params, next);
    if (pop_ok) {
      const double rel = std::abs(larger.n_s - current.n_s) /
                         std::max(larger.n_s, 1e-300);
      if (rel < 1e-8) return current;
    }
    n = next;
    current = larger;
  }
}

SteadyStateResult solve_for_sweep(const SystemParams& params,
                                  const CutoffPolicy& policy) {
  params.validate();
  if (params.eta == 0.0) return solve_fixed_cutoff(params, 1);
  int n = policy.start;
  while (true) {
    SteadyStateResult res = solve_fixed_cutoff(params, n);
    if (res.top_fock_population < policy.top_population_threshold) return res;
    n *= policy.growth;
    if (n > policy.cap) {
      throw TruncationFailure("solve_for_sweep: cutoff cap exceeded");
    }
  }
}

}  // namespace ceit
