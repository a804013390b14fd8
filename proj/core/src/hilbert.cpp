#include "ceit/hilbert.hpp"

#include <cmath>

namespace ceit {

OperatorSet build_operators(const HilbertSpace& space) {
  const int nf = space.fock_dim();
  const int d = space.dim();

  OperatorSet ops;
  ops.n_max = space.n_max;
  ops.a = Matrix::Zero(d, d);

  // a = I_atom (x) a_fock, with a_fock |n> = sqrt(n) |n-1>.
  for (int atom = 0; atom < 3; ++atom) {
    for (int n = 1; n < nf; ++n) {
      ops.a(space.index(atom, n - 1), space.index(atom, n)) = std::sqrt(double(n));
    }
  }
  ops.a_dag = ops.a.adjoint();

  // sigma_ij = |i><j| (x) I_fock.
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Matrix s = Matrix::Zero(d, d);
      for (int n = 0; n < nf; ++n) {
        s(space.index(i, n), space.index(j, n)) = 1.0;
      }
      ops.sigma[i][j] = std::move(s);
    }
  }
  return ops;
}

Matrix build_hamiltonian(const SystemParams& params, const OperatorSet& ops) {
  params.validate();
  const int d = ops.dim();
  if (ops.a.rows() != d || ops.a.cols() != d) {
    throw DimensionMismatch("build_hamiltonian: operator set is inconsistent");
  }

  const Matrix num = ops.a_dag * ops.a;
  Matrix h = params.delta_c * (num + ops.sig(3, 3) + ops.sig(2, 2));
  h += params.g * (ops.a_dag * ops.sig(1, 3) + ops.a * ops.sig(3, 1));
  h += params.omega * (ops.sig(2, 3) + ops.sig(3, 2));
  h += params.u0 * num * ops.sig(1, 1);
  h += params.eta * (ops.a_dag + ops.a);
  return h;
}

}  // namespace ceit
