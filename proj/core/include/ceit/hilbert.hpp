#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "ceit/errors.hpp"
#include "ceit/params.hpp"

namespace ceit {

using Matrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

// Truncated Hilbert space: three atomic levels {|1>,|2>,|3>} tensor Fock
// states {|0>..|n_max>}. Basis ordering is atom-major (atom index slow,
// Fock index fast), so index(atom, n) = atom*(n_max+1) + n with
// atom in {0,1,2} standing for |1>,|2>,|3>. This keeps the atomic 3x3
// blocks contiguous and is relied on everywhere.
struct HilbertSpace {
  int n_max;

  explicit HilbertSpace(int n_max_) : n_max(n_max_) {
    if (n_max < 0) throw InvalidParams("HilbertSpace: n_max must be >= 0");
  }

  int fock_dim() const { return n_max + 1; }
  int dim() const { return 3 * (n_max + 1); }
  int index(int atom, int n) const { return atom * (n_max + 1) + n; }
};

// Dense cavity and atomic operators on the truncated space.
struct OperatorSet {
  int n_max = 0;
  Matrix a;      // annihilation
  Matrix a_dag;  // creation
  // sigma[i][j] = |i+1><j+1| on the atomic factor (0-based storage).
  std::array<std::array<Matrix, 3>, 3> sigma;

  int dim() const { return 3 * (n_max + 1); }
  const Matrix& sig(int i, int j) const { return sigma[i - 1][j - 1]; }
};

OperatorSet build_operators(const HilbertSpace& space);

// H = Dc (a^dag a + s33 + s22) + g (a^dag s13 + a s31)
//   + Omega (s23 + s32) + U0 a^dag a s11 + eta (a^dag + a)
Matrix build_hamiltonian(const SystemParams& params, const OperatorSet& ops);

}  // namespace ceit
