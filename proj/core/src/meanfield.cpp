#include "ceit/meanfield.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace ceit {

namespace {

using Complex = std::complex<double>;

struct Shorthand {
  double alpha, beta, chi;
};

Shorthand shorthand(const SystemParams& p) {
  const double a = p.delta_c + p.u0;
  return {a * a + p.kappa * p.kappa / 4.0, p.g * p.g * a,
          a * a * p.gamma13 * p.gamma13 / 4.0 +
              std::pow(p.g * p.g + p.kappa * p.gamma13 / 4.0, 2)};
}

// Small fixed-size polynomial helpers, ascending powers.
template <std::size_t N, std::size_t M>
std::array<double, N + M - 1> mul(const std::array<double, N>& a,
                                  const std::array<double, M>& b) {
  std::array<double, N + M - 1> out{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < M; ++j) out[i + j] += a[i] * b[j];
  return out;
}

template <std::size_t N, std::size_t M>
void add_into(std::array<double, N>& a, const std::array<double, M>& b,
              double scale = 1.0) {
  static_assert(M <= N);
  for (std::size_t i = 0; i < M; ++i) a[i] += scale * b[i];
}

// Back-substituted fields at photon number n, using the pole-free combined
// forms (the raw equations have a removable singularity at d = 0).
void fill_fields(const SystemParams& p, FixedPoint& fp) {
  const double n = fp.n_s;
  const double d = p.delta_c - p.u0 * n;
  const double u = d * d - p.omega * p.omega;
  const Complex i(0.0, 1.0);
  const Complex w = u - i * d * p.gamma13 / 2.0;
  const Complex den =
      (p.delta_c + p.u0 - i * p.kappa / 2.0) * w - p.g * p.g * d;
  fp.a_s = -p.eta * w / den;
  fp.sigma13 = -p.g * fp.a_s * d / w;
  fp.sigma12 = p.omega * p.g * fp.a_s / w;
}

}  // namespace

double residual_F(double n, const SystemParams& p) {
  const auto [alpha, beta, chi] = shorthand(p);
  const double d = p.delta_c - p.u0 * n;
  const double u = d * d - p.omega * p.omega;
  return n * (alpha * u * u - 2.0 * beta * d * u + chi * d * d) -
         p.eta * p.eta * (u * u + d * d * p.gamma13 * p.gamma13 / 4.0);
}

QuinticCoeffs quintic_coeffs(const SystemParams& p) {
  p.validate();
  QuinticCoeffs q;
  const auto sh = shorthand(p);
  q.alpha = sh.alpha;
  q.beta = sh.beta;
  q.chi = sh.chi;

  const std::array<double, 2> d{p.delta_c, -p.u0};
  auto u = mul(d, d);
  u[0] -= p.omega * p.omega;

  // G(n) = alpha u^2 - 2 beta d u + chi d^2  (degree 4)
  std::array<double, 5> G{};
  add_into(G, mul(u, u), sh.alpha);
  add_into(G, mul(d, u), -2.0 * sh.beta);
  add_into(G, mul(d, d), sh.chi);

  // F(n) = n G(n) - eta^2 [u^2 + d^2 g13^2/4]
  for (int k = 0; k < 5; ++k) q.c[k + 1] = G[k];
  const double e2 = p.eta * p.eta;
  std::array<double, 6> drive{};
  add_into(drive, mul(u, u), 1.0);
  add_into(drive, mul(d, d), p.gamma13 * p.gamma13 / 4.0);
  add_into(q.c, drive, -e2);
  return q;
}

std::array<double, 6> printed_coeffs(const SystemParams& p) {
  const auto [alpha, beta, chi] = shorthand(p);
  const double dc = p.delta_c, u0 = p.u0, e2 = p.eta * p.eta;
  const double g13 = p.gamma13;
  const double w2 = dc * dc - p.omega * p.omega;

  std::array<double, 6> c{};
  c[5] = alpha * std::pow(u0, 4);
  c[4] = (2.0 * beta - 4.0 * alpha * dc) * std::pow(u0, 3) -
         e2 * std::pow(u0, 4);
  c[3] = (2.0 * alpha * (3.0 * dc * dc - p.omega * p.omega) -
          6.0 * beta * dc + chi) *
             u0 * u0 +
         4.0 * e2 * dc * std::pow(u0, 3);
  c[2] = u0 * w2 * (2.0 * beta - 4.0 * alpha * dc) +
         (4.0 * beta * dc - 2.0 * chi) * u0 * dc -
         e2 * u0 * u0 *
             (2.0 * (3.0 * dc * dc - p.omega * p.omega) + g13 * g13 / 4.0);
  // Transcribed verbatim; the chi term here is chi*Dc where the expansion
  // gives chi*Dc^2.
  c[1] = alpha * w2 * w2 + (4.0 * e2 * dc * u0 - 2.0 * beta * dc) * w2 +
         (e2 * u0 * g13 * g13 / 2.0 + chi) * dc;
  c[0] = -e2 * (w2 * w2 + dc * dc * g13 * g13 / 4.0);
  return c;
}

CoeffComparison compare_printed_coeffs(const SystemParams& p) {
  CoeffComparison cmp{quintic_coeffs(p).c, printed_coeffs(p), {}};
  for (int k = 0; k < 6; ++k) {
    const double scale =
        std::max({1.0, std::abs(cmp.expanded[k]), std::abs(cmp.printed[k])});
    cmp.matches[k] = std::abs(cmp.expanded[k] - cmp.printed[k]) <= 1e-9 * scale;
  }
  return cmp;
}

Stability classify_stability(const SystemParams& p, const FixedPoint& fp) {
  // Linearized weak-excitation equations in (s12, s13, a, s12*, s13*, a*).
  // The U0 |a|^2 terms contribute derivatives with respect to both a and a*.
  const Complex i(0.0, 1.0);
  const double d = p.delta_c - p.u0 * std::norm(fp.a_s);
  const Complex ac = std::conj(fp.a_s);

  Eigen::MatrixXcd J = Eigen::MatrixXcd::Zero(6, 6);
  // d s12/dt = -i (Dc - U0|a|^2) s12 - i Omega s13
  J(0, 0) = -i * d;
  J(0, 1) = -i * p.omega;
  J(0, 2) = i * p.u0 * ac * fp.sigma12;
  J(0, 5) = i * p.u0 * fp.a_s * fp.sigma12;
  // d s13/dt = -i (Dc - i g13/2 - U0|a|^2) s13 - i g a - i Omega s12
  J(1, 0) = -i * p.omega;
  J(1, 1) = -i * d - p.gamma13 / 2.0;
  J(1, 2) = -i * p.g + i * p.u0 * ac * fp.sigma13;
  J(1, 5) = i * p.u0 * fp.a_s * fp.sigma13;
  // d a/dt = -i (Dc + U0 - i kappa/2) a - i g s13 - i eta
  J(2, 1) = -i * p.g;
  J(2, 2) = -i * (p.delta_c + p.u0) - p.kappa / 2.0;
  // Conjugate rows.
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 6; ++c) J(3 + r, (c + 3) % 6) = std::conj(J(r, c));

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(J, /*computeEigenvectors=*/false);
  double max_re = -1e300;
  for (int k = 0; k < 6; ++k) max_re = std::max(max_re, es.eigenvalues()(k).real());

  if (max_re < -kStabilityEps) return Stability::Stable;
  if (max_re > kStabilityEps) return Stability::Unstable;
  return Stability::Marginal;
}

std::vector<FixedPoint> solve_steady_states(const SystemParams& p) {
  p.validate();

  if (p.eta == 0.0) {
    FixedPoint fp;
    fp.n_s = 0.0;
    fp.residual = 0.0;
    fp.stability = classify_stability(p, fp);
    return {fp};
  }

  const QuinticCoeffs q = quintic_coeffs(p);

  double max_c = 0.0;
  for (double ck : q.c) max_c = std::max(max_c, std::abs(ck));
  if (max_c == 0.0) return {};  // fully degenerate; no information

  int degree = 0;
  for (int k = 5; k >= 1; --k) {
    if (std::abs(q.c[k]) > 1e-14 * max_c) {
      degree = k;
      break;
    }
  }
  if (degree == 0) return {};

  // Companion-matrix roots of the trimmed polynomial.
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(degree, degree);
  for (int k = 1; k < degree; ++k) comp(k, k - 1) = 1.0;
  for (int k = 0; k < degree; ++k) comp(k, degree - 1) = -q.c[k] / q.c[degree];
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);

  std::vector<double> roots;
  for (int k = 0; k < degree; ++k) {
    const Complex lam = es.eigenvalues()(k);
    if (std::abs(lam.imag()) >= 1e-7 * std::max(1.0, std::abs(lam.real())))
      continue;
    double n = lam.real();
    if (n < -1e-12) continue;
    n = std::max(n, 0.0);

    // Newton polishing on residual_F (derivative from the exact expansion).
    for (int it = 0; it < 60; ++it) {
      double fp_val = 0.0;
      for (int j = 5; j >= 1; --j) fp_val = fp_val * n + j * q.c[j];
      if (fp_val == 0.0) break;
      const double step = residual_F(n, p) / fp_val;
      n -= step;
      if (n < 0.0) n = 0.0;
      if (std::abs(step) <= 1e-15 * (1.0 + n)) break;
    }
    if (n >= 0.0) roots.push_back(n);
  }
  std::sort(roots.begin(), roots.end());

  // Merge near-coincident roots (fold degeneracy) and label them Marginal.
  std::vector<std::pair<double, bool>> merged;  // (n, was_merged)
  for (double n : roots) {
    if (!merged.empty() &&
        n - merged.back().first < 1e-8 * (1.0 + n)) {
      merged.back().first = 0.5 * (merged.back().first + n);
      merged.back().second = true;
    } else {
      merged.emplace_back(n, false);
    }
  }

  std::vector<FixedPoint> out;
  for (auto [n, was_merged] : merged) {
    FixedPoint fp;
    fp.n_s = n;
    fill_fields(p, fp);
    fp.residual = std::abs(residual_F(n, p));
    double scale = 1.0;
    double pw = 1.0;
    for (int k = 0; k <= 5; ++k) {
      scale = std::max(scale, std::abs(q.c[k]) * pw);
      pw *= n;
    }
    fp.refined = fp.residual <= 1e-9 * scale;
    fp.stability =
        was_merged ? Stability::Marginal : classify_stability(p, fp);
    out.push_back(fp);
  }
  return out;
}

double transmission(double n_s, const SystemParams& p) {
  if (p.eta == 0.0)
    throw UndefinedTransmission("transmission: eta = 0 (bare photon number vanishes)");
  return n_s * p.kappa * p.kappa / (p.eta * p.eta);
}

SystemParams with_axis_value(SystemParams p, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::Eta: p.eta = value; break;
    case SweepAxis::DeltaC: p.delta_c = value; break;
    case SweepAxis::U0: p.u0 = value; break;
    case SweepAxis::Omega: p.omega = value; break;
  }
  return p;
}

BranchTrace hysteresis_scan(const SystemParams& params, SweepAxis axis,
                            double lo, double hi, int resolution,
                            ScanDirection direction) {
  if (!(std::isfinite(lo) && std::isfinite(hi)) || resolution < 2)
    throw InvalidParams("hysteresis_scan: range must be finite, resolution >= 2");

  BranchTrace trace;
  trace.axis = axis;
  trace.direction = direction;

  const double step = (hi - lo) / (resolution - 1);
  double prev = -1.0;
  std::size_t prev_count = 0;
  for (int s = 0; s < resolution; ++s) {
    const int idx = direction == ScanDirection::Up ? s : resolution - 1 - s;
    const double v = lo + step * idx;
    const SystemParams p = with_axis_value(params, axis, v);

    std::vector<double> stable;
    for (const auto& fp : solve_steady_states(p))
      if (fp.stability == Stability::Stable) stable.push_back(fp.n_s);
    if (stable.empty()) {
      std::ostringstream msg;
      msg << "hysteresis_scan: no stable root at axis value " << v;
      throw NoStableRoot(msg.str());
    }

    double pick;
    if (prev < 0.0) {
      // Start on the branch continuous with the scan direction: lowest for
      // an up scan, highest for a down scan.
      pick = direction == ScanDirection::Up
                 ? *std::min_element(stable.begin(), stable.end())
                 : *std::max_element(stable.begin(), stable.end());
    } else {
      pick = stable.front();
      for (double n : stable)
        if (std::abs(n - prev) < std::abs(pick - prev)) pick = n;
      // A fold jump moves the trace far from the followed branch *and*
      // changes the stable-root count; steep-but-smooth growth does not.
      if (std::abs(pick - prev) > 0.2 * (pick + prev) + 1e-8 &&
          stable.size() != prev_count)
        trace.jump_indices.push_back(s);
    }
    trace.axis_values.push_back(v);
    trace.n_s.push_back(pick);
    prev = pick;
    prev_count = stable.size();
  }
  return trace;
}

double hysteresis_loop_area(const BranchTrace& up, const BranchTrace& down) {
  const std::size_t n = up.axis_values.size();
  if (down.axis_values.size() != n || n < 2)
    throw InvalidParams("hysteresis_loop_area: traces must share a grid");
  // Down trace runs high-to-low; align it with the up trace.
  double area = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double f0 = std::abs(up.n_s[k] - down.n_s[n - 1 - k]);
    const double f1 = std::abs(up.n_s[k + 1] - down.n_s[n - 2 - k]);
    area += 0.5 * (f0 + f1) *
            std::abs(up.axis_values[k + 1] - up.axis_values[k]);
  }
  return area;
}

}  // namespace ceit
