#include <doctest.h>

#include <cmath>

#include "ceit/checks.hpp"
#include "ceit/errors.hpp"
#include "ceit/meanfield.hpp"

using namespace ceit;

namespace {

SystemParams bistable_point() {
  SystemParams p;
  p.delta_c = -0.48;
  p.u0 = 8.0;
  p.eta = 0.155;
  return p;
}

}  // namespace

TEST_CASE("expanded quintic coefficients match an independent expansion") {
  // Frozen values from a symbolic polynomial-convolution oracle at
  // delta_c=-0.48, u0=8, eta=0.155 (defaults otherwise).
  const QuinticCoeffs q = quintic_coeffs(bistable_point());
  const double expected[6] = {-0.071874232646559996, 29.852480980127353,
                              -1978.4793924414873,  29339.087934777599,
                              178946.33881599997,   232654.43839999998};
  for (int k = 0; k < 6; ++k) {
    CHECK(q.c[k] == doctest::Approx(expected[k]).epsilon(1e-12));
  }
}

TEST_CASE("quintic evaluation agrees with the cleared-denominator residual") {
  SystemParams p = bistable_point();
  const QuinticCoeffs q = quintic_coeffs(p);
  for (double n = 0.0; n <= 1.0; n += 0.07) {
    const double f = residual_F(n, p);
    CHECK(q.eval(n) == doctest::Approx(f).epsilon(1e-11));
  }
}

TEST_CASE("printed coefficient table differs from the expansion only in c1") {
  const CoeffComparison cmp = compare_printed_coeffs(bistable_point());
  CHECK(cmp.matches[0]);
  CHECK(!cmp.matches[1]);
  CHECK(cmp.matches[2]);
  CHECK(cmp.matches[3]);
  CHECK(cmp.matches[4]);
  CHECK(cmp.matches[5]);
  // The difference is exactly chi*Dc*(Dc - 1) in the n^1 coefficient.
  const SystemParams p = bistable_point();
  const QuinticCoeffs q = quintic_coeffs(p);
  const double delta = cmp.printed[1] - cmp.expanded[1];
  CHECK(delta == doctest::Approx(q.chi * p.delta_c * (1.0 - p.delta_c))
                     .epsilon(1e-9));
  // At delta_c = 1 (and at 0) the two forms coincide.
  SystemParams agree = p;
  agree.delta_c = 1.0;
  const CoeffComparison cmp1 = compare_printed_coeffs(agree);
  for (int k = 0; k < 6; ++k) CHECK(cmp1.matches[k]);
}

TEST_CASE("bistable window roots against frozen oracle values") {
  const auto roots = solve_steady_states(bistable_point());
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].n_s == doctest::Approx(0.0029637442935216392).epsilon(1e-9));
  CHECK(roots[1].n_s == doctest::Approx(0.01974127128285811).epsilon(1e-9));
  CHECK(roots[2].n_s == doctest::Approx(0.031125247153891165).epsilon(1e-9));
  CHECK(roots[0].stability == Stability::Stable);
  CHECK(roots[1].stability == Stability::Unstable);
  CHECK(roots[2].stability == Stability::Stable);
  for (const auto& fp : roots) {
    CHECK(fp.refined);
    CHECK(fp.residual <= 1e-9);
  }
}

TEST_CASE("single-root regime at the default operating point") {
  SystemParams p;  // u0 = 0, delta_c = 0: EIT resonance
  const auto roots = solve_steady_states(p);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].n_s == doctest::Approx(0.04).epsilon(1e-10));
  CHECK(roots[0].stability == Stability::Stable);
  // Back-substituted field amplitude is consistent with the photon number.
  CHECK(std::norm(roots[0].a_s) == doctest::Approx(roots[0].n_s).epsilon(1e-9));
}

TEST_CASE("eta=0 yields only the trivial dark fixed point") {
  SystemParams p = bistable_point();
  p.eta = 0.0;
  const auto roots = solve_steady_states(p);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].n_s == doctest::Approx(0.0));
  CHECK_THROWS_AS(transmission(0.0, p), UndefinedTransmission);
}

TEST_CASE("transmission normalization") {
  SystemParams p;
  CHECK(transmission(0.04, p) == doctest::Approx(4.0));
  p.eta = 0.2;
  CHECK(transmission(0.04, p) == doctest::Approx(1.0));
}

TEST_CASE("hysteresis traces bracket the bistable window and enclose area") {
  SystemParams p = bistable_point();
  const auto up = hysteresis_scan(p, SweepAxis::Eta, 0.02, 0.3, 201,
                                  ScanDirection::Up);
  const auto down = hysteresis_scan(p, SweepAxis::Eta, 0.02, 0.3, 201,
                                    ScanDirection::Down);
  REQUIRE(up.axis_values.size() == 201);
  REQUIRE(down.axis_values.size() == 201);
  CHECK(up.jump_indices.size() == 1);
  CHECK(down.jump_indices.size() == 1);
  // The upward jump (end of the lower branch) happens at larger eta than
  // the downward one (end of the upper branch).
  const double eta_up = up.axis_values[up.jump_indices[0]];
  const double eta_down = down.axis_values[down.jump_indices[0]];
  CHECK(eta_up > eta_down);
  // Both jumps sit inside the 3-root window located independently.
  CHECK(eta_up > 0.19);
  CHECK(eta_up < 0.23);
  CHECK(eta_down > 0.08);
  CHECK(eta_down < 0.11);
  CHECK(hysteresis_loop_area(up, down) > 0.0);
}

TEST_CASE("fault injection makes the coefficient-identity check fail") {
  CheckOptions opt;
  opt.quick = true;
  opt.corrupt_quintic_c1 = true;
  const auto results = run_property_checks(opt);
  REQUIRE(!results.empty());
  CHECK(!results.front().pass);  // the identity check is first
  // The untampered suite passes it.
  opt.corrupt_quintic_c1 = false;
  CHECK(run_property_checks(opt).front().pass);
}
