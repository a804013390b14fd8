#include <doctest.h>

#include <cmath>

#include "ceit/errors.hpp"
#include "ceit/hilbert.hpp"
#include "ceit/qme.hpp"

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

TEST_CASE("steady state at the EIT resonance against frozen oracle values") {
  // Dense-kron oracle, n_max = 10, defaults (u0=0, delta_c=0, eta=0.1).
  SystemParams p;
  const SteadyStateResult res = solve_fixed_cutoff(p, 10);
  CHECK(res.n_s == doctest::Approx(0.04).epsilon(1e-10));
  CHECK(res.g2_0 == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(res.var_n == doctest::Approx(0.04).epsilon(1e-10));
  REQUIRE(res.t_a.has_value());
  CHECK(*res.t_a == doctest::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("steady state near the quasi-dark peak against frozen oracle values") {
  SystemParams p;
  p.u0 = 8.0;
  p.delta_c = -0.7;
  const SteadyStateResult res = solve_fixed_cutoff(p, 10);
  CHECK(res.n_s == doctest::Approx(0.016635406514796842).epsilon(1e-10));
  CHECK(res.g2_0 == doctest::Approx(0.79812286211998162).epsilon(1e-9));
}

TEST_CASE("steady state inside the bistable window against frozen oracle values") {
  const SteadyStateResult res = solve_fixed_cutoff(bistable_point(), 10);
  CHECK(res.n_s == doctest::Approx(0.0079849235177116128).epsilon(1e-10));
  CHECK(res.g2_0 == doctest::Approx(6.4721238152417015).epsilon(1e-9));
  CHECK(res.var_n == doctest::Approx(0.0083338206796580803).epsilon(1e-9));
}

TEST_CASE("g2(tau) against a matrix-exponential oracle") {
  const SystemParams p = bistable_point();
  const HilbertSpace space(10);
  const OperatorSet ops = build_operators(space);
  const Liouvillian liou = build_liouvillian(p, ops);
  const Matrix rho = steady_state(liou);
  const G2Series series = g2_tau(rho, liou, ops, {0.0, 0.5, 2.0, 10.0});
  CHECK(series.converged);
  REQUIRE(series.g2.size() == 4);
  CHECK(series.g2[0] == doctest::Approx(6.4721238152417007).epsilon(1e-7));
  CHECK(series.g2[1] == doctest::Approx(6.7615478873571035).epsilon(1e-6));
  CHECK(series.g2[2] == doctest::Approx(6.5309732535146727).epsilon(1e-6));
  CHECK(series.g2[3] == doctest::Approx(6.2822756460151927).epsilon(1e-6));
}

TEST_CASE("g2(tau) rejects malformed grids") {
  const SystemParams p = bistable_point();
  const HilbertSpace space(6);
  const OperatorSet ops = build_operators(space);
  const Liouvillian liou = build_liouvillian(p, ops);
  const Matrix rho = steady_state(liou);
  CHECK_THROWS_AS(g2_tau(rho, liou, ops, {}), InvalidParams);
  CHECK_THROWS_AS(g2_tau(rho, liou, ops, {0.5, 1.0}), InvalidParams);
  CHECK_THROWS_AS(g2_tau(rho, liou, ops, {0.0, 1.0, 1.0}), InvalidParams);
}

TEST_CASE("adaptive cutoff settles and reports the cutoff used") {
  const SteadyStateResult res = solve_with_adaptive_cutoff(bistable_point());
  CHECK(res.n_max_used >= 10);
  CHECK(res.top_fock_population < 1e-8);
  // Agrees with a direct solve at the same cutoff.
  const SteadyStateResult direct =
      solve_fixed_cutoff(bistable_point(), res.n_max_used);
  CHECK(res.n_s == doctest::Approx(direct.n_s).epsilon(1e-12));
}

TEST_CASE("adaptive cutoff with eta=0 returns the dark state") {
  SystemParams p = bistable_point();
  p.eta = 0.0;
  const SteadyStateResult res = solve_with_adaptive_cutoff(p);
  CHECK(res.n_s == doctest::Approx(0.0));
  CHECK(std::isnan(res.g2_0));  // correlation undefined without photons
  CHECK(!res.t_a.has_value());
}

TEST_CASE("cutoff cap escalation throws TruncationFailure") {
  SystemParams p;
  p.eta = 0.6;  // needs well over n_max = 4 at the EIT resonance
  CutoffPolicy tight;
  tight.start = 2;
  tight.growth = 2;
  tight.cap = 4;
  CHECK_THROWS_AS(solve_with_adaptive_cutoff(p, tight), TruncationFailure);
  CHECK_THROWS_AS(solve_for_sweep(p, tight), TruncationFailure);
}

TEST_CASE("bad cutoff policies are rejected") {
  CutoffPolicy bad;
  bad.start = 0;
  CHECK_THROWS_AS(solve_with_adaptive_cutoff(SystemParams{}, bad),
                  InvalidParams);
  bad = CutoffPolicy{};
  bad.cap = 5;  // below start
  CHECK_THROWS_AS(solve_with_adaptive_cutoff(SystemParams{}, bad),
                  InvalidParams);
}

TEST_CASE("g2_zero guards against a vanishing photon number") {
  SystemParams p;
  p.eta = 0.0;
  const HilbertSpace space(2);
  const OperatorSet ops = build_operators(space);
  const Liouvillian liou = build_liouvillian(p, ops);
  const Matrix rho = steady_state(liou);
  CHECK_THROWS_AS(g2_zero(rho, ops), UndefinedCorrelation);
}
