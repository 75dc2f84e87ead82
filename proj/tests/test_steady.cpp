#include "catch_amalgamated.hpp"

#include <cmath>

#include "grashof/fixtures.hpp"
#include "grashof/steady.hpp"

using namespace grashof;
using Catch::Matchers::WithinRel;

namespace {

ShearFamilyConfig single_shear() { return ShearFamilyConfig{{{2, 1.0}}}; }

}  // namespace

TEST_CASE("Stokes problem is solved exactly at zero alpha", "[steady]") {
  const SpectralField g = random_field(4, 5);
  const SolveReport r = solve_steady({g, 0.0, 4}, SpectralField(4));
  REQUIRE(r.converged());
  REQUIRE(norm_H(r.solution - inverse_stokes(g)) <= 1e-13 * norm_H(g));
}

TEST_CASE("Newton recovers the manufactured shear solution", "[steady]") {
  const ShearFamilyConfig cfg = single_shear();
  for (int n : {1, 5, 20}) {
    const ShearSample s = shear_family(cfg, n);
    const int N = cfg.truncation() + 1;
    for (unsigned long long seed : {1ull, 2ull, 3ull}) {
      const SpectralField start = s.v_n + (0.01 * norm_H(s.v_n)) * random_field(N, seed);
      const SolveReport r = solve_steady({s.g_n, s.alpha, N}, start);
      REQUIRE(r.converged());
      REQUIRE(norm_H(stokes(r.solution - s.v_n)) <= 1e-10 * norm_H(stokes(s.v_n)));
    }
  }
}

TEST_CASE("large perturbations can reach a second steady branch", "[steady]") {
  const ShearFamilyConfig cfg = single_shear();
  const ShearSample s = shear_family(cfg, 20);
  const SpectralField start = s.v_n + (0.05 * norm_H(s.v_n)) * random_field(2, 1);
  const SolveReport r = solve_steady({s.g_n, s.alpha, 2}, start);
  REQUIRE(r.converged());
  REQUIRE(norm_H(stokes(r.solution - s.v_n)) > 1e-3 * norm_H(stokes(s.v_n)));
  REQUIRE(r.bound_check <= 1.0 + 1e-10);
}

TEST_CASE("Newton converges quadratically near the solution", "[steady]") {
  const ShearFamilyConfig cfg = single_shear();
  const ShearSample s = shear_family(cfg, 3);
  const SpectralField start = s.v_n + 0.01 * norm_H(s.v_n) * random_field(3, 9);
  SolverOptions opts;
  opts.tol = 1e-15;
  const SolveReport r = solve_steady({s.g_n, s.alpha, 3}, start, opts);
  const auto& h = r.residual_history;
  REQUIRE(h.size() >= 3);
  // Once the residual is small, each step at least squares it up to a constant.
  bool quadratic_seen = false;
  for (size_t i = 1; i + 1 < h.size(); ++i) {
    if (h[i] < 1e-3 && h[i + 1] > 1e-14) {
      REQUIRE(h[i + 1] <= 1e3 * h[i] * h[i]);
      quadratic_seen = true;
    }
  }
  REQUIRE((quadratic_seen || h.back() <= 1e-14));
}

TEST_CASE("solutions satisfy the a priori bounds", "[steady][property]") {
  for (unsigned long long seed = 1; seed <= 4; ++seed) {
    const SpectralField g = random_field(4, seed);
    const std::vector<double> alphas = {0.5, 1.0, 2.0, 4.0};
    const auto reports = sweep(alphas, {g}, 4);
    for (const auto& r : reports) {
      REQUIRE(r.converged());
      REQUIRE(norm_H(stokes(r.solution)) <= norm_H(g) * (1.0 + 1e-10));
      REQUIRE(norm_V(r.solution) <= norm_H(g) * (1.0 + 1e-10));
      REQUIRE(r.bound_check <= 1.0 + 1e-10);
      REQUIRE(r.energy_check <= 1.0 + 1e-10);
    }
  }
}

TEST_CASE("sweeps are deterministic", "[steady]") {
  const SpectralField g = random_field(3, 21);
  const auto a = sweep({1.0, 2.0, 3.0}, {g}, 3);
  const auto b = sweep({1.0, 2.0, 3.0}, {g}, 3);
  for (size_t i = 0; i < a.size(); ++i) {
    REQUIRE(norm_H(a[i].solution - b[i].solution) == 0.0);
    REQUIRE(a[i].newton_iters == b[i].newton_iters);
  }
}

TEST_CASE("sweep follows the shear family forcing", "[steady]") {
  const ShearFamilyConfig cfg = single_shear();
  std::vector<double> alphas;
  std::vector<SpectralField> forces;
  std::vector<ShearSample> samples;
  for (int n = 1; n <= 8; ++n) {
    samples.push_back(shear_family(cfg, n));
    alphas.push_back(samples.back().alpha);
    forces.push_back(samples.back().g_n);
  }
  const auto reports = sweep(alphas, forces, cfg.truncation());
  for (size_t i = 0; i < reports.size(); ++i)
    REQUIRE(norm_H(stokes(reports[i].solution - samples[i].v_n)) <= 1e-10 * norm_H(stokes(samples[i].v_n)));
}

TEST_CASE("sweep reports where continuation breaks", "[steady]") {
  const SpectralField g = random_field(3, 2);
  SweepOptions opts;
  opts.solver.max_iters = 0;
  opts.max_substep_depth = 1;
  try {
    sweep({1.0, 2.0}, {g}, 3, opts);
    FAIL("expected a continuation failure");
  } catch (const ContinuationError& e) {
    REQUIRE(e.index == 0);
    REQUIRE_FALSE(e.report.converged());
  }
}

TEST_CASE("invalid problems are rejected", "[steady]") {
  const SpectralField g = random_field(3, 2);
  SECTION("negative alpha") { REQUIRE_THROWS_AS(solve_steady({g, -1.0, 3}, SpectralField(3)), std::invalid_argument); }
  SECTION("zero forcing") {
    REQUIRE_THROWS_AS(solve_steady({SpectralField(3), 1.0, 3}, SpectralField(3)), std::invalid_argument);
  }
  SECTION("forcing beyond the box") {
    REQUIRE_THROWS_AS(solve_steady({random_field(5, 1), 1.0, 3}, SpectralField(3)), std::invalid_argument);
  }
  SECTION("decreasing sweep") { REQUIRE_THROWS_AS(sweep({2.0, 1.0}, {g}, 3), std::invalid_argument); }
}

TEST_CASE("residual vanishes on manufactured data", "[steady]") {
  const SpectralField v = random_field(3, 4);
  const SpectralField g = manufactured_force(v, 2.5);
  REQUIRE(norm_H(residual(v, {g, 2.5, 6})) <= 1e-14 * norm_H(g));
  REQUIRE_THAT(norm_H(g - stokes(v)), WithinRel(2.5 * norm_H(bilinear_B(v, v)), 1e-13));
}
