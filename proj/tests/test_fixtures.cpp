#include "catch_amalgamated.hpp"

#include <cmath>
#include <numbers>

#include "grashof/fixtures.hpp"
#include "grashof/steady.hpp"

using namespace grashof;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const double root2pi = std::numbers::sqrt2 * std::numbers::pi;

std::vector<int> range(int a, int b) {
  std::vector<int> v;
  for (int n = a; n <= b; ++n) v.push_back(n);
  return v;
}

}  // namespace

TEST_CASE("shear family constants", "[fixtures]") {
  SECTION("single coefficient c_2 = 1") {
    const ShearFamilyConfig cfg{{{2, 1.0}}};
    // 2^4 + (1/2) * 3^2 / 5
    REQUIRE_THAT(cfg.cstar() * cfg.cstar(), WithinRel(16.9, 1e-15));
    REQUIRE_THAT(cfg.mu0(), WithinRel(1.0 / (root2pi * std::sqrt(16.9)), 1e-15));
    REQUIRE_THAT(cfg.alpha(3), WithinRel(root2pi * std::sqrt(1.0 + 16.9 * 9.0), 1e-15));
    REQUIRE_THAT(cfg.shear_norm_V(), WithinRel(2.0 * root2pi, 1e-15));
  }

  SECTION("alpha_n is the norm of the projected forcing") {
    const ShearFamilyConfig cfg{{{2, 1.0}, {5, -0.3}}};
    for (int n : {1, 4, 9}) {
      const ShearSample s = shear_family(cfg, n);
      REQUIRE_THAT(norm_H(s.g_n), WithinRel(1.0, 1e-13));
    }
  }

  SECTION("n / alpha_n approaches mu0") {
    const ShearFamilyConfig cfg{{{2, 1.0}}};
    const double far = 1e6;
    REQUIRE_THAT(far / cfg.alpha(1000000), WithinRel(cfg.mu0(), 1e-12));
  }

  SECTION("invalid coefficients") {
    REQUIRE_THROWS_AS((ShearFamilyConfig{{{1, 1.0}}}.validate()), std::invalid_argument);
    REQUIRE_THROWS_AS((ShearFamilyConfig{{{2, 0.0}}}.validate()), std::invalid_argument);
    REQUIRE_THROWS_AS(ShearFamilyConfig{}.validate(), std::invalid_argument);
  }
}

TEST_CASE("shear family expansion terms", "[fixtures]") {
  const ShearFamilyConfig cfg{{{2, 1.0}, {3, 0.5}}};
  for (int n : {1, 2, 7, 30}) {
    const ShearSample s = shear_family(cfg, n);
    REQUIRE_THAT(s.gamma1, WithinRel(root2pi / s.alpha, 1e-15));
    REQUIRE_THAT(norm_V(s.w1), WithinRel(1.0, 1e-15));
    REQUIRE_THAT(norm_V(s.w2), WithinRel(1.0, 1e-15));
    // Direct form of the second coefficient, fine while n / alpha_n is far from mu0.
    const double direct = cfg.shear_norm_V() * (s.mu0 - n / s.alpha);
    REQUIRE_THAT(s.gamma2, WithinRel(direct, 1e-8));
    REQUIRE(norm_V(s.v + s.gamma1 * s.w1 + s.gamma2 * s.w2 - s.v_n) <= 1e-13 * norm_V(s.v_n));
    REQUIRE(norm_H(residual(s.v_n, {s.g_n, s.alpha, cfg.truncation()})) <= 1e-13);
  }
}

TEST_CASE("shear family forcing converges to the limit forcing", "[fixtures]") {
  SECTION("c_2 = 1") {
    const ShearFamilyConfig cfg{{{2, 1.0}}};
    double prev = INFINITY;
    for (int n : {10, 100, 1000, 10000}) {
      const ShearSample s = shear_family(cfg, n);
      const double err = norm_H(s.g_n - s.g_limit);
      REQUIRE(err < prev);
      prev = err;
    }
    REQUIRE(prev < 1e-4);
  }

  SECTION("c_2 = 2 carries the coefficient into the limit") {
    const ShearFamilyConfig cfg{{{2, 2.0}}};
    const ShearSample s = shear_family(cfg, 100000);
    REQUIRE(norm_H(s.g_n - s.g_limit) < 1e-4);

    // The same limit with the coefficient dropped from the cross terms misses.
    const ShearFamilyConfig unit{{{2, 1.0}}};
    const ShearSample u = shear_family(unit, 100000);
    const SpectralField dropped = (cfg.mu0() / unit.mu0()) * u.g_limit;
    REQUIRE(norm_H(s.g_n - dropped) > 0.1);
  }

  SECTION("limit forcing is reproduced by the limit equation") {
    const ShearFamilyConfig cfg{{{2, 1.0}, {4, -0.25}}};
    const ShearSample s = shear_family(cfg, 1);
    const SpectralField lhs = stokes(s.v) + root2pi * bilinear_Bs(s.v, s.w1);
    REQUIRE(norm_H(lhs - s.g_limit) <= 1e-14 * norm_H(s.g_limit));
  }
}

TEST_CASE("eigen cascade closed form", "[fixtures]") {
  SECTION("coefficients") {
    for (int n = 1; n <= 6; ++n) {
      const EigenCascadeSample s = eigen_cascade(n, 32);
      for (int k = 1; k <= 3; ++k) {
        const double nk = n;
        REQUIRE_THAT(s.unitary_gammas[k - 1], WithinRel(std::exp(-k * nk - nk * nk), 1e-15));
        REQUIRE_THAT(s.degenerate_gammas[k - 1], WithinRel(std::exp(-k * nk), 1e-15));
        REQUIRE(norm_H(s.unitary_directions[k - 1] - eigenfunction(k)) == 0.0);
      }
    }
  }

  SECTION("leading component dominates") {
    const EigenCascadeSample s = eigen_cascade(2, 32);
    REQUIRE_THAT(inner_H(s.v_n, eigenfunction(1)), WithinRel(std::exp(-6.0), 1e-15));
    REQUIRE_THAT(inner_H(s.v_n, eigenfunction(2)), WithinRel(std::exp(-8.0), 1e-15));
  }

  SECTION("index and truncation guards") {
    REQUIRE_THROWS_AS(eigen_cascade(7, 32), std::out_of_range);
    REQUIRE_THROWS_AS(eigen_cascade(0, 32), std::out_of_range);
    REQUIRE_THROWS_AS(eigen_cascade(1, kCascadeMinTruncation - 1), std::invalid_argument);
  }

  SECTION("both expansion forms verify") {
    const auto ns = range(1, 6);
    const ExpansionResult u = eigen_cascade_unitary(ns, 32);
    REQUIRE(u.kind == ExpansionKind::infinite_unitary);
    REQUIRE(u.depth_capped);
    const ExpansionResult d = eigen_cascade_degenerate(ns, 32);
    REQUIRE(d.degenerate_N == 0);
    REQUIRE(verify_expansion(u, eigen_cascade_sequence(ns, 32)).all_passed());
    REQUIRE(verify_expansion(d, eigen_cascade_sequence(ns, 32)).all_passed());
  }
}
