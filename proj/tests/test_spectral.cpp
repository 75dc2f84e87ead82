#include "catch_amalgamated.hpp"

#include <cmath>
#include <numbers>

#include "grashof/spectral.hpp"

using namespace grashof;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double pi = std::numbers::pi;

struct PointValue {
  double u[2];
  double grad[2][2];  // grad[i][j] = d u_i / d x_j
};

PointValue evaluate(const SpectralField& f, double x, double y) {
  PointValue p{};
  for (const auto& [k, c] : f.modes()) {
    const cplx e = std::exp(cplx(0.0, k.kx * x + k.ky * y));
    for (int i = 0; i < 2; ++i) {
      p.u[i] += std::real(c[i] * e);
      p.grad[i][0] += std::real(cplx(0.0, k.kx) * c[i] * e);
      p.grad[i][1] += std::real(cplx(0.0, k.ky) * c[i] * e);
    }
  }
  return p;
}

// Trilinear form int (u . grad) v . w by grid quadrature, exact for
// trigonometric polynomials whose product degree stays below the grid size.
double trilinear_quadrature(const SpectralField& u, const SpectralField& v, const SpectralField& w, int grid) {
  double sum = 0.0;
  const double h = 2.0 * pi / grid;
  for (int a = 0; a < grid; ++a)
    for (int b = 0; b < grid; ++b) {
      const double x = a * h, y = b * h;
      const PointValue pu = evaluate(u, x, y), pv = evaluate(v, x, y), pw = evaluate(w, x, y);
      for (int i = 0; i < 2; ++i) sum += (pu.u[0] * pv.grad[i][0] + pu.u[1] * pv.grad[i][1]) * pw.u[i];
    }
  return sum * h * h;
}

SpectralField shear_x(int m, double amp) {
  // (amp sin(m y), 0)
  return SpectralField::from_modes(m, {{{0, m}, {cplx(0, -amp / 2), 0.0}}, {{0, -m}, {cplx(0, amp / 2), 0.0}}});
}

}  // namespace

TEST_CASE("norms follow the 4 pi^2 convention", "[spectral]") {
  SECTION("unit shear sin y") {
    const SpectralField u = shear_x(1, 1.0);
    REQUIRE_THAT(norm_H(u), WithinRel(std::sqrt(2.0) * pi, 1e-15));
    REQUIRE_THAT(norm_V(u), WithinRel(std::sqrt(2.0) * pi, 1e-15));
    REQUIRE_THAT(norm_H(stokes(u)), WithinRel(std::sqrt(2.0) * pi, 1e-15));
  }

  SECTION("sin 3y scales with the wavenumber power") {
    const SpectralField u = shear_x(3, 1.0);
    REQUIRE_THAT(norm_V(u), WithinRel(3.0 * std::sqrt(2.0) * pi, 1e-15));
    REQUIRE_THAT(norm_Vdual(u), WithinRel(std::sqrt(2.0) * pi / 3.0, 1e-15));
    REQUIRE_THAT(norm_Ds(u, 1.0), WithinRel(9.0 * std::sqrt(2.0) * pi, 1e-15));
  }

  SECTION("inner product polarizes the norm") {
    const SpectralField a = random_field(5, 11), b = random_field(5, 12);
    const double lhs = norm_Ds(a + b, 0.3) * norm_Ds(a + b, 0.3) - norm_Ds(a - b, 0.3) * norm_Ds(a - b, 0.3);
    REQUIRE_THAT(inner_Ds(a, b, 0.3), WithinRel(lhs / 4.0, 1e-12));
  }
}

TEST_CASE("fields reject non-physical coefficients", "[spectral]") {
  SECTION("divergent coefficient") {
    REQUIRE_THROWS_AS(SpectralField::from_modes(2, {{{1, 0}, {cplx(1.0), 0.0}}}), MalformedInput);
  }

  SECTION("zero mode") {
    REQUIRE_THROWS_AS(SpectralField::from_modes(2, {{{0, 0}, {cplx(1.0), 0.0}}}), MalformedInput);
  }

  SECTION("missing conjugate is completed") {
    const SpectralField u = SpectralField::from_modes(2, {{{0, 1}, {cplx(0, -0.5), 0.0}}});
    REQUIRE(u.modes().size() == 2);
    REQUIRE(reality_defect(u.modes()) == 0.0);
  }
}

TEST_CASE("Leray projection removes the gradient part", "[spectral]") {
  // (0, cos x sin y) has a gradient component along k.
  SpectralField::ModeMap raw;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1}) raw[{sx, sy}] = {0.0, cplx(0.0, -0.25 * sy)};
  const SpectralField p = leray_project(raw, 2);
  REQUIRE(divergence_defect(p) < 1e-15);
  const SpectralField pp = leray_project(p.modes(), 2);
  REQUIRE(norm_H(pp - p) < 1e-15);
}

TEST_CASE("bilinear form matches physical-space quadrature", "[spectral][property]") {
  for (unsigned long long seed = 1; seed <= 4; ++seed) {
    const SpectralField u = random_field(3, seed), v = random_field(3, seed + 100), w = random_field(3, seed + 200);
    const double spectral = inner_H(bilinear_B(u, v), w);
    const double quadrature = trilinear_quadrature(u, v, w, 12);
    REQUIRE_THAT(spectral, WithinAbs(quadrature, 1e-11 * (1.0 + std::abs(quadrature))));
  }
}

TEST_CASE("bilinear form identities on random fields", "[spectral][property]") {
  for (unsigned long long seed = 1; seed <= 40; ++seed) {
    const SpectralField u = random_field(8, seed), v = random_field(8, seed + 1000);
    const double nu = norm_V(u), nv = norm_V(v);
    REQUIRE(std::abs(inner_H(bilinear_B(u, v), v)) <= 1e-12 * nu * nv * nv);
    REQUIRE(std::abs(inner_H(bilinear_B(u, u), stokes(u))) <= 1e-12 * nu * nu * norm_H(stokes(u)));
    const SpectralField bs = bilinear_Bs(u, v);
    REQUIRE(norm_H(bs - bilinear_B(u, v) - bilinear_B(v, u)) <= 1e-14 * norm_H(bs));
    REQUIRE(divergence_defect(bilinear_B(u, v)) < 1e-12);
  }
}

TEST_CASE("unidirectional shear is a fixed point of the advection", "[spectral]") {
  const SpectralField u = shear_x(1, 1.0) + 0.5 * shear_x(3, 1.0);
  REQUIRE(norm_H(bilinear_B(u, u)) == 0.0);
}

TEST_CASE("Poincare chain holds on random fields", "[spectral][property]") {
  for (unsigned long long seed = 1; seed <= 50; ++seed) {
    const SpectralField u = random_field(6, seed, 0.5);
    REQUIRE(norm_Vdual(u) <= norm_H(u));
    REQUIRE(norm_H(u) <= norm_V(u));
    REQUIRE(norm_V(u) <= norm_H(stokes(u)));
  }
}

TEST_CASE("eigenfunctions are ordered and orthonormal", "[spectral]") {
  const auto modes = eigen_modes(40);
  REQUIRE(modes.size() == 40);

  SECTION("ascending eigenvalues, starting at one") {
    REQUIRE(modes.front().eigenvalue == 1);
    for (size_t j = 1; j < modes.size(); ++j) REQUIRE(modes[j - 1].eigenvalue <= modes[j].eigenvalue);
  }

  SECTION("first shell has four modes, second has four") {
    REQUIRE(modes[3].eigenvalue == 1);
    REQUIRE(modes[4].eigenvalue == 2);
    REQUIRE(modes[7].eigenvalue == 2);
    REQUIRE(modes[8].eigenvalue == 4);
  }

  SECTION("orthonormal in H and eigen for the Stokes operator") {
    for (int i = 0; i < 12; ++i) {
      const SpectralField fi = eigenfunction(modes[i]);
      REQUIRE_THAT(norm_H(fi), WithinRel(1.0, 1e-15));
      REQUIRE(norm_H(stokes(fi) - static_cast<double>(modes[i].eigenvalue) * fi) < 1e-15);
      for (int j = 0; j < i; ++j) REQUIRE(std::abs(inner_H(fi, eigenfunction(modes[j]))) < 1e-15);
    }
  }
}

TEST_CASE("fractional powers compose", "[spectral]") {
  const SpectralField u = random_field(5, 7);
  const SpectralField a = apply_fractional(apply_fractional(u, 0.25), 0.5);
  REQUIRE(norm_H(a - apply_fractional(u, 0.75)) <= 1e-14 * norm_H(a));
  REQUIRE_THAT(norm_Ds(u, 0.75), WithinRel(norm_H(apply_fractional(u, 0.75)), 1e-14));
}

TEST_CASE("random fields are reproducible", "[spectral]") {
  REQUIRE(norm_H(random_field(4, 3) - random_field(4, 3)) == 0.0);
  REQUIRE(norm_H(random_field(4, 3) - random_field(4, 4)) > 0.0);
}
