#pragma once

#include <array>
#include <complex>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace grashof {

using cplx = std::complex<double>;
using Vec2c = std::array<cplx, 2>;

struct WaveIndex {
  int kx = 0;
  int ky = 0;

  auto operator<=>(const WaveIndex&) const = default;
  int norm2() const { return kx * kx + ky * ky; }
  int radius() const;
  WaveIndex operator-() const { return {-kx, -ky}; }
  // Half-plane representative of the pair {k, -k}.
  bool is_representative() const { return kx > 0 || (kx == 0 && ky > 0); }
};

class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Divergence-free, real, zero-mean field on [0, 2pi]^2:
//   u(x) = sum_k c(k) exp(i k.x),  c(-k) = conj(c(k)).
// Both members of every conjugate pair are stored.
class SpectralField {
 public:
  using ModeMap = std::map<WaveIndex, Vec2c>;

  SpectralField() = default;
  explicit SpectralField(int truncation);

  // Takes coefficients that already satisfy reality and divergence-free
  // constraints; validates both and completes missing conjugates.
  static SpectralField from_modes(int truncation, const ModeMap& modes);

  int truncation() const { return truncation_; }
  const ModeMap& modes() const { return modes_; }
  Vec2c coeff(const WaveIndex& k) const;
  bool empty() const { return modes_.empty(); }
  // Largest max(|kx|,|ky|) carrying a nonzero coefficient.
  int max_wavenumber() const;

  SpectralField with_truncation(int truncation) const;

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(double s);

  friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
  friend SpectralField operator*(double s, SpectralField a) { return a *= s; }
  friend SpectralField operator*(SpectralField a, double s) { return a *= s; }

  // Drops modes with |kx| or |ky| above the radius.
  SpectralField truncated(int radius) const;
  // Removes exact zeros left behind by cancellation.
  SpectralField pruned(double abs_tol = 0.0) const;

 private:
  friend SpectralField make_field_unchecked(int truncation, ModeMap modes);
  int truncation_ = 0;
  ModeMap modes_;
};

SpectralField make_field_unchecked(int truncation, SpectralField::ModeMap modes);

// Largest relative violation of c(-k) = conj(c(k)) over stored modes.
double reality_defect(const SpectralField::ModeMap& modes);
// Largest |k . c(k)| / (|k| |c(k)|) over stored modes.
double divergence_defect(const SpectralField& u);

SpectralField leray_project(const SpectralField::ModeMap& raw, int truncation = -1);

SpectralField apply_fractional(const SpectralField& u, double s);
SpectralField stokes(const SpectralField& u);
double norm_Ds(const SpectralField& u, double s);
double norm_H(const SpectralField& u);
double norm_V(const SpectralField& u);
double norm_Vdual(const SpectralField& u);
double inner_H(const SpectralField& u, const SpectralField& v);
// <A^s u, A^s v>, the inner product behind norm_Ds.
double inner_Ds(const SpectralField& u, const SpectralField& v, double s);
// Plain coefficient sum sum_k |c(k)|^2 without the domain factor.
double coefficient_energy(const SpectralField& u);

// Area of the periodic cell; |u|^2 = area * sum_k |c(k)|^2.
double domain_area();

struct BilinearOptions {
  // Galerkin closure: drop output modes beyond this radius (-1 keeps all).
  int retruncate = -1;
};

SpectralField bilinear_B(const SpectralField& u, const SpectralField& v,
                         const BilinearOptions& opts = {});
SpectralField bilinear_Bs(const SpectralField& u, const SpectralField& v,
                          const BilinearOptions& opts = {});

struct EigenMode {
  WaveIndex k;
  int polarization = 0;  // 0: cosine, 1: sine
  int eigenvalue = 0;    // |k|^2
};

// First `count` eigenmodes in ascending |k|^2, then (kx, ky), then polarization.
std::vector<EigenMode> eigen_modes(int count);
EigenMode eigen_mode(int j);
SpectralField eigenfunction(const EigenMode& mode);
SpectralField eigenfunction(int j);

// Unit vector perpendicular to k, the only admissible polarization.
std::array<double, 2> polarization_direction(const WaveIndex& k);

// Random divergence-free field with every mode in the box of radius N,
// coefficients drawn from a normal law damped by |k|^-decay.
SpectralField random_field(int N, unsigned long long seed, double decay = 1.0);

}  // namespace grashof
