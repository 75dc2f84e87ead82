#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "grashof/expansion.hpp"
#include "grashof/spectral.hpp"

namespace grashof {

class FixtureIntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Manufactured shear family on the unit-viscosity torus:
//   u_n = (sin y, n sum_m c_m sin mx),  v_n = u_n / alpha_n,
// with alpha_n = |P F_n| and g_n = P F_n / alpha_n.
struct ShearFamilyConfig {
  std::map<int, double> coeffs;  // m >= 2 -> c_m, finitely many, not all zero

  void validate() const;
  int truncation() const;
  double cstar() const;
  double mu0() const;
  double alpha(int n) const;
  // Norm of (0, sum_m c_m sin mx) in V.
  double shear_norm_V() const;
};

struct ShearSample {
  int n = 0;
  double alpha = 0.0;
  SpectralField v_n;
  SpectralField g_n;
  SpectralField v;        // limit
  double gamma1 = 0.0;
  SpectralField w1;
  double gamma2 = 0.0;
  SpectralField w2;
  double mu0 = 0.0;
  double cstar = 0.0;
  SpectralField g_limit;  // limit of g_n in H
};

ShearSample shear_family(const ShearFamilyConfig& cfg, int n);

SequenceData shear_family_sequence(const ShearFamilyConfig& cfg, const std::vector<int>& ns);

// Closed-form two-term expansion in V, checked by verify_expansion.
ExpansionResult shear_family_expansion(const ShearFamilyConfig& cfg, const std::vector<int>& ns);

// Eigenfunction cascade in H:
//   v_n = exp(-n^2) sum_{k=1..T} exp(-k n) phi_k,
// which carries both a unitary expansion (Gamma_k = exp(-k n - n^2),
// w_k = phi_k) and a degenerate one (Gamma_k = exp(-k n), w_k = 0).
struct EigenCascadeSample {
  int n = 0;
  SpectralField v_n;
  std::vector<double> unitary_gammas;
  std::vector<SpectralField> unitary_directions;
  std::vector<SpectralField> unitary_witnesses;
  std::vector<double> degenerate_gammas;
  std::vector<SpectralField> degenerate_witnesses;
};

constexpr int kCascadeMinTruncation = 16;

EigenCascadeSample eigen_cascade(int n, int truncation, int levels = 3);

SequenceData eigen_cascade_sequence(const std::vector<int>& ns, int truncation);

ExpansionResult eigen_cascade_unitary(const std::vector<int>& ns, int truncation, int levels = 3);
ExpansionResult eigen_cascade_degenerate(const std::vector<int>& ns, int truncation, int levels = 3);

}  // namespace grashof
