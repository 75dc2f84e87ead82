#include "grashof/fixtures.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "grashof/steady.hpp"

namespace grashof {

namespace {

const double kRoot2Pi = std::numbers::sqrt2 * std::numbers::pi;
const cplx I(0.0, 1.0);

void add_mode(SpectralField::ModeMap& m, WaveIndex k, Vec2c c) {
  auto& a = m[k];
  a[0] += c[0];
  a[1] += c[1];
  auto& b = m[-k];
  b[0] += std::conj(c[0]);
  b[1] += std::conj(c[1]);
}

// (sin y, 0) and (0, sum_m a_m sin mx) on the representative half plane.
void add_sin_y(SpectralField::ModeMap& m, double a) { add_mode(m, {0, 1}, {-0.5 * I * a, 0.0}); }

void add_shear(SpectralField::ModeMap& m, const std::map<int, double>& a) {
  for (auto [k, c] : a) add_mode(m, {k, 0}, {0.0, -0.5 * I * c});
}

SpectralField shear_field(const std::map<int, double>& a, int N) {
  SpectralField::ModeMap m;
  add_shear(m, a);
  return SpectralField::from_modes(N, m);
}

}  // namespace

void ShearFamilyConfig::validate() const {
  if (coeffs.empty()) throw std::invalid_argument("shear family needs at least one coefficient");
  bool nonzero = false;
  for (auto [m, c] : coeffs) {
    if (m < 2) throw std::invalid_argument("shear family wavenumbers must be at least 2, got " + std::to_string(m));
    if (!std::isfinite(c)) throw std::invalid_argument("shear family coefficient is not finite");
    if (c != 0.0) nonzero = true;
  }
  if (!nonzero) throw std::invalid_argument("shear family coefficients are all zero");
}

int ShearFamilyConfig::truncation() const { return coeffs.rbegin()->first; }

double ShearFamilyConfig::cstar() const {
  double s = 0.0;
  for (auto [m, c] : coeffs) {
    const double m2 = static_cast<double>(m) * m;
    s += m2 * m2 * c * c + 0.5 * c * c * (m2 - 1.0) * (m2 - 1.0) / (m2 + 1.0);
  }
  return std::sqrt(s);
}

double ShearFamilyConfig::mu0() const { return 1.0 / (kRoot2Pi * cstar()); }

double ShearFamilyConfig::alpha(int n) const {
  const double cs = cstar();
  return kRoot2Pi * std::sqrt(1.0 + cs * cs * n * n);
}

double ShearFamilyConfig::shear_norm_V() const {
  double s = 0.0;
  for (auto [m, c] : coeffs) s += static_cast<double>(m) * m * c * c;
  return kRoot2Pi * std::sqrt(s);
}

ShearSample shear_family(const ShearFamilyConfig& cfg, int n) {
  cfg.validate();
  if (n < 1) throw std::invalid_argument("shear family index must be positive");
  const int N = cfg.truncation();
  ShearSample s;
  s.n = n;
  s.cstar = cfg.cstar();
  s.mu0 = cfg.mu0();
  s.alpha = cfg.alpha(n);

  // Forcing F_n before projection.
  SpectralField::ModeMap raw;
  add_sin_y(raw, 1.0);
  std::map<int, double> lap;
  for (auto [m, c] : cfg.coeffs) lap[m] = n * static_cast<double>(m) * m * c;
  add_shear(raw, lap);
  SpectralField::ModeMap cross;
  for (auto [m, c] : cfg.coeffs) {
    const double a = 0.25 * n * c;
    const double md = m;
    add_mode(cross, {m, 1}, {-I * a, -I * a * md});
    add_mode(cross, {m, -1}, {-I * a, I * a * md});
  }
  for (const auto& [k, c] : cross) {
    auto& r = raw[k];
    r[0] += c[0];
    r[1] += c[1];
  }
  const SpectralField f = leray_project(raw, N);
  if (std::abs(norm_H(f) / s.alpha - 1.0) > 1e-13)
    throw FixtureIntegrityError("shear family forcing norm disagrees with the closed form for alpha_n");
  s.g_n = (1.0 / s.alpha) * f;

  SpectralField::ModeMap u;
  add_sin_y(u, 1.0);
  std::map<int, double> nc;
  for (auto [m, c] : cfg.coeffs) nc[m] = n * c;
  add_shear(u, nc);
  s.v_n = (1.0 / s.alpha) * SpectralField::from_modes(N, u);

  const SpectralField shear = shear_field(cfg.coeffs, N);
  s.v = s.mu0 * shear;
  s.gamma1 = kRoot2Pi / s.alpha;
  SpectralField::ModeMap w1;
  add_sin_y(w1, 1.0 / kRoot2Pi);
  s.w1 = SpectralField::from_modes(N, w1);
  const double wt = cfg.shear_norm_V();
  s.w2 = (-1.0 / wt) * shear;
  s.gamma2 = wt / (s.cstar * s.cstar * s.alpha * (s.mu0 * s.alpha + n));

  // Limit forcing: mu0 P(sum_m c_m (sin mx cos y, m^2 sin mx + m sin y cos mx)).
  SpectralField::ModeMap graw;
  std::map<int, double> glap;
  for (auto [m, c] : cfg.coeffs) glap[m] = static_cast<double>(m) * m * c;
  add_shear(graw, glap);
  for (auto [m, c] : cfg.coeffs) {
    const double a = 0.25 * c;
    const double md = m;
    add_mode(graw, {m, 1}, {-I * a, -I * a * md});
    add_mode(graw, {m, -1}, {-I * a, I * a * md});
  }
  s.g_limit = s.mu0 * leray_project(graw, N);

  const double res = norm_H(residual(s.v_n, {s.g_n, s.alpha, N}));
  if (!(res <= 1e-12 * std::max(1.0, norm_H(s.g_n))))
    throw FixtureIntegrityError("shear family sample n = " + std::to_string(n) + " misses the steady equation by " +
                                std::to_string(res));
  const SpectralField rec = s.v + s.gamma1 * s.w1 + s.gamma2 * s.w2;
  if (!(norm_V(rec - s.v_n) <= 1e-12 * norm_V(s.v_n)))
    throw FixtureIntegrityError("shear family expansion does not reproduce v_n");
  return s;
}

SequenceData shear_family_sequence(const ShearFamilyConfig& cfg, const std::vector<int>& ns) {
  SequenceData d;
  for (int n : ns) {
    const ShearSample s = shear_family(cfg, n);
    d.fields.push_back(s.v_n);
    d.alphas.push_back(s.alpha);
    d.indices.push_back(n);
  }
  return d;
}

ExpansionResult shear_family_expansion(const ShearFamilyConfig& cfg, const std::vector<int>& ns) {
  ExpansionResult e;
  e.scale = NestedScale::single(0.5, 3);
  e.rule = CoefficientRule::projection;
  e.kind = ExpansionKind::finite_unitary;
  e.terms.resize(2);
  for (int n : ns) {
    const ShearSample s = shear_family(cfg, n);
    if (e.indices.empty()) {
      e.limit = s.v;
      e.terms[0].direction = s.w1;
      e.terms[1].direction = s.w2;
    }
    e.indices.push_back(n);
    e.alphas.push_back(s.alpha);
    e.terms[0].gammas.push_back(s.gamma1);
    e.terms[0].witnesses.push_back((1.0 / s.gamma1) * (s.v_n - s.v));
    e.terms[1].gammas.push_back(s.gamma2);
    e.terms[1].witnesses.push_back(s.w2);
  }
  e.direction_uncertainty = {0.0, 0.0};
  e.decisions.push_back("closed-form shear family expansion");
  const VerificationReport rep = verify_expansion(e, shear_family_sequence(cfg, ns));
  for (const auto& c : rep.checks)
    if (!c.passed) throw FixtureIntegrityError("shear family expansion fails check " + c.id);
  return e;
}

EigenCascadeSample eigen_cascade(int n, int truncation, int levels) {
  if (n < 1 || n > 6) throw std::out_of_range("eigen cascade index must lie in 1..6, got " + std::to_string(n));
  if (truncation < kCascadeMinTruncation)
    throw std::invalid_argument("eigen cascade truncation must be at least " + std::to_string(kCascadeMinTruncation));
  if (levels < 1 || levels >= truncation) throw std::invalid_argument("eigen cascade levels out of range");
  const auto modes = eigen_modes(truncation);
  int N = 0;
  for (const auto& m : modes) N = std::max(N, m.k.radius());
  std::vector<SpectralField> phi;
  for (const auto& m : modes) phi.push_back(eigenfunction(m).with_truncation(N));

  // Tail sums t_k = sum_{j >= k} exp(-(j - k) n) phi_j, built from the top down.
  std::vector<SpectralField> tail(truncation + 1, SpectralField(N));
  const double q = std::exp(-static_cast<double>(n));
  for (int k = truncation - 1; k >= 0; --k) tail[k] = phi[k] + q * tail[k + 1];

  EigenCascadeSample s;
  s.n = n;
  const double lead = std::exp(-static_cast<double>(n) * n - n);
  s.v_n = lead * tail[0];
  for (int k = 1; k <= levels; ++k) {
    s.unitary_gammas.push_back(std::exp(-static_cast<double>(k) * n - static_cast<double>(n) * n));
    s.unitary_directions.push_back(phi[k - 1]);
    s.unitary_witnesses.push_back(tail[k - 1]);
    s.degenerate_gammas.push_back(std::exp(-static_cast<double>(k) * n));
    s.degenerate_witnesses.push_back(std::exp(static_cast<double>(k) * n) * s.v_n);
  }
  const double scale = norm_H(s.v_n);
  SpectralField partial(N);
  for (int k = 0; k < levels; ++k) {
    const SpectralField du = s.v_n - partial - s.unitary_gammas[k] * s.unitary_witnesses[k];
    const SpectralField dd = s.v_n - s.degenerate_gammas[k] * s.degenerate_witnesses[k];
    if (!(norm_H(du) <= 1e-12 * scale) || !(norm_H(dd) <= 1e-12 * scale))
      throw FixtureIntegrityError("eigen cascade reconstruction fails at level " + std::to_string(k + 1));
    partial += s.unitary_gammas[k] * s.unitary_directions[k];
  }
  return s;
}

SequenceData eigen_cascade_sequence(const std::vector<int>& ns, int truncation) {
  SequenceData d;
  for (int n : ns) {
    d.fields.push_back(eigen_cascade(n, truncation, 1).v_n);
    d.alphas.push_back(std::exp(static_cast<double>(n)));
    d.indices.push_back(n);
  }
  return d;
}

namespace {

ExpansionResult cascade_expansion(const std::vector<int>& ns, int truncation, int levels, bool unitary) {
  ExpansionResult e;
  e.scale = NestedScale::single(0.0, levels + 1);
  e.rule = CoefficientRule::projection;
  e.kind = unitary ? ExpansionKind::infinite_unitary : ExpansionKind::degenerate;
  if (!unitary) e.degenerate_N = 0;
  e.depth_capped = true;
  e.terms.resize(levels);
  e.direction_uncertainty.assign(levels, 0.0);
  for (int n : ns) {
    const EigenCascadeSample s = eigen_cascade(n, truncation, levels);
    if (e.indices.empty()) {
      e.limit = SpectralField(s.v_n.truncation());
      for (int k = 0; k < levels; ++k)
        e.terms[k].direction = unitary ? s.unitary_directions[k] : SpectralField(s.v_n.truncation());
    }
    e.indices.push_back(n);
    e.alphas.push_back(std::exp(static_cast<double>(n)));
    for (int k = 0; k < levels; ++k) {
      e.terms[k].gammas.push_back(unitary ? s.unitary_gammas[k] : s.degenerate_gammas[k]);
      e.terms[k].witnesses.push_back(unitary ? s.unitary_witnesses[k] : s.degenerate_witnesses[k]);
    }
  }
  e.decisions.push_back(unitary ? "closed-form unitary cascade expansion" : "closed-form degenerate cascade expansion");
  const VerificationReport rep = verify_expansion(e, eigen_cascade_sequence(ns, truncation));
  for (const auto& c : rep.checks)
    if (!c.passed) throw FixtureIntegrityError("eigen cascade expansion fails check " + c.id);
  return e;
}

}  // namespace

ExpansionResult eigen_cascade_unitary(const std::vector<int>& ns, int truncation, int levels) {
  return cascade_expansion(ns, truncation, levels, true);
}

ExpansionResult eigen_cascade_degenerate(const std::vector<int>& ns, int truncation, int levels) {
  return cascade_expansion(ns, truncation, levels, false);
}

}  // namespace grashof
