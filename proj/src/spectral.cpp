#include "grashof/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace grashof {

namespace {

constexpr double kRealityTol = 1e-13;
constexpr double kDivergenceTol = 1e-13;

double vec_abs(const Vec2c& c) { return std::sqrt(std::norm(c[0]) + std::norm(c[1])); }

Vec2c conj(const Vec2c& c) { return {std::conj(c[0]), std::conj(c[1])}; }

double mode_weight(int norm2, double s) {
  if (s == 0.0) return 1.0;
  if (s == 1.0) return static_cast<double>(norm2);
  if (s == 0.5) return std::sqrt(static_cast<double>(norm2));
  if (s == -0.5) return 1.0 / std::sqrt(static_cast<double>(norm2));
  return std::pow(static_cast<double>(norm2), s);
}

Vec2c project_mode(const WaveIndex& k, const Vec2c& c) {
  const double kx = k.kx, ky = k.ky;
  const double n2 = k.norm2();
  const cplx dot = (kx * c[0] + ky * c[1]) / n2;
  return {c[0] - kx * dot, c[1] - ky * dot};
}

}  // namespace

int WaveIndex::radius() const { return std::max(std::abs(kx), std::abs(ky)); }

SpectralField::SpectralField(int truncation) : truncation_(truncation) {
  if (truncation < 0) throw MalformedInput("negative truncation radius");
}

SpectralField make_field_unchecked(int truncation, SpectralField::ModeMap modes) {
  SpectralField f(truncation);
  f.modes_ = std::move(modes);
  return f;
}

double reality_defect(const SpectralField::ModeMap& modes) {
  double worst = 0.0;
  for (const auto& [k, c] : modes) {
    const double mag = vec_abs(c);
    auto it = modes.find(-k);
    if (it == modes.end()) {
      if (mag > 0.0) worst = std::max(worst, 1.0);
      continue;
    }
    const Vec2c cc = conj(it->second);
    const double scale = std::max(mag, vec_abs(cc));
    if (scale == 0.0) continue;
    const double diff = std::sqrt(std::norm(c[0] - cc[0]) + std::norm(c[1] - cc[1]));
    worst = std::max(worst, diff / scale);
  }
  return worst;
}

double divergence_defect(const SpectralField& u) {
  double worst = 0.0;
  for (const auto& [k, c] : u.modes()) {
    const double mag = vec_abs(c);
    if (mag == 0.0) continue;
    const double kn = std::sqrt(static_cast<double>(k.norm2()));
    worst = std::max(worst, std::abs(static_cast<double>(k.kx) * c[0] + static_cast<double>(k.ky) * c[1]) / (kn * mag));
  }
  return worst;
}

SpectralField SpectralField::from_modes(int truncation, const ModeMap& modes) {
  ModeMap full;
  for (const auto& [k, c] : modes) {
    if (k.kx == 0 && k.ky == 0) throw MalformedInput("mode (0,0) is not allowed in a zero-mean field");
    if (k.radius() > truncation)
      throw MalformedInput("mode (" + std::to_string(k.kx) + "," + std::to_string(k.ky) +
                           ") exceeds truncation radius " + std::to_string(truncation));
    full[k] = c;
  }
  for (const auto& [k, c] : modes) {
    if (!modes.count(-k)) full[-k] = conj(c);
  }
  if (reality_defect(full) > kRealityTol) throw MalformedInput("coefficients violate c(-k) = conj(c(k))");
  SpectralField f = make_field_unchecked(truncation, {});
  // Representatives carry the data; partners are exact conjugates.
  for (const auto& [k, c] : full) {
    if (!k.is_representative()) continue;
    const Vec2c partner = conj(full.at(-k));
    const Vec2c avg = {0.5 * (c[0] + partner[0]), 0.5 * (c[1] + partner[1])};
    f.modes_[k] = avg;
    f.modes_[-k] = conj(avg);
  }
  if (divergence_defect(f) > kDivergenceTol) throw MalformedInput("coefficients are not divergence-free");
  return f;
}

Vec2c SpectralField::coeff(const WaveIndex& k) const {
  auto it = modes_.find(k);
  if (it == modes_.end()) return {cplx{}, cplx{}};
  return it->second;
}

int SpectralField::max_wavenumber() const {
  int r = 0;
  for (const auto& [k, c] : modes_) {
    if (vec_abs(c) > 0.0) r = std::max(r, k.radius());
  }
  return r;
}

SpectralField SpectralField::with_truncation(int truncation) const {
  SpectralField f = truncated(truncation);
  f.truncation_ = truncation;
  return f;
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  truncation_ = std::max(truncation_, other.truncation_);
  for (const auto& [k, c] : other.modes_) {
    Vec2c& d = modes_[k];
    d[0] += c[0];
    d[1] += c[1];
  }
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  truncation_ = std::max(truncation_, other.truncation_);
  for (const auto& [k, c] : other.modes_) {
    Vec2c& d = modes_[k];
    d[0] -= c[0];
    d[1] -= c[1];
  }
  return *this;
}

SpectralField& SpectralField::operator*=(double s) {
  for (auto& [k, c] : modes_) {
    c[0] *= s;
    c[1] *= s;
  }
  return *this;
}

SpectralField SpectralField::truncated(int radius) const {
  ModeMap out;
  for (const auto& [k, c] : modes_) {
    if (k.radius() <= radius) out.emplace(k, c);
  }
  return make_field_unchecked(std::min(truncation_, radius), std::move(out));
}

SpectralField SpectralField::pruned(double abs_tol) const {
  ModeMap out;
  for (const auto& [k, c] : modes_) {
    if (vec_abs(c) > abs_tol) out.emplace(k, c);
  }
  return make_field_unchecked(truncation_, std::move(out));
}

SpectralField leray_project(const SpectralField::ModeMap& raw, int truncation) {
  SpectralField::ModeMap nonzero;
  int radius = 0;
  for (const auto& [k, c] : raw) {
    if (k.kx == 0 && k.ky == 0) continue;
    nonzero.emplace(k, c);
    radius = std::max(radius, k.radius());
  }
  if (reality_defect(nonzero) > kRealityTol)
    throw MalformedInput("raw coefficients violate the reality condition");
  const int n = truncation < 0 ? radius : truncation;
  SpectralField::ModeMap out;
  for (const auto& [k, c] : nonzero) {
    if (!k.is_representative() || k.radius() > n) continue;
    const Vec2c partner = conj(nonzero.at(-k));
    const Vec2c avg = {0.5 * (c[0] + partner[0]), 0.5 * (c[1] + partner[1])};
    const Vec2c p = project_mode(k, avg);
    out[k] = p;
    out[-k] = conj(p);
  }
  return make_field_unchecked(n, std::move(out));
}

SpectralField apply_fractional(const SpectralField& u, double s) {
  SpectralField::ModeMap out;
  for (const auto& [k, c] : u.modes()) {
    const double w = mode_weight(k.norm2(), s);
    out.emplace(k, Vec2c{c[0] * w, c[1] * w});
  }
  return make_field_unchecked(u.truncation(), std::move(out));
}

SpectralField stokes(const SpectralField& u) { return apply_fractional(u, 1.0); }

double domain_area() { return 4.0 * std::numbers::pi * std::numbers::pi; }

double coefficient_energy(const SpectralField& u) {
  double sum = 0.0;
  for (const auto& [k, c] : u.modes()) sum += std::norm(c[0]) + std::norm(c[1]);
  return sum;
}

double norm_Ds(const SpectralField& u, double s) {
  double sum = 0.0;
  for (const auto& [k, c] : u.modes()) {
    const double w = mode_weight(k.norm2(), 2.0 * s);
    sum += w * (std::norm(c[0]) + std::norm(c[1]));
  }
  return std::sqrt(domain_area() * sum);
}

double norm_H(const SpectralField& u) { return norm_Ds(u, 0.0); }
double norm_V(const SpectralField& u) { return norm_Ds(u, 0.5); }
double norm_Vdual(const SpectralField& u) { return norm_Ds(u, -0.5); }

double inner_Ds(const SpectralField& u, const SpectralField& v, double s) {
  const auto& small = u.modes().size() <= v.modes().size() ? u.modes() : v.modes();
  const auto& large = u.modes().size() <= v.modes().size() ? v.modes() : u.modes();
  double sum = 0.0;
  for (const auto& [k, a] : small) {
    auto it = large.find(k);
    if (it == large.end()) continue;
    const Vec2c& b = it->second;
    const double w = mode_weight(k.norm2(), 2.0 * s);
    sum += w * (std::real(a[0] * std::conj(b[0])) + std::real(a[1] * std::conj(b[1])));
  }
  return domain_area() * sum;
}

double inner_H(const SpectralField& u, const SpectralField& v) { return inner_Ds(u, v, 0.0); }

SpectralField bilinear_B(const SpectralField& u, const SpectralField& v, const BilinearOptions& opts) {
  const int R = u.truncation() + v.truncation();
  const int limit = opts.retruncate < 0 ? R : std::min(R, opts.retruncate);
  const int width = 2 * R + 1;
  std::vector<Vec2c> acc(static_cast<size_t>(width) * width, Vec2c{cplx{}, cplx{}});
  std::vector<char> touched(acc.size(), 0);
  const cplx I(0.0, 1.0);
  for (const auto& [p, up] : u.modes()) {
    for (const auto& [q, vq] : v.modes()) {
      const WaveIndex k{p.kx + q.kx, p.ky + q.ky};
      if (!k.is_representative() || k.radius() > limit) continue;
      const cplx s = I * (up[0] * static_cast<double>(q.kx) + up[1] * static_cast<double>(q.ky));
      const size_t idx = static_cast<size_t>(k.kx + R) * width + (k.ky + R);
      acc[idx][0] += s * vq[0];
      acc[idx][1] += s * vq[1];
      touched[idx] = 1;
    }
  }
  SpectralField::ModeMap out;
  for (int kx = 0; kx <= limit; ++kx) {
    for (int ky = -limit; ky <= limit; ++ky) {
      const WaveIndex k{kx, ky};
      if (!k.is_representative()) continue;
      const size_t idx = static_cast<size_t>(kx + R) * width + (ky + R);
      if (!touched[idx]) continue;
      const Vec2c p = project_mode(k, acc[idx]);
      out[k] = p;
      out[-k] = {std::conj(p[0]), std::conj(p[1])};
    }
  }
  return make_field_unchecked(limit, std::move(out));
}

SpectralField bilinear_Bs(const SpectralField& u, const SpectralField& v, const BilinearOptions& opts) {
  return bilinear_B(u, v, opts) + bilinear_B(v, u, opts);
}

std::array<double, 2> polarization_direction(const WaveIndex& k) {
  const double n = std::sqrt(static_cast<double>(k.norm2()));
  return {-k.ky / n, k.kx / n};
}

std::vector<EigenMode> eigen_modes(int count) {
  if (count <= 0) return {};
  int R = 1;
  std::vector<EigenMode> modes;
  while (true) {
    modes.clear();
    for (int kx = 0; kx <= R; ++kx) {
      for (int ky = -R; ky <= R; ++ky) {
        const WaveIndex k{kx, ky};
        if (!k.is_representative() || k.norm2() > R * R) continue;
        modes.push_back({k, 0, k.norm2()});
        modes.push_back({k, 1, k.norm2()});
      }
    }
    if (static_cast<int>(modes.size()) >= count) break;
    R *= 2;
  }
  std::sort(modes.begin(), modes.end(), [](const EigenMode& a, const EigenMode& b) {
    if (a.eigenvalue != b.eigenvalue) return a.eigenvalue < b.eigenvalue;
    if (a.k != b.k) return a.k < b.k;
    return a.polarization < b.polarization;
  });
  modes.resize(count);
  return modes;
}

EigenMode eigen_mode(int j) {
  if (j < 1) throw std::invalid_argument("eigen index starts at 1");
  return eigen_modes(j).back();
}

SpectralField eigenfunction(const EigenMode& mode) {
  const auto d = polarization_direction(mode.k);
  const double amp = 1.0 / (2.0 * std::sqrt(2.0) * std::numbers::pi);
  const cplx s = mode.polarization == 0 ? cplx(amp, 0.0) : cplx(0.0, -amp);
  SpectralField::ModeMap m;
  m[mode.k] = {s * d[0], s * d[1]};
  m[-mode.k] = {std::conj(s) * d[0], std::conj(s) * d[1]};
  return make_field_unchecked(mode.k.radius(), std::move(m));
}

SpectralField eigenfunction(int j) { return eigenfunction(eigen_mode(j)); }

SpectralField random_field(int N, unsigned long long seed, double decay) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  SpectralField::ModeMap m;
  for (int kx = 0; kx <= N; ++kx) {
    for (int ky = -N; ky <= N; ++ky) {
      const WaveIndex k{kx, ky};
      if (!k.is_representative()) continue;
      const double damp = std::pow(static_cast<double>(k.norm2()), -0.5 * decay);
      const double re = normal(rng);
      const double im = normal(rng);
      const cplx s = cplx(re, im) * damp;
      const auto d = polarization_direction(k);
      m[k] = {s * d[0], s * d[1]};
      m[-k] = {std::conj(s) * d[0], std::conj(s) * d[1]};
    }
  }
  return make_field_unchecked(N, std::move(m));
}

}  // namespace grashof
