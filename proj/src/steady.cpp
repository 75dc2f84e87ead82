#include "grashof/steady.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "grashof/parallel.hpp"

namespace grashof {

namespace {

// Real coordinates on the Galerkin box: two per half-plane wavevector,
// the real and imaginary parts of the amplitude along k-perp.
class GalerkinBasis {
 public:
  explicit GalerkinBasis(int N) : N_(N) {
    for (int kx = 0; kx <= N; ++kx)
      for (int ky = -N; ky <= N; ++ky) {
        const WaveIndex k{kx, ky};
        if (k.is_representative()) reps_.push_back(k);
      }
  }

  int dim() const { return 2 * static_cast<int>(reps_.size()); }

  SpectralField to_field(const Eigen::VectorXd& x) const {
    SpectralField::ModeMap m;
    for (size_t i = 0; i < reps_.size(); ++i) {
      const cplx s(x[2 * i], x[2 * i + 1]);
      if (s == cplx{}) continue;
      const auto d = polarization_direction(reps_[i]);
      m[reps_[i]] = {s * d[0], s * d[1]};
      m[-reps_[i]] = {std::conj(s) * d[0], std::conj(s) * d[1]};
    }
    return make_field_unchecked(N_, std::move(m));
  }

  Eigen::VectorXd to_vector(const SpectralField& f) const {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(dim());
    for (size_t i = 0; i < reps_.size(); ++i) {
      const Vec2c c = f.coeff(reps_[i]);
      const auto d = polarization_direction(reps_[i]);
      const cplx s = c[0] * d[0] + c[1] * d[1];
      x[2 * i] = s.real();
      x[2 * i + 1] = s.imag();
    }
    return x;
  }

  SpectralField unit(int j) const {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(dim());
    x[j] = 1.0;
    return to_field(x);
  }

 private:
  int N_;
  std::vector<WaveIndex> reps_;
};

SolveReport finish(SolveReport r, const SteadyProblem& p) {
  const double gn = norm_H(p.g);
  r.bound_check = norm_H(stokes(r.solution)) / gn;
  r.energy_check = norm_V(r.solution) / gn;
  return r;
}

}  // namespace

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::converged: return "converged";
    case SolveStatus::no_convergence: return "no_convergence";
    case SolveStatus::singular: return "singular";
  }
  return "unknown";
}

void SteadyProblem::validate() const {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("alpha must be finite and nonnegative");
  if (N < 1) throw std::invalid_argument("truncation radius must be at least 1");
  if (!(norm_H(g) > 0.0)) throw std::invalid_argument("forcing must be nonzero");
  if (g.max_wavenumber() > N)
    throw std::invalid_argument("forcing has modes beyond truncation radius " + std::to_string(N));
}

SpectralField residual(const SpectralField& v, const SteadyProblem& p) {
  BilinearOptions opts;
  opts.retruncate = p.N;
  SpectralField r = stokes(v.truncated(p.N));
  if (p.alpha != 0.0) r += p.alpha * bilinear_B(v.truncated(p.N), v.truncated(p.N), opts);
  r -= p.g.truncated(p.N);
  return r.with_truncation(p.N);
}

SpectralField manufactured_force(const SpectralField& v, double alpha) {
  SpectralField g = stokes(v);
  if (alpha != 0.0) g += alpha * bilinear_B(v, v);
  return g;
}

SpectralField inverse_stokes(const SpectralField& g) { return apply_fractional(g, -1.0); }

SolveReport solve_steady(const SteadyProblem& p, const SpectralField& initial, const SolverOptions& opts) {
  p.validate();
  if (!(opts.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const GalerkinBasis basis(p.N);
  const double target = opts.tol * std::max(1.0, norm_H(p.g));
  BilinearOptions bopts;
  bopts.retruncate = p.N;

  SolveReport rep;
  Eigen::VectorXd x = basis.to_vector(initial);
  SpectralField v = basis.to_field(x);
  double res = norm_H(residual(v, p));
  rep.residual_history.push_back(res);

  while (true) {
    if (res <= target) {
      rep.status = SolveStatus::converged;
      break;
    }
    if (rep.newton_iters >= opts.max_iters) {
      rep.status = SolveStatus::no_convergence;
      break;
    }
    const int n = basis.dim();
    Eigen::MatrixXd J(n, n);
    parallel_for(n, [&](int j) {
      const SpectralField z = basis.unit(j);
      SpectralField col = stokes(z);
      if (p.alpha != 0.0) col += p.alpha * bilinear_Bs(v, z, bopts);
      J.col(j) = basis.to_vector(col);
    });
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(J);
    const double rcond = lu.rcond();
    rep.condition_estimate = rcond > 0.0 ? 1.0 / rcond : INFINITY;
    if (!(rcond > opts.singular_rcond)) {
      rep.status = SolveStatus::singular;
      break;
    }
    const Eigen::VectorXd F = basis.to_vector(residual(v, p));
    const Eigen::VectorXd step = lu.solve(-F);

    double t = 1.0;
    bool accepted = false;
    for (int h = 0; h <= opts.max_halvings; ++h) {
      const Eigen::VectorXd trial = x + t * step;
      const SpectralField tv = basis.to_field(trial);
      const double tres = norm_H(residual(tv, p));
      if (tres < res) {
        x = trial;
        v = tv;
        res = tres;
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) {
      rep.status = SolveStatus::no_convergence;
      break;
    }
    ++rep.newton_iters;
    rep.residual_history.push_back(res);
  }
  rep.solution = v;
  rep.residual_H = res;
  return finish(std::move(rep), p);
}

namespace {

struct StepState {
  double alpha;
  SpectralField g;
  SpectralField v;
};

// Solves at `to` starting from `from`, bisecting the parameter path on failure.
SolveReport continue_step(const StepState& from, double alpha, const SpectralField& g, int N,
                          const SweepOptions& opts, int depth) {
  SteadyProblem p{g, alpha, N};
  SolveReport r = solve_steady(p, from.v, opts.solver);
  if (r.converged() || depth >= opts.max_substep_depth) return r;
  const double mid_alpha = 0.5 * (from.alpha + alpha);
  const SpectralField mid_g = 0.5 * (from.g + g);
  SolveReport mid = continue_step(from, mid_alpha, mid_g, N, opts, depth + 1);
  if (!mid.converged()) return r;
  return continue_step({mid_alpha, mid_g, mid.solution}, alpha, g, N, opts, depth + 1);
}

}  // namespace

std::vector<SolveReport> sweep(const std::vector<double>& alphas, const std::vector<SpectralField>& forces,
                               int N, const SweepOptions& opts, const SpectralField* initial) {
  if (alphas.empty()) throw std::invalid_argument("sweep needs at least one alpha");
  if (forces.size() != 1 && forces.size() != alphas.size())
    throw std::invalid_argument("sweep needs one forcing or one per alpha");
  for (size_t i = 0; i < alphas.size(); ++i) {
    if (!(alphas[i] > 0.0)) throw std::invalid_argument("sweep alphas must be positive");
    if (i > 0 && !(alphas[i] > alphas[i - 1])) throw std::invalid_argument("sweep alphas must be strictly increasing");
  }
  auto force = [&](size_t i) -> const SpectralField& { return forces.size() == 1 ? forces[0] : forces[i]; };

  StepState state{0.0, force(0).truncated(N), inverse_stokes(force(0).truncated(N))};
  if (initial) state = {alphas[0], force(0).truncated(N), *initial};

  std::vector<SolveReport> out;
  for (size_t i = 0; i < alphas.size(); ++i) {
    const SpectralField g = force(i).truncated(N);
    SolveReport r = continue_step(state, alphas[i], g, N, opts, 0);
    if (!r.converged()) {
      throw ContinuationError(i, r,
                              "continuation broke at index " + std::to_string(i) + " (alpha = " +
                                  std::to_string(alphas[i]) + "): " + to_string(r.status));
    }
    state = {alphas[i], g, r.solution};
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace grashof
