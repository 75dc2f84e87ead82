#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "grashof/spectral.hpp"

namespace grashof {

// A v + alpha B(v, v) = g on the Galerkin box of radius N.
struct SteadyProblem {
  SpectralField g;
  double alpha = 0.0;
  int N = 0;

  void validate() const;
};

enum class SolveStatus { converged, no_convergence, singular };

std::string to_string(SolveStatus s);

struct SolveReport {
  SolveStatus status = SolveStatus::no_convergence;
  SpectralField solution;
  double residual_H = 0.0;
  int newton_iters = 0;
  double bound_check = 0.0;   // |Av| / |g|
  double energy_check = 0.0;  // ||v|| / |g|
  double condition_estimate = 0.0;
  std::vector<double> residual_history;

  bool converged() const { return status == SolveStatus::converged; }
};

struct SolverOptions {
  double tol = 1e-12;  // relative to max(1, |g|)
  int max_iters = 50;
  int max_halvings = 20;
  double singular_rcond = 1e-14;
};

SpectralField residual(const SpectralField& v, const SteadyProblem& p);

SpectralField manufactured_force(const SpectralField& v, double alpha);

// Galerkin solution of A v = g.
SpectralField inverse_stokes(const SpectralField& g);

SolveReport solve_steady(const SteadyProblem& p, const SpectralField& initial,
                         const SolverOptions& opts = {});

class ContinuationError : public std::runtime_error {
 public:
  ContinuationError(size_t index, SolveReport report, const std::string& what)
      : std::runtime_error(what), index(index), report(std::move(report)) {}
  size_t index;
  SolveReport report;
};

struct SweepOptions {
  SolverOptions solver;
  // Bisection depth for intermediate alpha values when a step fails.
  int max_substep_depth = 8;
};

// Continuation along increasing alphas. `forces` holds one forcing shared by
// every step or one per alpha.
std::vector<SolveReport> sweep(const std::vector<double>& alphas,
                               const std::vector<SpectralField>& forces, int N,
                               const SweepOptions& opts = {},
                               const SpectralField* initial = nullptr);

}  // namespace grashof
