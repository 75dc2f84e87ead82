#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "grashof/spectral.hpp"

namespace grashof {

enum class ScaleRegime { periodic_2d, general, single_space };

std::string to_string(ScaleRegime r);
ScaleRegime scale_regime_from_string(const std::string& s);

// Exponents s_0 > s_1 > ... defining Z_k = D(A^{s_k}); a single space
// repeats one exponent.
struct NestedScale {
  std::vector<double> exponents;
  ScaleRegime regime = ScaleRegime::periodic_2d;

  static NestedScale default_periodic_2d(int levels = 6);
  static NestedScale single(double s, int levels = 6);
  static NestedScale from_list(std::vector<double> exponents, ScaleRegime regime);

  void validate() const;
  int levels() const { return static_cast<int>(exponents.size()) - 1; }
  double exponent(int k) const;
  NestedScale without(int k) const;
};

struct SequenceData {
  std::vector<SpectralField> fields;
  std::vector<double> alphas;  // may be empty; then 1/n is the decay variable
  std::vector<int> indices;    // sample labels n; defaults to 1..M

  int size() const { return static_cast<int>(fields.size()); }
  std::vector<int> labels() const;
  void validate(int min_window) const;
};

enum class LimitEstimator { extrapolate, tail_average };
std::string to_string(LimitEstimator e);
LimitEstimator limit_estimator_from_string(const std::string& s);

struct ToleranceSet {
  double limit = 1e-10;           // Cauchy tail, relative to the data scale
  double finite = 1e-10;          // witness stabilization
  double zero = 1e-10;            // zero direction, relative to largest direction norm
  double floor = 1e-13;           // coefficient floor, relative to the first level
  double reconstruction = 1e-12;  // coefficient identity check
  double unit = 1e-13;            // witness normalization check
  int max_levels = 6;
  int min_window = 6;
  LimitEstimator estimator = LimitEstimator::extrapolate;
  int max_degree = 10;
  int window = 0;                 // trailing samples used by the estimator, 0 = all
  double noise_factor = 10.0;     // multiplier on propagated estimator uncertainty
};

enum class ExpansionKind { trivial, finite_unitary, infinite_unitary, degenerate };
std::string to_string(ExpansionKind k);
ExpansionKind expansion_kind_from_string(const std::string& s);

// norm: Gamma_{k,n} from witness norms, unit witnesses.
// projection: Gamma_{k,n} from projection on unit directions, relaxed witnesses.
enum class CoefficientRule { norm, projection };
std::string to_string(CoefficientRule r);
CoefficientRule coefficient_rule_from_string(const std::string& s);

struct ExpansionTerm {
  std::vector<double> gammas;
  SpectralField direction;
  std::vector<SpectralField> witnesses;
};

struct ExpansionResult {
  SpectralField limit;
  std::vector<ExpansionTerm> terms;
  ExpansionKind kind = ExpansionKind::trivial;
  std::optional<int> degenerate_N;
  NestedScale scale;
  CoefficientRule rule = CoefficientRule::norm;
  ToleranceSet tols;
  std::vector<int> indices;
  std::vector<double> alphas;
  bool depth_capped = false;
  double limit_uncertainty = 0.0;
  std::vector<double> direction_uncertainty;
  std::vector<std::string> decisions;

  int depth() const { return static_cast<int>(terms.size()); }
  int window() const { return static_cast<int>(indices.size()); }
  // v + sum_{j<=k} Gamma_{j,n} w_j for sample position i.
  SpectralField partial_sum(int k, int i) const;
};

class ExtractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NotConvergentError : public ExtractionError {
 public:
  using ExtractionError::ExtractionError;
};
class StagnationError : public ExtractionError {
 public:
  using ExtractionError::ExtractionError;
};

struct LimitEstimate {
  SpectralField value;
  double uncertainty = 0.0;
  std::string method;
};

// Limit of a sampled sequence as h -> 0, with an uncertainty measured in
// the D(A^s) norm.
LimitEstimate estimate_limit(const std::vector<SpectralField>& samples, const std::vector<double>& h,
                             double s, const ToleranceSet& tols);

ExpansionResult extract_strict(const SequenceData& data, const NestedScale& scale,
                               const ToleranceSet& tols = {});
ExpansionResult extract_unitary(const SequenceData& data, const NestedScale& scale,
                                const ToleranceSet& tols = {});
ExpansionResult extract(const SequenceData& data, const NestedScale& scale, const ToleranceSet& tols,
                        CoefficientRule rule);

ExpansionResult restructure(const ExpansionResult& e, const ToleranceSet& tols = {});

struct AxiomCheck {
  std::string id;
  bool passed = false;
  double value = 0.0;
  std::string detail;
};

struct VerificationReport {
  std::vector<AxiomCheck> checks;
  // remainder_ratios[k][i]: size of the remainder after k+1 terms in
  // Z_{k+1}, divided by Gamma_{k+1,n}.
  std::vector<std::vector<double>> remainder_ratios;

  bool all_passed() const;
  const AxiomCheck* find(const std::string& id) const;
};

VerificationReport verify_expansion(const ExpansionResult& e, const SequenceData& data);

struct UniquenessReport {
  bool limits_match = false;
  bool structure_match = false;
  bool gammas_match = false;
  bool directions_match = false;
  bool reconstruction_match = false;
  double max_limit_diff = 0.0;
  double max_gamma_rel_diff = 0.0;
  double max_direction_diff = 0.0;
  double max_reconstruction_diff = 0.0;
  std::vector<int> overlap;
  std::vector<int> unconstrained;

  bool full_match() const {
    return limits_match && structure_match && gammas_match && directions_match && reconstruction_match;
  }
};

UniquenessReport uniqueness_check(const ExpansionResult& a, const ExpansionResult& b, double tol = 1e-10);

}  // namespace grashof
