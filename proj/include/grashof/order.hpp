#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "grashof/expansion.hpp"

namespace grashof {

struct PositiveSequence {
  std::string label;
  std::vector<double> values;

  void validate() const;
};

enum class Verdict { succ, sim, prec, undecided };
std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct OrderRelation {
  Verdict verdict = Verdict::undecided;
  double lambda = 0.0;      // limit of the ratio when verdict is sim
  double slope = 0.0;       // fitted d log(ratio) / d log(alpha) over the tail
  double dispersion = 0.0;  // max - min of log(ratio) over the tail
};

struct OrderTolerances {
  double slope = 0.1;
  double disp = 0.05;
  double residual = 1e-8;
  double zero_gate = 1e-8;  // v = 0 and v = A^{-1} g gates, relative to ||g||_{V'}
  double chi_zero = 1e-12;
  int min_window = 6;
};

class OrderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class InconsistencyError : public OrderError {
 public:
  using OrderError::OrderError;
};
class ClassificationBlocked : public OrderError {
 public:
  using OrderError::OrderError;
};

// Compares xi against eta as n grows; `scale` is the abscissa whose log is
// used for the slope fit (alpha_n, or n when alphas are unavailable).
OrderRelation compare(const PositiveSequence& xi, const PositiveSequence& eta, const std::vector<double>& scale,
                      const OrderTolerances& tols = {});

struct RelationMatrix {
  std::vector<PositiveSequence> sequences;
  std::vector<std::vector<OrderRelation>> relations;  // relations[i][j] = compare(seq i, seq j)
  std::vector<double> scale;

  int index(const std::string& label) const;  // -1 when absent
  const OrderRelation& at(const std::string& a, const std::string& b) const;
};

RelationMatrix relation_matrix(std::vector<PositiveSequence> sequences, const std::vector<double>& scale,
                               const OrderTolerances& tols = {});

// Sequences one, alpha, gamma(k), alpha*gamma(k), alpha*gamma(j)*gamma(k)
// for j <= k up to the available depth, with the structural relations checked.
RelationMatrix build_S(const std::vector<double>& alphas, const std::vector<std::vector<double>>& gammas,
                       const OrderTolerances& tols = {});

// Label pairs of the structural table that must read succ.
std::vector<std::pair<std::string, std::string>> structural_relations(int depth);

struct Comparability {
  bool total = true;
  std::vector<std::pair<std::string, std::string>> undecided;
};

Comparability total_comparability(const RelationMatrix& m);

enum class ChiTag { S1, S2, S3, mixed };
std::string to_string(ChiTag t);

struct ChiAnalysis {
  ChiTag tag = ChiTag::mixed;
  std::vector<double> chi;
  std::optional<RelationMatrix> extended;  // matrix with abs_chi inserted for S2/S3
  Comparability comparability;
};

ChiAnalysis chi_trichotomy(const std::vector<double>& chi, const RelationMatrix& m, const OrderTolerances& tols = {});

struct Constant {
  double value = 0.0;
  double uncertainty = 0.0;  // extrapolation uncertainty
  double dispersion = 0.0;   // relative spread over the tail
  double order = 1.0;        // power of h used as the extrapolation variable
};

// Limit of a scalar sequence along h -> 0 by adaptive polynomial extrapolation
// in h^p, with p read off the tail differences when they show a stable
// non-integer order.
Constant estimate_constant(const std::vector<double>& values, const std::vector<double>& h);

struct RelationCheck {
  std::string id;
  double residual = 0.0;
  bool passed = false;
};

struct ClassificationReport {
  std::string branch;
  std::map<std::string, Constant> constants;
  std::vector<RelationCheck> residuals;
  std::optional<ChiAnalysis> chi;
  RelationMatrix matrix;
  Comparability comparability;
  std::vector<std::string> decisions;
  std::vector<std::string> warnings;
  OrderTolerances tols;

  const RelationCheck* find(const std::string& id) const;
};

ClassificationReport classify(const ExpansionResult& e, const SpectralField& g, const OrderTolerances& tols = {});

}  // namespace grashof
