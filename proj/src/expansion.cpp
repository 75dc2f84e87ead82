#include "grashof/expansion.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "grashof/parallel.hpp"

namespace grashof {

// ---------------------------------------------------------------- names

std::string to_string(ScaleRegime r) {
  switch (r) {
    case ScaleRegime::periodic_2d: return "2d-periodic";
    case ScaleRegime::general: return "general";
    case ScaleRegime::single_space: return "single-space";
  }
  return "unknown";
}

ScaleRegime scale_regime_from_string(const std::string& s) {
  if (s == "2d-periodic") return ScaleRegime::periodic_2d;
  if (s == "general") return ScaleRegime::general;
  if (s == "single-space") return ScaleRegime::single_space;
  throw std::invalid_argument("unknown scale regime '" + s + "'");
}

std::string to_string(LimitEstimator e) {
  return e == LimitEstimator::extrapolate ? "extrapolate" : "tail-average";
}

LimitEstimator limit_estimator_from_string(const std::string& s) {
  if (s == "extrapolate") return LimitEstimator::extrapolate;
  if (s == "tail-average") return LimitEstimator::tail_average;
  throw std::invalid_argument("unknown limit estimator '" + s + "'");
}

std::string to_string(ExpansionKind k) {
  switch (k) {
    case ExpansionKind::trivial: return "trivial";
    case ExpansionKind::finite_unitary: return "finite-unitary";
    case ExpansionKind::infinite_unitary: return "infinite-unitary";
    case ExpansionKind::degenerate: return "degenerate";
  }
  return "unknown";
}

ExpansionKind expansion_kind_from_string(const std::string& s) {
  if (s == "trivial") return ExpansionKind::trivial;
  if (s == "finite-unitary") return ExpansionKind::finite_unitary;
  if (s == "infinite-unitary") return ExpansionKind::infinite_unitary;
  if (s == "degenerate") return ExpansionKind::degenerate;
  throw std::invalid_argument("unknown expansion kind '" + s + "'");
}

std::string to_string(CoefficientRule r) { return r == CoefficientRule::norm ? "strict" : "unitary"; }

CoefficientRule coefficient_rule_from_string(const std::string& s) {
  if (s == "strict") return CoefficientRule::norm;
  if (s == "unitary") return CoefficientRule::projection;
  throw std::invalid_argument("unknown coefficient rule '" + s + "'");
}

// ---------------------------------------------------------------- scale

NestedScale NestedScale::default_periodic_2d(int levels) {
  NestedScale s;
  s.regime = ScaleRegime::periodic_2d;
  for (int k = 0; k <= levels; ++k) s.exponents.push_back(0.5 + 0.5 / (k + 2));
  return s;
}

NestedScale NestedScale::single(double e, int levels) {
  NestedScale s;
  s.regime = ScaleRegime::single_space;
  s.exponents.assign(levels + 1, e);
  return s;
}

NestedScale NestedScale::from_list(std::vector<double> exponents, ScaleRegime regime) {
  NestedScale s;
  s.exponents = std::move(exponents);
  s.regime = regime;
  s.validate();
  return s;
}

void NestedScale::validate() const {
  if (exponents.empty()) throw std::invalid_argument("nested scale needs at least one exponent");
  for (size_t k = 0; k < exponents.size(); ++k) {
    const double s = exponents[k];
    if (!std::isfinite(s)) throw std::invalid_argument("nested scale exponent is not finite");
    if (regime == ScaleRegime::single_space) {
      if (s != exponents[0]) throw std::invalid_argument("single-space scale must repeat one exponent");
      continue;
    }
    const double lo = regime == ScaleRegime::periodic_2d ? 0.5 : 0.0;
    const double hi = regime == ScaleRegime::periodic_2d ? 1.0 : 0.5;
    if (!(s > lo && s < hi)) {
      std::ostringstream os;
      os << "exponent " << s << " outside (" << lo << ", " << hi << ") for regime " << to_string(regime);
      throw std::invalid_argument(os.str());
    }
    if (k > 0 && !(s < exponents[k - 1])) throw std::invalid_argument("nested scale must strictly decrease");
  }
}

double NestedScale::exponent(int k) const {
  if (k < 0 || k >= static_cast<int>(exponents.size()))
    throw std::out_of_range("nested scale has no level " + std::to_string(k));
  return exponents[k];
}

NestedScale NestedScale::without(int k) const {
  NestedScale s = *this;
  if (k >= 0 && k < static_cast<int>(s.exponents.size())) s.exponents.erase(s.exponents.begin() + k);
  return s;
}

// ---------------------------------------------------------------- data

std::vector<int> SequenceData::labels() const {
  if (!indices.empty()) return indices;
  std::vector<int> out(fields.size());
  std::iota(out.begin(), out.end(), 1);
  return out;
}

void SequenceData::validate(int min_window) const {
  if (size() < min_window)
    throw std::invalid_argument("sequence window has " + std::to_string(size()) + " samples, need at least " +
                                std::to_string(min_window));
  if (!alphas.empty() && alphas.size() != fields.size())
    throw std::invalid_argument("alphas and fields differ in length");
  if (!indices.empty() && indices.size() != fields.size())
    throw std::invalid_argument("indices and fields differ in length");
  for (double a : alphas)
    if (!(a > 0.0)) throw std::invalid_argument("alphas must be positive");
  const auto lab = labels();
  for (size_t i = 1; i < lab.size(); ++i)
    if (!(lab[i] > lab[i - 1])) throw std::invalid_argument("sample indices must increase");
}

SpectralField ExpansionResult::partial_sum(int k, int i) const {
  SpectralField s = limit;
  for (int j = 0; j < k && j < depth(); ++j) s += terms[j].gammas[i] * terms[j].direction;
  return s;
}

// ---------------------------------------------------------------- limits

namespace {

// Samples flattened onto the union of their half-plane modes.
class FieldStack {
 public:
  FieldStack(const std::vector<const SpectralField*>& fields, double s) {
    std::map<WaveIndex, int> slot;
    truncation_ = 0;
    for (const auto* f : fields) {
      truncation_ = std::max(truncation_, f->truncation());
      for (const auto& [k, c] : f->modes())
        if (k.is_representative()) slot.emplace(k, 0);
    }
    int idx = 0;
    for (auto& [k, v] : slot) {
      v = idx++;
      reps_.push_back(k);
      const double w = 2.0 * domain_area() * std::pow(static_cast<double>(k.norm2()), 2.0 * s);
      for (int c = 0; c < 4; ++c) weights_.push_back(w);
    }
    data_ = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(fields.size()), 4 * idx);
    for (size_t i = 0; i < fields.size(); ++i) {
      for (const auto& [k, c] : fields[i]->modes()) {
        if (!k.is_representative()) continue;
        const int j = slot.at(k);
        data_(i, 4 * j + 0) = c[0].real();
        data_(i, 4 * j + 1) = c[0].imag();
        data_(i, 4 * j + 2) = c[1].real();
        data_(i, 4 * j + 3) = c[1].imag();
      }
    }
  }

  const Eigen::MatrixXd& data() const { return data_; }

  double norm(const Eigen::RowVectorXd& x) const {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < x.size(); ++j) sum += weights_[j] * x[j] * x[j];
    return std::sqrt(sum);
  }

  SpectralField to_field(const Eigen::RowVectorXd& x) const {
    SpectralField::ModeMap m;
    for (size_t j = 0; j < reps_.size(); ++j) {
      const Vec2c c = {cplx(x[4 * j], x[4 * j + 1]), cplx(x[4 * j + 2], x[4 * j + 3])};
      if (c[0] == cplx{} && c[1] == cplx{}) continue;
      m[reps_[j]] = c;
      m[-reps_[j]] = {std::conj(c[0]), std::conj(c[1])};
    }
    return make_field_unchecked(truncation_, std::move(m));
  }

 private:
  int truncation_ = 0;
  std::vector<WaveIndex> reps_;
  std::vector<double> weights_;
  Eigen::MatrixXd data_;
};

// Constant term of the least-squares polynomial of degree d in h over all rows.
Eigen::RowVectorXd poly_intercept(const Eigen::MatrixXd& Y, const std::vector<double>& h, int d) {
  const Eigen::Index m = Y.rows();
  double href = 0.0;
  for (double x : h) href = std::max(href, std::abs(x));
  if (href == 0.0) href = 1.0;
  Eigen::MatrixXd V(m, d + 1);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double x = h[i] / href;
    double p = 1.0;
    for (int j = 0; j <= d; ++j) {
      V(i, j) = p;
      p *= x;
    }
  }
  const Eigen::MatrixXd coef = V.colPivHouseholderQr().solve(Y);
  return coef.row(0);
}

int tail_count(int M) { return std::max(1, (M + 2) / 3); }

}  // namespace

LimitEstimate estimate_limit(const std::vector<SpectralField>& samples, const std::vector<double>& h, double s,
                             const ToleranceSet& tols) {
  if (samples.empty()) throw std::invalid_argument("no samples to extrapolate");
  if (h.size() != samples.size()) throw std::invalid_argument("decay variable length mismatch");
  const int M = static_cast<int>(samples.size());
  std::vector<const SpectralField*> ptrs;
  for (const auto& f : samples) ptrs.push_back(&f);
  const FieldStack stack(ptrs, s);
  const Eigen::MatrixXd& Y = stack.data();

  LimitEstimate out;
  if (tols.estimator == LimitEstimator::tail_average) {
    const int t = tail_count(M);
    const Eigen::RowVectorXd mean = Y.bottomRows(t).colwise().mean();
    double spread = 0.0;
    for (int i = M - t; i < M; ++i) spread = std::max(spread, stack.norm(Y.row(i) - mean));
    out.value = stack.to_field(mean);
    out.uncertainty = spread;
    out.method = "tail-average(" + std::to_string(t) + ")";
    return out;
  }

  const int W = tols.window > 0 ? std::min(tols.window, M) : M;
  const Eigen::MatrixXd Yw = Y.bottomRows(W);
  const std::vector<double> hw(h.end() - W, h.end());
  Eigen::RowVectorXd prev = Yw.row(W - 1);
  Eigen::RowVectorXd best = prev;
  double best_err = std::numeric_limits<double>::infinity();
  int best_d = 0;
  const int dmax = std::min(tols.max_degree, W - 1);
  for (int d = 1; d <= dmax; ++d) {
    const Eigen::RowVectorXd e = poly_intercept(Yw, hw, d);
    const double err = stack.norm(e - prev);
    if (err < best_err) {
      best_err = err;
      best = e;
      best_d = d;
    }
    prev = e;
  }
  if (best_d == 0) best_err = M > 1 ? stack.norm(Y.row(M - 1) - Y.row(M - 2)) : 0.0;
  out.value = stack.to_field(best);
  out.uncertainty = best_err;
  out.method = "extrapolate(degree " + std::to_string(best_d) + ", window " + std::to_string(W) + ")";
  return out;
}

// ---------------------------------------------------------------- extraction

namespace {

bool strictly_decreasing(const std::vector<double>& x, int from) {
  for (int i = std::max(from, 1); i < static_cast<int>(x.size()); ++i)
    if (!(x[i] < x[i - 1])) return false;
  return true;
}

int tail_half_start(int M) { return M - std::max(3, (M + 1) / 2); }

std::vector<double> decay_variable(const SequenceData& data) {
  std::vector<double> h;
  const auto lab = data.labels();
  for (int i = 0; i < data.size(); ++i)
    h.push_back(data.alphas.empty() ? 1.0 / lab[i] : 1.0 / data.alphas[i]);
  return h;
}

double noise_floor(const ExpansionResult& e, int k, int i, double data_scale) {
  double n = e.limit_uncertainty + 1e-15 * data_scale;
  for (int j = 0; j < k && j < e.depth(); ++j) {
    const double u = j < static_cast<int>(e.direction_uncertainty.size()) ? e.direction_uncertainty[j] : 0.0;
    n += e.terms[j].gammas[i] * u;
  }
  return e.tols.noise_factor * n;
}

}  // namespace

ExpansionResult extract(const SequenceData& data_in, const NestedScale& scale, const ToleranceSet& tols,
                        CoefficientRule rule) {
  scale.validate();
  data_in.validate(tols.min_window);
  SequenceData data = data_in;
  if (data.indices.empty()) data.indices = data.labels();

  ExpansionResult e;
  e.scale = scale;
  e.rule = rule;
  e.tols = tols;
  e.alphas = data.alphas;
  e.indices = data.indices;

  const int M = data.size();
  const double s0 = scale.exponent(0);
  std::vector<double> h = decay_variable(data);
  std::vector<double> vnorm(M);
  double data_scale = 0.0;
  for (int i = 0; i < M; ++i) {
    vnorm[i] = norm_Ds(data.fields[i], s0);
    data_scale = std::max(data_scale, vnorm[i]);
  }

  // Limit of the sequence in Z_0.
  const double cauchy = norm_Ds(data.fields[M - 1] - data.fields[M - 2], s0);
  if (data_scale == 0.0) {
    e.limit = SpectralField(data.fields.back().truncation());
    e.decisions.push_back("limit: every sample is zero");
  } else if (cauchy <= tols.limit * data_scale) {
    e.limit = data.fields.back();
    e.limit_uncertainty = cauchy;
    e.decisions.push_back("limit: last sample (Cauchy tail within tolerance)");
    if (vnorm[M - 1] <= cauchy) {
      e.limit = SpectralField(data.fields.back().truncation());
      e.limit_uncertainty = 0.0;
      e.decisions.push_back("limit: estimate below its own uncertainty, set to zero");
    }
  } else {
    const int t0 = tail_half_start(M);
    std::vector<double> diffs;
    for (int i = std::max(t0, 1); i < M; ++i) diffs.push_back(norm_Ds(data.fields[i] - data.fields[i - 1], s0));
    if (diffs.size() >= 2 && !(diffs.back() < diffs.front()))
      throw NotConvergentError("no convergence in Z_0: successive differences do not shrink over the tail");
    ToleranceSet lt = tols;
    if (tols.estimator == LimitEstimator::tail_average) {
      lt.estimator = LimitEstimator::extrapolate;
      lt.max_degree = 2;
      lt.window = 3;
    }
    const LimitEstimate est = estimate_limit(data.fields, h, s0, lt);
    e.limit = est.value;
    e.limit_uncertainty = est.uncertainty;
    e.decisions.push_back("limit: " + est.method);
    if (norm_Ds(est.value, s0) <= est.uncertainty) {
      e.limit = SpectralField(data.fields.back().truncation());
      e.limit_uncertainty = 0.0;
      e.decisions.push_back("limit: estimate below its own uncertainty, set to zero");
    }
  }

  std::vector<SpectralField> rem(M);
  double max_dev = 0.0;
  for (int i = 0; i < M; ++i) {
    rem[i] = data.fields[i] - e.limit;
    max_dev = std::max(max_dev, norm_Ds(rem[i], s0));
  }
  if (max_dev <= tols.limit * std::max(data_scale, std::numeric_limits<double>::min())) {
    e.kind = ExpansionKind::trivial;
    e.decisions.push_back("kind: trivial (every sample equals the limit)");
    return e;
  }

  // Samples that coincide with the limit carry no direction.
  {
    std::vector<int> keep;
    const double lnorm = norm_Ds(e.limit, s0);
    for (int i = 0; i < M; ++i)
      if (norm_Ds(rem[i], s0) > 4.0 * std::numeric_limits<double>::epsilon() * lnorm) keep.push_back(i);
    if (static_cast<int>(keep.size()) < M) {
      if (static_cast<int>(keep.size()) < 3)
        throw ExtractionError("fewer than three samples differ from the estimated limit");
      e.decisions.push_back("window: dropped " + std::to_string(M - keep.size()) +
                            " samples equal to the limit");
      SequenceData d2;
      std::vector<SpectralField> r2;
      std::vector<double> h2, n2;
      std::vector<int> idx2;
      for (int i : keep) {
        d2.fields.push_back(data.fields[i]);
        if (!data.alphas.empty()) d2.alphas.push_back(data.alphas[i]);
        idx2.push_back(data.indices[i]);
        r2.push_back(rem[i]);
        h2.push_back(h[i]);
        n2.push_back(vnorm[i]);
      }
      d2.indices = idx2;
      data = std::move(d2);
      rem = std::move(r2);
      h = std::move(h2);
      vnorm = std::move(n2);
      e.indices = data.indices;
      e.alphas = data.alphas;
    }
  }
  const int W = data.size();
  const int tail = tail_count(W);
  const int half = tail_half_start(W);

  {
    const double first = norm_Ds(rem[half], s0);
    const double last = norm_Ds(rem[W - 1], s0);
    if (!(last < first)) throw StagnationError("Gamma_1 does not decay over the tail of the window");
  }

  const int K = std::min(tols.max_levels, scale.levels());
  if (K < 1) throw std::invalid_argument("nested scale provides no expansion level");
  bool finite = false;
  for (int k = 1; k <= K; ++k) {
    const double sp = scale.exponent(k - 1);
    const double sk = scale.exponent(k);
    ExpansionTerm term;
    term.gammas.resize(W);
    term.witnesses.resize(W);
    std::vector<double> rnorm(W);
    parallel_for(W, [&](int i) { rnorm[i] = norm_Ds(rem[i], sp); });
    std::vector<SpectralField> unit(W);
    for (int i = 0; i < W; ++i) {
      if (!(rnorm[i] > 0.0))
        throw ExtractionError("level " + std::to_string(k) + " remainder vanished at sample " +
                              std::to_string(data.indices[i]));
      unit[i] = (1.0 / rnorm[i]) * rem[i];
    }
    const LimitEstimate dir = estimate_limit(unit, h, sk, tols);
    double witness_scale = 0.0;
    for (int i = 0; i < W; ++i) witness_scale = std::max(witness_scale, norm_Ds(unit[i], sk));
    const double dnorm = norm_Ds(dir.value, sk);
    const bool zero = !(dnorm >= tols.zero * witness_scale) || dnorm == 0.0;
    e.decisions.push_back("direction " + std::to_string(k) + ": " + dir.method);

    if (rule == CoefficientRule::projection && !zero) {
      term.direction = (1.0 / dnorm) * dir.value;
      e.direction_uncertainty.push_back(dir.uncertainty / dnorm);
      const double ww = inner_Ds(term.direction, term.direction, sp);
      for (int i = 0; i < W; ++i) {
        const double g = inner_Ds(rem[i], term.direction, sp) / ww;
        if (!(g > 0.0))
          throw ExtractionError("level " + std::to_string(k) + " projection coefficient is not positive at sample " +
                                std::to_string(data.indices[i]));
        term.gammas[i] = g;
        term.witnesses[i] = (1.0 / g) * rem[i];
      }
    } else {
      term.direction = zero ? SpectralField(dir.value.truncation()) : dir.value;
      e.direction_uncertainty.push_back(dir.uncertainty);
      if (zero) e.decisions.push_back("direction " + std::to_string(k) + ": zero");
      for (int i = 0; i < W; ++i) {
        term.gammas[i] = rnorm[i];
        term.witnesses[i] = unit[i];
      }
    }
    e.terms.push_back(term);

    // Stabilization test on the tail.
    std::vector<SpectralField> next(W);
    bool stable = !zero;
    bool below_floor = true;
    bool resolution_limited = false;
    for (int i = 0; i < W; ++i) {
      next[i] = rem[i] - term.gammas[i] * term.direction;
      if (i < W - tail) continue;
      const double nf = noise_floor(e, k - 1, i, vnorm[i] + norm_Ds(e.limit, s0));
      const double delta = norm_Ds(term.witnesses[i] - term.direction, sk);
      if (!(delta <= std::max(tols.finite, nf / term.gammas[i]))) stable = false;
      if (delta > tols.finite) resolution_limited = true;
      const double nn = norm_Ds(next[i], sk);
      if (!(nn <= std::max(tols.floor * e.terms[0].gammas[i], nf))) below_floor = false;
    }
    if (stable) {
      finite = true;
      e.decisions.push_back("level " + std::to_string(k) + ": witnesses stabilized, expansion is finite");
      if (resolution_limited)
        e.decisions.push_back("level " + std::to_string(k) +
                              ": stabilization holds only within the propagated noise floor");
      break;
    }
    if (below_floor) {
      e.depth_capped = true;
      e.decisions.push_back("level " + std::to_string(k) + ": next coefficient below the noise floor");
      break;
    }
    if (k == K) {
      e.depth_capped = true;
      e.decisions.push_back("depth: reached level cap " + std::to_string(K));
      break;
    }
    rem = std::move(next);
  }

  const int depth = e.depth();
  int last_nonzero = 0;
  for (int k = 0; k < depth; ++k)
    if (!e.terms[k].direction.empty()) last_nonzero = k + 1;
  if (finite) {
    e.kind = ExpansionKind::finite_unitary;
  } else if (last_nonzero < depth) {
    e.kind = ExpansionKind::degenerate;
    e.degenerate_N = last_nonzero;
  } else {
    e.kind = ExpansionKind::infinite_unitary;
  }
  if (e.depth_capped) e.decisions.push_back("kind: " + to_string(e.kind) + " is provisional (finite window)");
  return e;
}

ExpansionResult extract_strict(const SequenceData& data, const NestedScale& scale, const ToleranceSet& tols) {
  return extract(data, scale, tols, CoefficientRule::norm);
}

ExpansionResult extract_unitary(const SequenceData& data, const NestedScale& scale, const ToleranceSet& tols) {
  return extract(data, scale, tols, CoefficientRule::projection);
}

// ---------------------------------------------------------------- restructure

ExpansionResult restructure(const ExpansionResult& in, const ToleranceSet& tols) {
  ExpansionResult e = in;
  if (e.kind == ExpansionKind::trivial || e.terms.empty()) {
    e.kind = ExpansionKind::trivial;
    e.terms.clear();
    e.degenerate_N.reset();
    return e;
  }
  const int K = e.depth();
  std::vector<double> norms(K);
  double largest = 0.0;
  for (int k = 0; k < K; ++k) {
    norms[k] = norm_Ds(e.terms[k].direction, e.scale.exponent(k + 1));
    largest = std::max(largest, norms[k]);
  }
  std::vector<bool> zero(K);
  for (int k = 0; k < K; ++k) zero[k] = largest == 0.0 || norms[k] < tols.zero * largest;
  int last_nonzero = 0;
  for (int k = 0; k < K; ++k)
    if (!zero[k]) last_nonzero = k + 1;

  // Remove zero terms that precede a nonzero one, last first, so the
  // witness of the following term absorbs the removed remainder.
  std::vector<ExpansionTerm> terms = e.terms;
  std::vector<double> unc = e.direction_uncertainty;
  unc.resize(K, 0.0);
  NestedScale scale = e.scale;
  std::vector<bool> z = zero;
  for (int k = last_nonzero - 2; k >= 0; --k) {
    if (!z[k]) continue;
    ExpansionTerm& nxt = terms[k + 1];
    const ExpansionTerm& cur = terms[k];
    for (size_t i = 0; i < nxt.witnesses.size(); ++i)
      nxt.witnesses[i] = (cur.gammas[i] / nxt.gammas[i]) * cur.witnesses[i];
    terms.erase(terms.begin() + k);
    unc.erase(unc.begin() + k);
    z.erase(z.begin() + k);
    if (scale.regime != ScaleRegime::single_space) scale = scale.without(k + 1);
    e.decisions.push_back("restructure: removed zero term at level " + std::to_string(k + 1));
  }
  const int nonzero = static_cast<int>(std::count(z.begin(), z.end(), false));

  for (size_t k = 0; k < terms.size(); ++k) {
    if (z[k]) {
      terms[k].direction = SpectralField(terms[k].direction.truncation());
      continue;
    }
    const double nk = norm_Ds(terms[k].direction, scale.exponent(static_cast<int>(k) + 1));
    if (std::abs(nk - 1.0) <= 4.0 * std::numeric_limits<double>::epsilon()) continue;
    terms[k].direction *= 1.0 / nk;
    for (auto& g : terms[k].gammas) g *= nk;
    for (auto& w : terms[k].witnesses) w *= 1.0 / nk;
    unc[k] /= nk;
    e.decisions.push_back("restructure: normalized level " + std::to_string(k + 1));
  }

  e.terms = std::move(terms);
  e.direction_uncertainty = std::move(unc);
  e.scale = scale;
  if (nonzero < static_cast<int>(e.terms.size())) {
    e.kind = ExpansionKind::degenerate;
    e.degenerate_N = nonzero;
  } else {
    e.degenerate_N.reset();
    if (e.kind == ExpansionKind::degenerate) e.kind = ExpansionKind::infinite_unitary;
  }
  return e;
}

// ---------------------------------------------------------------- verification

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck* VerificationReport::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

VerificationReport verify_expansion(const ExpansionResult& e, const SequenceData& data) {
  VerificationReport rep;
  const auto lab = data.labels();
  std::vector<int> pos;
  for (int n : e.indices) {
    auto it = std::find(lab.begin(), lab.end(), n);
    if (it == lab.end()) throw std::invalid_argument("sequence data lacks sample " + std::to_string(n));
    pos.push_back(static_cast<int>(it - lab.begin()));
  }
  const int M = static_cast<int>(pos.size());
  const int K = e.depth();
  for (const auto& t : e.terms)
    if (static_cast<int>(t.gammas.size()) != M || static_cast<int>(t.witnesses.size()) != M)
      throw std::invalid_argument("expansion term length differs from its window");
  const double s0 = e.scale.exponent(0);
  const int half = tail_half_start(M);
  std::vector<double> sample_scale(M);
  for (int i = 0; i < M; ++i) sample_scale[i] = norm_Ds(data.fields[pos[i]], s0) + norm_Ds(e.limit, s0);

  // Reconstruction identity at every recorded level.
  {
    AxiomCheck c{"reconstruction", true, 0.0, ""};
    for (int i = 0; i < M; ++i) {
      const SpectralField& vn = data.fields[pos[i]];
      const double scale = std::max({norm_Ds(vn, s0), norm_Ds(e.limit, s0), std::numeric_limits<double>::min()});
      if (K == 0) {
        c.value = std::max(c.value, norm_Ds(vn - e.limit, s0) / scale);
        continue;
      }
      for (int k = 0; k < K; ++k) {
        SpectralField r = vn - e.partial_sum(k, i);
        r -= e.terms[k].gammas[i] * e.terms[k].witnesses[i];
        c.value = std::max(c.value, norm_Ds(r, s0) / scale);
      }
    }
    c.passed = c.value <= (K == 0 ? e.tols.limit : e.tols.reconstruction);
    c.detail = "max relative defect of the coefficient identity";
    rep.checks.push_back(c);
  }
  if (K == 0) return rep;

  {
    AxiomCheck c{"gamma1_decay", true, 0.0, ""};
    const auto& g = e.terms[0].gammas;
    c.passed = strictly_decreasing(g, half + 1) && g.back() < g[half];
    c.value = g.back() / g[half];
    c.detail = "Gamma_1 strictly decreasing over the tail half";
    rep.checks.push_back(c);
  }
  {
    AxiomCheck c{"gamma_ratio_decay", true, 0.0, ""};
    for (int k = 0; k + 1 < K; ++k) {
      std::vector<double> ratio(M);
      for (int i = 0; i < M; ++i) ratio[i] = e.terms[k + 1].gammas[i] / e.terms[k].gammas[i];
      if (!strictly_decreasing(ratio, half + 1)) c.passed = false;
      c.value = std::max(c.value, ratio.back());
    }
    c.detail = "Gamma_{k+1}/Gamma_k strictly decreasing over the tail half";
    rep.checks.push_back(c);
  }
  {
    AxiomCheck c{"witness_convergence", true, 0.0, ""};
    for (int k = 0; k < K; ++k) {
      const double sk = e.scale.exponent(k + 1);
      std::vector<double> d(M);
      bool small = true;
      for (int i = 0; i < M; ++i) {
        d[i] = norm_Ds(e.terms[k].witnesses[i] - e.terms[k].direction, sk);
        if (i >= half && d[i] > std::max(e.tols.finite, noise_floor(e, k, i, sample_scale[i]) / e.terms[k].gammas[i]))
          small = false;
      }
      if (!small && !strictly_decreasing(d, half + 1)) c.passed = false;
      c.value = std::max(c.value, d.back());
    }
    c.detail = "||w_n^(k) - w_k||_{Z_k} shrinking over the tail half";
    rep.checks.push_back(c);
  }
  if (e.rule == CoefficientRule::norm) {
    AxiomCheck c{"unit_witness", true, 0.0, ""};
    for (int k = 0; k < K; ++k) {
      const double sp = e.scale.exponent(k);
      for (int i = 0; i < M; ++i)
        c.value = std::max(c.value, std::abs(norm_Ds(e.terms[k].witnesses[i], sp) - 1.0));
    }
    c.passed = c.value <= e.tols.unit * 10.0;
    c.detail = "max | ||w_n^(k)||_{Z_{k-1}} - 1 |";
    rep.checks.push_back(c);
  } else {
    AxiomCheck c{"unit_direction", true, 0.0, ""};
    const int limit = e.kind == ExpansionKind::degenerate ? e.degenerate_N.value_or(0) : K;
    for (int k = 0; k < K; ++k) {
      const double nk = norm_Ds(e.terms[k].direction, e.scale.exponent(k + 1));
      const double dev = k < limit ? std::abs(nk - 1.0) : nk;
      c.value = std::max(c.value, dev);
    }
    c.passed = c.value <= 1e-12;
    c.detail = "unit directions, zero beyond the degenerate index";
    rep.checks.push_back(c);
  }
  if (e.kind == ExpansionKind::finite_unitary) {
    AxiomCheck c{"finite_identity", true, 0.0, ""};
    const auto& t = e.terms[K - 1];
    const double sk = e.scale.exponent(K);
    for (int i = M - tail_count(M); i < M; ++i) {
      const double d = norm_Ds(t.witnesses[i] - t.direction, sk);
      const double bound = std::max(e.tols.finite, noise_floor(e, K - 1, i, sample_scale[i]) / t.gammas[i]);
      c.value = std::max(c.value, d / bound);
    }
    c.passed = c.value <= 1.0 && !t.direction.empty();
    c.detail = "last witnesses equal the last direction, relative to the stabilization bound";
    rep.checks.push_back(c);
  }
  {
    AxiomCheck c{"remainder_decay", true, 0.0, ""};
    const int top = e.kind == ExpansionKind::finite_unitary ? K - 1 : K;
    for (int m = 1; m <= top; ++m) {
      const int zi = std::min(m + 1, e.scale.levels());
      const double sz = e.scale.exponent(zi);
      std::vector<double> ratio(M);
      for (int i = 0; i < M; ++i) {
        const SpectralField r = data.fields[pos[i]] - e.partial_sum(m, i);
        ratio[i] = norm_Ds(r, sz) / e.terms[m - 1].gammas[i];
      }
      if (!strictly_decreasing(ratio, half + 1)) c.passed = false;
      c.value = std::max(c.value, ratio.back());
      rep.remainder_ratios.push_back(ratio);
    }
    c.detail = "remainder after k terms over Gamma_k strictly decreasing over the tail half";
    rep.checks.push_back(c);
  }
  if (e.kind == ExpansionKind::degenerate) {
    AxiomCheck c{"degenerate_remainder", true, 0.0, ""};
    const int N = e.degenerate_N.value_or(0);
    for (int m = N; m < K; ++m) {
      const double sz = e.scale.exponent(m + 1);
      std::vector<double> ratio(M);
      for (int i = 0; i < M; ++i) {
        const SpectralField r = data.fields[pos[i]] - e.partial_sum(N, i);
        ratio[i] = norm_Ds(r, sz) / e.terms[m].gammas[i];
      }
      if (!strictly_decreasing(ratio, half + 1)) c.passed = false;
      c.value = std::max(c.value, ratio.back());
    }
    c.detail = "||R_{N,n}||_{Z_{m+1}} / Gamma_{m+1,n} strictly decreasing for m >= N";
    rep.checks.push_back(c);
  }
  return rep;
}

// ---------------------------------------------------------------- uniqueness

UniquenessReport uniqueness_check(const ExpansionResult& a, const ExpansionResult& b, double tol) {
  UniquenessReport r;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < a.window(); ++i) {
    auto it = std::find(b.indices.begin(), b.indices.end(), a.indices[i]);
    if (it == b.indices.end()) {
      r.unconstrained.push_back(a.indices[i]);
    } else {
      pairs.emplace_back(i, static_cast<int>(it - b.indices.begin()));
      r.overlap.push_back(a.indices[i]);
    }
  }
  for (int n : b.indices)
    if (std::find(a.indices.begin(), a.indices.end(), n) == a.indices.end()) r.unconstrained.push_back(n);
  std::sort(r.unconstrained.begin(), r.unconstrained.end());

  const double s0 = a.scale.exponent(0);
  const double lscale = std::max({norm_Ds(a.limit, s0), norm_Ds(b.limit, s0)});
  r.max_limit_diff = norm_Ds(a.limit - b.limit, s0) / (lscale > 0.0 ? lscale : 1.0);
  r.limits_match = lscale == 0.0 || r.max_limit_diff <= tol;

  r.structure_match = a.depth() == b.depth() && a.kind == b.kind && a.degenerate_N == b.degenerate_N;
  for (int k = 0; k < std::min(a.depth(), b.depth()) && r.structure_match; ++k)
    if (a.terms[k].direction.empty() != b.terms[k].direction.empty()) r.structure_match = false;

  const int common = std::min(a.depth(), b.depth());
  for (int k = 0; k < common; ++k) {
    for (auto [i, j] : pairs) {
      const double ga = a.terms[k].gammas[i], gb = b.terms[k].gammas[j];
      r.max_gamma_rel_diff = std::max(r.max_gamma_rel_diff, std::abs(ga - gb) / std::max(std::abs(ga), std::abs(gb)));
    }
    const double sk = a.scale.exponent(std::min(k + 1, a.scale.levels()));
    const double na = norm_Ds(a.terms[k].direction, sk);
    const double nb = norm_Ds(b.terms[k].direction, sk);
    const double d = norm_Ds(a.terms[k].direction - b.terms[k].direction, sk);
    const double ref = std::max(na, nb);
    r.max_direction_diff = std::max(r.max_direction_diff, ref > 0.0 ? d / ref : 0.0);
  }
  r.gammas_match = r.max_gamma_rel_diff <= tol;
  r.directions_match = r.max_direction_diff <= tol;

  for (auto [i, j] : pairs) {
    const SpectralField sa = a.partial_sum(a.depth(), i);
    const SpectralField sb = b.partial_sum(b.depth(), j);
    const double ref = std::max({norm_Ds(sa, s0), norm_Ds(sb, s0), std::numeric_limits<double>::min()});
    r.max_reconstruction_diff = std::max(r.max_reconstruction_diff, norm_Ds(sa - sb, s0) / ref);
  }
  r.reconstruction_match = r.max_reconstruction_diff <= tol;
  return r;
}

}  // namespace grashof
