#include "grashof/order.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "grashof/parallel.hpp"
#include "grashof/steady.hpp"

namespace grashof {

void PositiveSequence::validate() const {
  for (double v : values)
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::invalid_argument("sequence '" + label + "' has a value that is not a positive finite number");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::succ: return "succ";
    case Verdict::sim: return "sim";
    case Verdict::prec: return "prec";
    case Verdict::undecided: return "undecided";
  }
  return "undecided";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "succ") return Verdict::succ;
  if (s == "sim") return Verdict::sim;
  if (s == "prec") return Verdict::prec;
  if (s == "undecided") return Verdict::undecided;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

std::string to_string(ChiTag t) {
  switch (t) {
    case ChiTag::S1: return "S1";
    case ChiTag::S2: return "S2";
    case ChiTag::S3: return "S3";
    case ChiTag::mixed: return "mixed";
  }
  return "mixed";
}

namespace {

int tail_start(int M) { return M - (M + 1) / 2; }

}  // namespace

OrderRelation compare(const PositiveSequence& xi, const PositiveSequence& eta, const std::vector<double>& scale,
                      const OrderTolerances& tols) {
  const int M = static_cast<int>(xi.values.size());
  if (static_cast<int>(eta.values.size()) != M || static_cast<int>(scale.size()) != M)
    throw std::invalid_argument("compared sequences '" + xi.label + "' and '" + eta.label + "' differ in length");
  if (M < tols.min_window)
    throw std::invalid_argument("comparison window has " + std::to_string(M) + " samples, need at least " +
                                std::to_string(tols.min_window));
  xi.validate();
  eta.validate();
  for (int i = 0; i < M; ++i) {
    if (!(scale[i] > 0.0)) throw std::invalid_argument("comparison scale must be positive");
    if (i > 0 && !(scale[i] > scale[i - 1])) throw std::invalid_argument("comparison scale must increase");
  }

  const int t0 = tail_start(M);
  const int T = M - t0;
  std::vector<double> x(T), y(T), r(T);
  for (int i = 0; i < T; ++i) {
    r[i] = xi.values[t0 + i] / eta.values[t0 + i];
    x[i] = std::log(scale[t0 + i]);
    y[i] = std::log(xi.values[t0 + i]) - std::log(eta.values[t0 + i]);
  }
  const double xm = std::accumulate(x.begin(), x.end(), 0.0) / T;
  const double ym = std::accumulate(y.begin(), y.end(), 0.0) / T;
  double sxy = 0.0, sxx = 0.0;
  for (int i = 0; i < T; ++i) {
    sxy += (x[i] - xm) * (y[i] - ym);
    sxx += (x[i] - xm) * (x[i] - xm);
  }
  OrderRelation rel;
  rel.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  const auto [lo, hi] = std::minmax_element(y.begin(), y.end());
  rel.dispersion = *hi - *lo;
  bool increasing = true, decreasing = true;
  for (int i = 1; i < T; ++i) {
    if (!(r[i] > r[i - 1])) increasing = false;
    if (!(r[i] < r[i - 1])) decreasing = false;
  }
  if (rel.slope > tols.slope && increasing) {
    rel.verdict = Verdict::succ;
  } else if (rel.slope < -tols.slope && decreasing) {
    rel.verdict = Verdict::prec;
  } else if (std::abs(rel.slope) <= tols.slope && rel.dispersion <= tols.disp) {
    rel.verdict = Verdict::sim;
    rel.lambda = std::accumulate(r.begin(), r.end(), 0.0) / T;
  }
  return rel;
}

int RelationMatrix::index(const std::string& label) const {
  for (size_t i = 0; i < sequences.size(); ++i)
    if (sequences[i].label == label) return static_cast<int>(i);
  return -1;
}

const OrderRelation& RelationMatrix::at(const std::string& a, const std::string& b) const {
  const int i = index(a), j = index(b);
  if (i < 0 || j < 0) throw std::out_of_range("relation matrix lacks '" + (i < 0 ? a : b) + "'");
  return relations[i][j];
}

RelationMatrix relation_matrix(std::vector<PositiveSequence> sequences, const std::vector<double>& scale,
                               const OrderTolerances& tols) {
  RelationMatrix m;
  m.sequences = std::move(sequences);
  m.scale = scale;
  const int S = static_cast<int>(m.sequences.size());
  m.relations.assign(S, std::vector<OrderRelation>(S));
  parallel_for(S, [&](int i) {
    for (int j = 0; j < S; ++j) m.relations[i][j] = compare(m.sequences[i], m.sequences[j], scale, tols);
  });
  return m;
}

namespace {

std::string gamma_label(int k) { return "gamma(" + std::to_string(k) + ")"; }
std::string alpha_gamma_label(int k) { return "alpha*gamma(" + std::to_string(k) + ")"; }
std::string alpha_gamma2_label(int j, int k) {
  return "alpha*gamma(" + std::to_string(j) + ")*gamma(" + std::to_string(k) + ")";
}

}  // namespace

std::vector<std::pair<std::string, std::string>> structural_relations(int K) {
  std::vector<std::pair<std::string, std::string>> out;
  out.emplace_back("one", gamma_label(1));
  for (int k = 1; k < K; ++k) out.emplace_back(gamma_label(k), gamma_label(k + 1));
  out.emplace_back("alpha", "one");
  for (int k = 1; k <= K; ++k) out.emplace_back(alpha_gamma_label(k), gamma_label(k));
  out.emplace_back("alpha", alpha_gamma_label(1));
  for (int k = 1; k < K; ++k) out.emplace_back(alpha_gamma_label(k), alpha_gamma_label(k + 1));
  for (int k = 1; k <= K; ++k) out.emplace_back(alpha_gamma_label(k), alpha_gamma2_label(1, k));
  for (int k = 1; k <= K; ++k)
    for (int j = 1; j < k; ++j) out.emplace_back(alpha_gamma2_label(j, k), alpha_gamma2_label(j + 1, k));
  for (int j = 1; j <= K; ++j)
    for (int k = j; k < K; ++k) out.emplace_back(alpha_gamma2_label(j, k), alpha_gamma2_label(j, k + 1));
  return out;
}

RelationMatrix build_S(const std::vector<double>& alphas, const std::vector<std::vector<double>>& gammas,
                       const OrderTolerances& tols) {
  if (gammas.empty()) throw std::invalid_argument("coefficient set needs at least one gamma level");
  const int M = static_cast<int>(alphas.size());
  for (const auto& g : gammas)
    if (static_cast<int>(g.size()) != M) throw std::invalid_argument("gamma level length differs from alphas");
  const int K = static_cast<int>(gammas.size());

  std::vector<PositiveSequence> seqs;
  seqs.push_back({"one", std::vector<double>(M, 1.0)});
  seqs.push_back({"alpha", alphas});
  for (int k = 1; k <= K; ++k) seqs.push_back({gamma_label(k), gammas[k - 1]});
  for (int k = 1; k <= K; ++k) {
    PositiveSequence s{alpha_gamma_label(k), std::vector<double>(M)};
    for (int i = 0; i < M; ++i) s.values[i] = alphas[i] * gammas[k - 1][i];
    seqs.push_back(std::move(s));
  }
  for (int j = 1; j <= K; ++j)
    for (int k = j; k <= K; ++k) {
      PositiveSequence s{alpha_gamma2_label(j, k), std::vector<double>(M)};
      for (int i = 0; i < M; ++i) s.values[i] = alphas[i] * gammas[j - 1][i] * gammas[k - 1][i];
      seqs.push_back(std::move(s));
    }
  RelationMatrix m = relation_matrix(std::move(seqs), alphas, tols);

  std::ostringstream bad;
  int failures = 0;
  for (const auto& [a, b] : structural_relations(K)) {
    const OrderRelation& r = m.at(a, b);
    if (r.verdict != Verdict::succ) {
      if (failures++ < 4) bad << " " << a << " vs " << b << " read " << to_string(r.verdict) << ";";
    }
  }
  if (failures > 0)
    throw InconsistencyError(std::to_string(failures) + " structural relation(s) of the coefficient table fail:" +
                             bad.str());
  return m;
}

Comparability total_comparability(const RelationMatrix& m) {
  Comparability c;
  const int S = static_cast<int>(m.sequences.size());
  for (int i = 0; i < S; ++i)
    for (int j = i + 1; j < S; ++j)
      if (m.relations[i][j].verdict == Verdict::undecided) {
        c.total = false;
        c.undecided.emplace_back(m.sequences[i].label, m.sequences[j].label);
      }
  return c;
}

ChiAnalysis chi_trichotomy(const std::vector<double>& chi, const RelationMatrix& m, const OrderTolerances& tols) {
  ChiAnalysis a;
  a.chi = chi;
  const bool zero = std::all_of(chi.begin(), chi.end(), [&](double c) { return std::abs(c) <= tols.chi_zero; });
  const bool pos = std::all_of(chi.begin(), chi.end(), [&](double c) { return c > tols.chi_zero; });
  const bool neg = std::all_of(chi.begin(), chi.end(), [&](double c) { return c < -tols.chi_zero; });
  if (zero) {
    a.tag = ChiTag::S1;
  } else if (pos || neg) {
    a.tag = pos ? ChiTag::S2 : ChiTag::S3;
    auto seqs = m.sequences;
    PositiveSequence s{"abs_chi", std::vector<double>(chi.size())};
    for (size_t i = 0; i < chi.size(); ++i) s.values[i] = std::abs(chi[i]);
    seqs.push_back(std::move(s));
    a.extended = relation_matrix(std::move(seqs), m.scale, tols);
    a.comparability = total_comparability(*a.extended);
  } else {
    a.tag = ChiTag::mixed;
  }
  return a;
}

Constant estimate_constant(const std::vector<double>& values, const std::vector<double>& h) {
  const int M = static_cast<int>(values.size());
  if (M == 0 || static_cast<int>(h.size()) != M) throw std::invalid_argument("constant estimate needs matching samples");
  Constant c;
  const int t0 = tail_start(M);
  const auto [lo, hi] = std::minmax_element(values.begin() + t0, values.end());
  const double mean = std::accumulate(values.begin() + t0, values.end(), 0.0) / (M - t0);
  c.dispersion = mean != 0.0 ? (*hi - *lo) / std::abs(mean) : (*hi - *lo);

  // Convergence order from successive differences over the tail; a stable
  // order other than one switches the extrapolation variable to h^p.
  double p = 1.0;
  if (M - t0 >= 3) {
    std::vector<double> rates;
    bool usable = true;
    for (int i = t0; i + 2 < M && usable; ++i) {
      const double d0 = values[i + 1] - values[i], d1 = values[i + 2] - values[i + 1];
      const double lh = std::log(h[i] / h[i + 1]);
      if (d0 == 0.0 || d1 == 0.0 || (d0 > 0) != (d1 > 0) || !(lh > 0.0)) {
        usable = false;
        break;
      }
      rates.push_back(std::log(d0 / d1) / lh);
    }
    if (usable && !rates.empty()) {
      const auto [rlo, rhi] = std::minmax_element(rates.begin(), rates.end());
      const double rmean = std::accumulate(rates.begin(), rates.end(), 0.0) / rates.size();
      if (rmean > 0.05 && (*rhi - *rlo) <= 0.05 * rmean && std::abs(rmean - std::round(rmean)) > 0.05) p = rmean;
    }
  }
  c.order = p;
  std::vector<double> t(M);
  for (int i = 0; i < M; ++i) t[i] = std::pow(h[i], p);

  double href = 0.0;
  for (double x : t) href = std::max(href, std::abs(x));
  if (href == 0.0) href = 1.0;
  const Eigen::Map<const Eigen::VectorXd> y(values.data(), M);
  double prev = values.back();
  double best = prev;
  double best_err = M > 1 ? std::abs(values[M - 1] - values[M - 2]) : 0.0;
  bool found = false;
  for (int d = 1; d <= std::min(10, M - 1); ++d) {
    Eigen::MatrixXd V(M, d + 1);
    for (int i = 0; i < M; ++i) {
      double pw = 1.0;
      for (int j = 0; j <= d; ++j) {
        V(i, j) = pw;
        pw *= t[i] / href;
      }
    }
    const double e = V.colPivHouseholderQr().solve(y)(0);
    const double err = std::abs(e - prev);
    if (!found || err < best_err) {
      best = e;
      best_err = err;
      found = true;
    }
    prev = e;
  }
  c.value = best;
  c.uncertainty = best_err;
  return c;
}

const RelationCheck* ClassificationReport::find(const std::string& id) const {
  for (const auto& r : residuals)
    if (r.id == id) return &r;
  return nullptr;
}

namespace {

class Classifier {
 public:
  Classifier(const ExpansionResult& e, const SpectralField& g, const OrderTolerances& tols)
      : e_(e), g_(g), tols_(tols) {
    gnorm_ = norm_Vdual(g);
    if (!(gnorm_ > 0.0)) throw OrderError("limit forcing is zero");
    if (e.alphas.empty() || static_cast<int>(e.alphas.size()) != e.window())
      throw OrderError("classification needs one alpha per expansion sample");
    for (double a : e.alphas) h_.push_back(1.0 / a);
    rep_.tols = tols;
  }

  ClassificationReport run() {
    const SpectralField& v = e_.limit;
    equation("B(v,v)=0", bilinear_B(v, v));
    if (e_.kind == ExpansionKind::trivial || e_.depth() == 0) {
      rep_.branch = "laminar";
      equation("Av=g", stokes(v) - g_);
      return finish();
    }
    std::vector<std::vector<double>> gammas;
    for (const auto& t : e_.terms) gammas.push_back(t.gammas);
    rep_.matrix = build_S(e_.alphas, gammas, tols_);
    rep_.comparability = total_comparability(rep_.matrix);
    if (!rep_.comparability.total)
      rep_.warnings.push_back("coefficient set is not totally comparable on this window (" +
                              std::to_string(rep_.comparability.undecided.size()) + " undecided pairs)");

    const double vnorm = norm_V(v);
    const double stokes_gap = norm_V(v - inverse_stokes(g_));
    if (vnorm <= tols_.zero_gate * gnorm_) {
      rep_.decisions.push_back("limit is zero within the gate");
      zero_limit();
    } else if (stokes_gap <= tols_.zero_gate * gnorm_) {
      rep_.decisions.push_back("limit equals the Stokes solution within the gate");
      stokes_limit();
    } else {
      general();
    }
    return finish();
  }

 private:
  std::vector<double> product(std::initializer_list<int> gamma_levels, bool with_alpha) const {
    std::vector<double> out(e_.window(), 1.0);
    for (int i = 0; i < e_.window(); ++i) {
      if (with_alpha) out[i] *= e_.alphas[i];
      for (int k : gamma_levels) out[i] *= e_.terms[k - 1].gammas[i];
    }
    return out;
  }

  Verdict need(const std::string& a, const std::string& b) {
    const OrderRelation& r = rep_.matrix.at(a, b);
    rep_.decisions.push_back(a + " vs " + b + ": " + to_string(r.verdict));
    if (r.verdict == Verdict::undecided)
      throw ClassificationBlocked("relation between " + a + " and " + b + " is undecided on this window");
    return r.verdict;
  }

  Verdict need_chi(const std::string& a) {
    const RelationMatrix& m = *rep_.chi->extended;
    const OrderRelation& r = m.at(a, "abs_chi");
    rep_.decisions.push_back(a + " vs abs_chi: " + to_string(r.verdict));
    if (r.verdict == Verdict::undecided)
      throw ClassificationBlocked("relation between " + a + " and abs_chi is undecided on this window");
    return r.verdict;
  }

  double constant(const std::string& name, const std::vector<double>& values) {
    const Constant c = estimate_constant(values, h_);
    rep_.constants[name] = c;
    return c.value;
  }

  void equation(const std::string& id, const SpectralField& lhs) {
    record(id, norm_Vdual(lhs) / gnorm_);
  }

  void scalar(const std::string& id, double defect, double scale) {
    record(id, scale > 0.0 ? std::abs(defect) / scale : std::abs(defect));
  }

  void record(const std::string& id, double r) {
    RelationCheck c{id, r, r <= tols_.residual};
    if (!c.passed) {
      std::ostringstream os;
      os << "branch mismatch: " << id << " residual " << r << " exceeds " << tols_.residual;
      rep_.warnings.push_back(os.str());
    }
    rep_.residuals.push_back(c);
  }

  const SpectralField& w(int k) const { return e_.terms[k - 1].direction; }

  void require_second_term() const {
    if (e_.depth() < 2) throw ClassificationBlocked("expansion has no second term; the branch needs w_2");
  }

  void general() {
    const Verdict r = need("alpha*gamma(1)", "one");
    const SpectralField& v = e_.limit;
    if (r == Verdict::succ) {
      rep_.branch = "coupled_divergent";
      equation("Bs(v,w1)=0", bilinear_Bs(v, w(1)));
    } else {
      rep_.branch = "coupled_finite_mu";
      const double mu = r == Verdict::sim ? constant("mu", product({1}, true)) : 0.0;
      if (r == Verdict::prec) rep_.constants["mu"] = Constant{};
      equation("Av+mu*Bs(v,w1)=g", stokes(v) + mu * bilinear_Bs(v, w(1)) - g_);
    }
  }

  void zero_limit() {
    require_second_term();
    const Verdict r1 = need("alpha*gamma(1)*gamma(1)", "one");
    const SpectralField& w1 = w(1);
    const SpectralField& w2 = w(2);
    const double gw1_scale = norm_H(g_) * norm_H(w1);
    if (r1 == Verdict::prec) {
      rep_.branch = "zero_limit.inconsistent";
      rep_.warnings.push_back("alpha*gamma(1)^2 decays, which a zero limit with nonzero forcing excludes");
      return;
    }
    if (r1 == Verdict::succ) {
      equation("B(w1,w1)=0", bilinear_B(w1, w1));
      const Verdict r2 = need("alpha*gamma(1)*gamma(2)", "one");
      if (r2 == Verdict::succ) {
        rep_.branch = "zero_limit.strong.decoupled";
        equation("Bs(w1,w2)=0", bilinear_Bs(w1, w2));
      } else if (r2 == Verdict::sim) {
        rep_.branch = "zero_limit.strong.forced";
        const double mu = constant("mu", product({1, 2}, true));
        equation("mu*Bs(w1,w2)=g", mu * bilinear_Bs(w1, w2) - g_);
        scalar("<g,w1>=0", inner_H(g_, w1), gw1_scale);
      } else {
        rep_.branch = "zero_limit.inconsistent";
        rep_.warnings.push_back("alpha*gamma(1)*gamma(2) decays while alpha*gamma(1)^2 grows");
      }
      return;
    }

    const std::vector<double> ag11 = product({1, 1}, true);
    const double mu_star = constant("mu_star", ag11);
    equation("mu_star*B(w1,w1)=g", mu_star * bilinear_B(w1, w1) - g_);
    scalar("<g,w1>=0", inner_H(g_, w1), gw1_scale);
    std::vector<double> chi(ag11.size());
    for (size_t i = 0; i < chi.size(); ++i) chi[i] = 1.0 - ag11[i] / mu_star;
    rep_.chi = chi_trichotomy(chi, rep_.matrix, tols_);
    const ChiTag tag = rep_.chi->tag;
    rep_.decisions.push_back("chi sign pattern: " + to_string(tag));
    if (tag == ChiTag::mixed) {
      rep_.branch = "zero_limit.balanced";
      rep_.warnings.push_back("chi changes sign on the window; sub-branch left unresolved");
      return;
    }
    const double w1sq = norm_V(w1) * norm_V(w1);
    const double gw2 = inner_H(g_, w2);
    const Verdict r2 = need("alpha*gamma(2)", "one");
    if (r2 == Verdict::prec) {
      rep_.branch = "zero_limit.balanced.degenerate";
      record("w1=0", norm_V(w1));
      return;
    }
    if (r2 == Verdict::sim) {
      const Verdict rc = tag == ChiTag::S1 ? Verdict::succ : need_chi("gamma(1)");
      if (rc == Verdict::succ) {
        rep_.branch = "zero_limit.balanced.stokes";
        const double mu2 = constant("mu2", product({2}, true));
        equation("Aw1+mu2*Bs(w1,w2)=0", stokes(w1) + mu2 * bilinear_Bs(w1, w2));
        scalar("mu_star*|w1|^2=mu2*<g,w2>", mu_star * w1sq - mu2 * gw2, std::abs(mu_star) * w1sq);
      } else if (rc == Verdict::sim) {
        rep_.branch = "zero_limit.balanced.mixed";
        std::vector<double> r_mu1(chi.size()), r_mu2(chi.size());
        const auto ag12 = product({1, 2}, true);
        const auto g1 = product({1}, false);
        for (size_t i = 0; i < chi.size(); ++i) {
          r_mu1[i] = g1[i] / chi[i];
          r_mu2[i] = ag12[i] / chi[i];
        }
        const double mu1 = constant("mu1", r_mu1);
        const double mu2 = constant("mu2", r_mu2);
        equation("mu1*Aw1+mu2*Bs(w1,w2)=g", mu1 * stokes(w1) + mu2 * bilinear_Bs(w1, w2) - g_);
        scalar("mu_star*mu1*|w1|^2=mu2*<g,w2>", mu_star * mu1 * w1sq - mu2 * gw2, std::abs(mu_star * mu1) * w1sq);
      } else {
        rep_.branch = "zero_limit.inconsistent";
        rep_.warnings.push_back("|chi| dominates gamma(1), which nonzero forcing excludes");
      }
      return;
    }
    const Verdict rc = tag == ChiTag::S1 ? Verdict::succ : need_chi("alpha*gamma(1)*gamma(2)");
    const double b221 = inner_H(bilinear_B(w2, w2), w1);
    const double w2scale = norm_H(g_) * norm_H(w2);
    if (rc == Verdict::succ) {
      rep_.branch = "zero_limit.balanced.decoupled";
      equation("Bs(w1,w2)=0", bilinear_Bs(w1, w2));
    } else if (rc == Verdict::sim) {
      rep_.branch = "zero_limit.balanced.forced";
      std::vector<double> r_mu2(chi.size());
      const auto ag12 = product({1, 2}, true);
      for (size_t i = 0; i < chi.size(); ++i) r_mu2[i] = ag12[i] / chi[i];
      const double mu2 = constant("mu2", r_mu2);
      equation("mu2*Bs(w1,w2)=g", mu2 * bilinear_Bs(w1, w2) - g_);
    } else {
      rep_.branch = "zero_limit.inconsistent";
      rep_.warnings.push_back("|chi| dominates alpha*gamma(1)*gamma(2), which nonzero forcing excludes");
      return;
    }
    scalar("<g,w2>=0", gw2, w2scale);
    scalar("<B(w2,w2),w1>=0", b221, norm_H(bilinear_B(w2, w2)) * norm_H(w1));
  }

  void stokes_limit() {
    const SpectralField& v = e_.limit;
    equation("Bs(v,w1)=0", bilinear_Bs(v, w(1)));
    require_second_term();
    const std::string a = "gamma(1)", b = "alpha*gamma(2)", c = "alpha*gamma(1)*gamma(1)";
    const Verdict ab = need(a, b), ac = need(a, c), bc = need(b, c);
    const SpectralField& w1 = w(1);
    const SpectralField& w2 = w(2);
    if ((ab == Verdict::succ && ac == Verdict::succ) || (ac == Verdict::sim && ab == Verdict::succ)) {
      rep_.branch = "stokes_limit.degenerate";
      record("w1=0", norm_V(w1));
    } else if (ab == Verdict::prec && bc == Verdict::succ) {
      rep_.branch = "stokes_limit.second_dominant";
      equation("Bs(v,w2)=0", bilinear_Bs(v, w2));
    } else if (ac == Verdict::prec && bc == Verdict::prec) {
      rep_.branch = "stokes_limit.self_dominant";
      equation("B(w1,w1)=0", bilinear_B(w1, w1));
    } else if (ab == Verdict::sim && ac == Verdict::succ) {
      rep_.branch = "stokes_limit.linear_balance";
      std::vector<double> r(e_.window());
      const auto ag2 = product({2}, true), g1 = product({1}, false);
      for (int i = 0; i < e_.window(); ++i) r[i] = ag2[i] / g1[i];
      const double mu = constant("mu", r);
      equation("Aw1+mu*Bs(v,w2)=0", stokes(w1) + mu * bilinear_Bs(v, w2));
    } else if (bc == Verdict::sim && ab == Verdict::prec) {
      rep_.branch = "stokes_limit.nonlinear_balance";
      std::vector<double> r(e_.window());
      const auto g11 = product({1, 1}, false), g2 = product({2}, false);
      for (int i = 0; i < e_.window(); ++i) r[i] = g11[i] / g2[i];
      const double mu = constant("mu", r);
      equation("Bs(v,w2)+mu*B(w1,w1)=0", bilinear_Bs(v, w2) + mu * bilinear_B(w1, w1));
    } else if (ab == Verdict::sim && ac == Verdict::sim) {
      rep_.branch = "stokes_limit.triple_balance";
      std::vector<double> r(e_.window());
      const auto ag2 = product({2}, true), g1 = product({1}, false);
      for (int i = 0; i < e_.window(); ++i) r[i] = ag2[i] / g1[i];
      const double mu1 = constant("mu1", r);
      const double mu2 = constant("mu2", product({1}, true));
      equation("Aw1+mu1*Bs(v,w2)+mu2*B(w1,w1)=0",
               stokes(w1) + mu1 * bilinear_Bs(v, w2) + mu2 * bilinear_B(w1, w1));
    } else {
      rep_.branch = "stokes_limit.inconsistent";
      rep_.warnings.push_back("relations among gamma(1), alpha*gamma(2), alpha*gamma(1)^2 fit no branch");
    }
  }

  ClassificationReport finish() { return std::move(rep_); }

  const ExpansionResult& e_;
  const SpectralField& g_;
  OrderTolerances tols_;
  double gnorm_ = 0.0;
  std::vector<double> h_;
  ClassificationReport rep_;
};

}  // namespace

ClassificationReport classify(const ExpansionResult& e, const SpectralField& g, const OrderTolerances& tols) {
  return Classifier(e, g, tols).run();
}

}  // namespace grashof
