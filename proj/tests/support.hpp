#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "grashof/expansion.hpp"

namespace grashof::testing {

struct StrictVariant {
  ExpansionResult expansion;
  // level_map[k]: number of original terms summed by the first k+1 variant terms.
  std::vector<int> level_map;
};

// Inserts zero terms at random levels and rescales directions by random
// factors, keeping every coefficient identity of the source expansion.
inline StrictVariant random_strict_variant(const ExpansionResult& src, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count_dist(1, 3);
  std::uniform_real_distribution<double> log_scale(-2.0, 2.0);
  const int K = src.depth();
  const int inserts = count_dist(rng);
  std::vector<int> before(K + 1, 0);  // zero terms placed before original term k (k == K: at the end)
  std::uniform_int_distribution<int> pos_dist(0, K);
  for (int j = 0; j < inserts; ++j) ++before[pos_dist(rng)];

  StrictVariant out;
  ExpansionResult e = src;
  e.terms.clear();
  e.direction_uncertainty.clear();
  const int M = src.window();
  for (int k = 0; k <= K; ++k) {
    for (int z = 0; z < before[k]; ++z) {
      ExpansionTerm t;
      t.direction = SpectralField(src.limit.truncation());
      const double factor = std::exp(log_scale(rng));
      for (int i = 0; i < M; ++i) {
        const double ref = k < K ? src.terms[k].gammas[i] : 0.5 * src.terms[K - 1].gammas[i];
        const double g = factor * ref;
        t.gammas.push_back(g);
        // The remainder after the original terms before k, divided by g.
        SpectralField rem = k < K ? src.terms[k].gammas[i] * src.terms[k].witnesses[i]
                                  : src.terms[K - 1].gammas[i] * src.terms[K - 1].witnesses[i] -
                                        src.terms[K - 1].gammas[i] * src.terms[K - 1].direction;
        t.witnesses.push_back((1.0 / g) * rem);
      }
      e.terms.push_back(std::move(t));
      e.direction_uncertainty.push_back(0.0);
      out.level_map.push_back(k);
    }
    if (k == K) break;
    ExpansionTerm t = src.terms[k];
    const double c = std::exp(log_scale(rng));
    t.direction *= c;
    for (auto& w : t.witnesses) w *= c;
    for (auto& g : t.gammas) g /= c;
    e.terms.push_back(std::move(t));
    e.direction_uncertainty.push_back(k < static_cast<int>(src.direction_uncertainty.size())
                                          ? c * src.direction_uncertainty[k]
                                          : 0.0);
    out.level_map.push_back(k + 1);
  }
  e.scale = NestedScale::single(src.scale.exponent(0), static_cast<int>(e.terms.size()) + 1);
  e.kind = before[K] > 0 ? ExpansionKind::degenerate : src.kind;
  if (before[K] > 0) e.degenerate_N = K;
  out.expansion = std::move(e);
  return out;
}

inline double relative_diff(const SpectralField& a, const SpectralField& b, double s) {
  const double ref = std::max(norm_Ds(a, s), norm_Ds(b, s));
  return ref > 0.0 ? norm_Ds(a - b, s) / ref : 0.0;
}

}  // namespace grashof::testing
