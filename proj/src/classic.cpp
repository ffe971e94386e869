#include "fmax/classic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "fmax/gfm.hpp"

namespace fmx {

namespace {

// Distribution of the number of ones among independent Bernoulli draws,
// by iterative convolution.
std::vector<double> count_distribution(const std::vector<double>& p,
                                       std::size_t begin, std::size_t end) {
  std::vector<double> d{1.0};
  for (std::size_t i = begin; i < end; ++i) {
    d.push_back(0.0);
    for (std::size_t c = d.size() - 1; c > 0; --c)
      d[c] = d[c] * (1.0 - p[i]) + d[c - 1] * p[i];
    d[0] *= 1.0 - p[i];
  }
  return d;
}

// indices sorted by marginal descending, ties to the lower index
std::vector<std::size_t> order_by_marginal(const std::vector<double>& p) {
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p[a] > p[b]; });
  return order;
}

}  // namespace

double independent_expected_f(const std::vector<double>& p, const LabelVector& h) {
  if (p.size() != h.size()) throw std::invalid_argument("dimension mismatch");
  const std::size_t k = static_cast<std::size_t>(h.ones_count());
  std::vector<double> selected, rest;
  for (std::size_t i = 0; i < p.size(); ++i)
    (h.get(i) ? selected : rest).push_back(p[i]);
  if (k == 0) {
    double prod = 1.0;
    for (double pi : rest) prod *= 1.0 - pi;
    return prod;
  }
  const std::vector<double> a_dist = count_distribution(selected, 0, selected.size());
  const std::vector<double> b_dist = count_distribution(rest, 0, rest.size());
  double e = 0.0;
  for (std::size_t a = 1; a <= k; ++a)
    for (std::size_t b = 0; b < b_dist.size(); ++b)
      e += 2.0 * a / (a + b + k) * a_dist[a] * b_dist[b];
  return e;
}

double fm_expected_f_independent(const std::vector<double>& p, std::size_t k) {
  const std::size_t m = p.size();
  if (k < 1 || k > m) throw std::invalid_argument("k out of range");
  if (!std::is_sorted(p.begin(), p.end(), std::greater<>{}))
    throw std::invalid_argument("marginals must be sorted descending");
  LabelVector h(m);
  for (std::size_t i = 0; i < k; ++i) h.set(i, true);
  return independent_expected_f(p, h);
}

IndepFResult fm_maximize(const std::vector<double>& p_in) {
  const std::size_t m = p_in.size();
  if (m == 0) throw std::invalid_argument("empty marginal vector");
  std::vector<double> p(p_in);
  for (double& pi : p) {
    // tolerate roundoff from renormalized empirical marginals
    if (pi < 0.0 || pi > 1.0) {
      if (pi < -1e-9 || pi > 1.0 + 1e-9)
        throw std::invalid_argument("marginals must lie in [0,1]");
      pi = std::clamp(pi, 0.0, 1.0);
    }
  }
  const std::vector<std::size_t> order = order_by_marginal(p);
  std::vector<double> sorted(m);
  for (std::size_t i = 0; i < m; ++i) sorted[i] = p[order[i]];

  IndepFResult result;
  result.per_k.resize(m + 1);
  result.per_k[0] = 1.0;
  for (double pi : p) result.per_k[0] *= 1.0 - pi;
  for (std::size_t k = 1; k <= m; ++k)
    result.per_k[k] = fm_expected_f_independent(sorted, k);

  std::size_t best_k = 0;
  for (std::size_t k = 1; k <= m; ++k)
    if (result.per_k[k] > result.per_k[best_k]) best_k = k;

  result.h = LabelVector(m);
  for (std::size_t j = 0; j < best_k; ++j) result.h.set(order[j], true);
  result.expected_f = result.per_k[best_k];
  return result;
}

double lewis_approximation(const std::vector<double>& p, const LabelVector& h) {
  if (p.size() != h.size()) throw std::invalid_argument("dimension mismatch");
  const int k = h.ones_count();
  if (k == 0) {
    double prod = 1.0;
    for (double pi : p) prod *= 1.0 - pi;
    return prod;
  }
  double hit = 0.0, total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    total += p[i];
    if (h.get(i)) hit += p[i];
  }
  return 2.0 * hit / (total + k);
}

LabelVector categorical_maximize(std::vector<double> p) {
  const std::size_t m = p.size();
  if (m == 0) throw std::invalid_argument("empty marginal vector");
  double total = 0.0;
  for (double pi : p) {
    if (pi < 0.0) throw std::invalid_argument("negative probability");
    total += pi;
  }
  if (std::abs(total - 1.0) > 1e-6)
    throw std::invalid_argument("categorical masses must sum to 1");
  for (double& pi : p) pi /= total;

  const std::vector<std::size_t> order = order_by_marginal(p);
  std::size_t chosen = m;  // all-ones unless the stopping rule fires
  double prefix = 0.0;
  for (std::size_t k = 1; k < m; ++k) {
    prefix += p[order[k - 1]];
    if (prefix >= (1.0 + k) * p[order[k]]) {
      chosen = k;
      break;
    }
  }
  LabelVector h(m);
  for (std::size_t j = 0; j < chosen; ++j) h.set(order[j], true);
  return h;
}

ThresholdResult threshold_maximize(const SparseJoint& dist) {
  const std::size_t m = dist.m();
  const std::vector<double> p = marginals(dist);
  const DeltaMatrix delta = delta_from_joint(dist);

  const auto level_set = [&](double theta) {
    LabelVector h(m);
    for (std::size_t i = 0; i < m; ++i)
      if (p[i] >= theta) h.set(i, true);
    return h;
  };

  // Candidate thresholds in decreasing order, so evaluating with strict
  // improvement resolves ties toward the larger theta (fewer labels).
  std::vector<double> thetas;
  const double max_p = *std::max_element(p.begin(), p.end());
  if (max_p >= 1.0) thetas.push_back(std::nextafter(1.0, 2.0));  // empty h
  thetas.push_back(1.0);
  std::vector<double> sorted(p);
  std::sort(sorted.begin(), sorted.end(), std::greater<>{});
  for (double theta : sorted)
    if (theta != thetas.back()) thetas.push_back(theta);

  ThresholdResult best;
  bool first = true;
  for (double theta : thetas) {
    const LabelVector h = level_set(theta);
    const double value = expected_f_via_delta(delta, h);
    if (first || value > best.expected_f) {
      best = ThresholdResult{h, theta, value};
      first = false;
    }
  }
  return best;
}

LabelVector mm_predict(const SparseJoint& dist) {
  return marginal_modes(marginals(dist));
}

LabelVector jm_predict(const SparseJoint& dist) { return joint_mode(dist); }

}  // namespace fmx
