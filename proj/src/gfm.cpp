#include "fmax/gfm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fmx {

DeltaMatrix delta_from_joint(const SparseJoint& dist) {
  const std::size_t m = dist.m();
  DeltaMatrix delta(m, prob_all_zero(dist));
  std::vector<double> row(m);
  for (const auto& [y, mass] : dist.support()) {
    const int s = y.ones_count();
    if (s == 0) continue;
    for (std::size_t k = 1; k <= m; ++k) row[k - 1] = 2.0 * mass / (s + k);
    for (std::size_t i = 0; i < m; ++i)
      if (y.get(i))
        for (std::size_t k = 1; k <= m; ++k) delta.at(i, k) += row[k - 1];
  }
  return delta;
}

DeltaMatrix delta_from_sample(const EmpiricalSample& sample) {
  // plug-in estimate == exact Delta of the empirical distribution
  return delta_from_joint(sample.to_sparse());
}

PMatrix p_matrix_from_joint(const SparseJoint& dist) {
  const std::size_t m = dist.m();
  PMatrix p(m);
  for (const auto& [y, mass] : dist.support()) {
    const int s = y.ones_count();
    if (s == 0) continue;
    for (std::size_t i = 0; i < m; ++i)
      if (y.get(i)) p.at(i, s) += mass;
  }
  return p;
}

PMatrix p_matrix_from_sample(const EmpiricalSample& sample) {
  return p_matrix_from_joint(sample.to_sparse());
}

DeltaMatrix delta_from_p(const PMatrix& p, double p0) {
  const std::size_t m = p.m();
  DeltaMatrix delta(m, p0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 1; k <= m; ++k) {
      double sum = 0.0;
      for (std::size_t s = 1; s <= m; ++s) sum += p.at(i, s) * 2.0 / (s + k);
      delta.at(i, k) = sum;
    }
  return delta;
}

GfmResult gfm_maximize(const DeltaMatrix& delta) {
  const std::size_t m = delta.m();
  GfmResult result;
  result.per_k.reserve(m + 1);
  result.per_k.emplace_back(LabelVector(m), delta.p0());

  std::vector<std::size_t> order(m);
  for (std::size_t k = 1; k <= m; ++k) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::partial_sort(order.begin(), order.begin() + k, order.end(),
                      [&](std::size_t a, std::size_t b) {
                        const double da = delta.at(a, k), db = delta.at(b, k);
                        if (da != db) return da > db;
                        return a < b;  // ties to the lowest label index
                      });
    LabelVector h(m);
    double value = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      h.set(order[j], true);
      value += delta.at(order[j], k);
    }
    result.per_k.emplace_back(std::move(h), value);
  }

  std::size_t best_k = 0;
  for (std::size_t k = 1; k <= m; ++k)
    if (result.per_k[k].second > result.per_k[best_k].second) best_k = k;
  result.h = result.per_k[best_k].first;
  result.expected_f = result.per_k[best_k].second;
  return result;
}

double expected_f_via_delta(const DeltaMatrix& delta, const LabelVector& h) {
  if (h.size() != delta.m()) throw std::invalid_argument("dimension mismatch");
  const int k = h.ones_count();
  if (k == 0) return delta.p0();
  double sum = 0.0;
  for (std::size_t i = 0; i < delta.m(); ++i)
    if (h.get(i)) sum += delta.at(i, static_cast<std::size_t>(k));
  return sum;
}

}  // namespace fmx
