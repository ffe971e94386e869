#include "fmax/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "fmax/rng.hpp"

namespace fmx {

SparseJoint SparseJoint::from_entries(std::size_t m, std::vector<Entry> entries,
                                      double tol) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  std::vector<Entry> merged;
  double total = 0.0;
  for (auto& [y, mass] : entries) {
    if (y.size() != m) throw std::invalid_argument("support vector of wrong length");
    if (mass < 0.0) throw std::invalid_argument("negative probability mass");
    if (mass == 0.0) continue;
    total += mass;
    if (!merged.empty() && merged.back().first == y)
      merged.back().second += mass;
    else
      merged.emplace_back(y, mass);
  }
  if (std::abs(total - 1.0) > tol)
    throw std::invalid_argument("probability masses do not sum to 1");
  for (auto& e : merged) e.second /= total;
  SparseJoint d;
  d.m_ = m;
  d.support_ = std::move(merged);
  return d;
}

double SparseJoint::mass_of(const LabelVector& y) const {
  auto it = std::lower_bound(
      support_.begin(), support_.end(), y,
      [](const Entry& e, const LabelVector& v) { return e.first < v; });
  if (it != support_.end() && it->first == y) return it->second;
  return 0.0;
}

DenseJoint DenseJoint::from_probs(std::size_t m, std::vector<double> probs,
                                  double tol) {
  if (m == 0 || m > 20) throw std::invalid_argument("DenseJoint requires 1 <= m <= 20");
  if (probs.size() != (std::size_t{1} << m))
    throw std::invalid_argument("DenseJoint needs 2^m entries");
  double total = 0.0;
  for (double p : probs) {
    if (p < 0.0) throw std::invalid_argument("negative probability mass");
    total += p;
  }
  if (std::abs(total - 1.0) > tol)
    throw std::invalid_argument("probability masses do not sum to 1");
  for (double& p : probs) p /= total;
  return DenseJoint{m, std::move(probs)};
}

SparseJoint DenseJoint::to_sparse() const {
  std::vector<SparseJoint::Entry> entries;
  for (std::uint64_t code = 0; code < probs.size(); ++code)
    if (probs[code] > 0.0)
      entries.emplace_back(LabelVector::from_index(code, m), probs[code]);
  return SparseJoint::from_entries(m, std::move(entries));
}

double ProductBernoulli::prob(const LabelVector& y) const {
  if (y.size() != m()) throw std::invalid_argument("dimension mismatch");
  double prod = 1.0;
  for (std::size_t i = 0; i < m(); ++i) prod *= y.get(i) ? p[i] : 1.0 - p[i];
  return prod;
}

SparseJoint ProductBernoulli::enumerate() const {
  if (m() == 0 || m() > 20)
    throw std::invalid_argument("enumeration requires 1 <= m <= 20");
  std::vector<SparseJoint::Entry> entries;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << m()); ++code) {
    const LabelVector y = LabelVector::from_index(code, m());
    const double mass = prob(y);
    if (mass > 0.0) entries.emplace_back(y, mass);
  }
  return SparseJoint::from_entries(m(), std::move(entries), 1e-9);
}

double ChainLogistic::conditional(std::size_t i, const LabelVector& prefix) const {
  double z = intercepts[i];
  for (std::size_t j = 0; j < i; ++j)
    z += 2.0 * weights[i][j] * ((prefix.get(j) ? 1.0 : 0.0) - 0.5);
  return 1.0 / (1.0 + std::exp(-z));
}

EmpiricalSample EmpiricalSample::from_observations(
    std::size_t m, const std::vector<LabelVector>& obs) {
  std::map<LabelVector, std::int64_t> tally;
  for (const auto& y : obs) {
    if (y.size() != m) throw std::invalid_argument("observation of wrong length");
    ++tally[y];
  }
  std::vector<Count> counts(tally.begin(), tally.end());
  return from_counts(m, std::move(counts));
}

EmpiricalSample EmpiricalSample::from_counts(std::size_t m,
                                             std::vector<Count> counts) {
  if (counts.empty()) throw std::invalid_argument("empty sample");
  std::sort(counts.begin(), counts.end(),
            [](const Count& a, const Count& b) { return a.first < b.first; });
  EmpiricalSample s;
  s.m_ = m;
  for (const auto& [y, c] : counts) {
    if (y.size() != m) throw std::invalid_argument("observation of wrong length");
    if (c <= 0) throw std::invalid_argument("counts must be positive");
    s.n_ += c;
  }
  s.counts_ = std::move(counts);
  return s;
}

SparseJoint EmpiricalSample::to_sparse() const {
  std::vector<SparseJoint::Entry> entries;
  entries.reserve(counts_.size());
  for (const auto& [y, c] : counts_)
    entries.emplace_back(y, static_cast<double>(c) / static_cast<double>(n_));
  return SparseJoint::from_entries(m_, std::move(entries), 1e-6);
}

std::vector<double> marginals(const SparseJoint& dist) {
  std::vector<double> p(dist.m(), 0.0);
  for (const auto& [y, mass] : dist.support())
    for (std::size_t i = 0; i < dist.m(); ++i)
      if (y.get(i)) p[i] += mass;
  return p;
}

std::vector<double> marginals(const EmpiricalSample& sample) {
  return marginals(sample.to_sparse());
}

double prob_all_zero(const SparseJoint& dist) {
  return dist.mass_of(LabelVector(dist.m()));
}

double prob_all_zero(const ProductBernoulli& dist) {
  double prod = 1.0;
  for (double pi : dist.p) prod *= 1.0 - pi;
  return prod;
}

double prob_all_zero(const EmpiricalSample& sample) {
  return prob_all_zero(sample.to_sparse());
}

LabelVector joint_mode(const SparseJoint& dist) {
  const SparseJoint::Entry* best = nullptr;
  for (const auto& e : dist.support())
    if (!best || e.second > best->second) best = &e;  // support is in bitstring order
  if (!best) throw std::invalid_argument("empty distribution");
  return best->first;
}

LabelVector joint_mode(const EmpiricalSample& sample) {
  const EmpiricalSample::Count* best = nullptr;
  for (const auto& c : sample.counts())
    if (!best || c.second > best->second) best = &c;
  return best->first;
}

LabelVector marginal_modes(const std::vector<double>& p) {
  LabelVector h(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] > 0.5) h.set(i, true);
  return h;
}

namespace {

// Cumulative-mass inversion over the sorted support.
LabelVector draw_from_support(const std::vector<SparseJoint::Entry>& support,
                              double u) {
  double acc = 0.0;
  for (const auto& [y, mass] : support) {
    acc += mass;
    if (u < acc) return y;
  }
  return support.back().first;  // guard against rounding at u ~ 1
}

}  // namespace

EmpiricalSample sample(const SparseJoint& dist, std::int64_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample size must be >= 1");
  std::mt19937_64 rng(seed);
  std::map<LabelVector, std::int64_t> tally;
  for (std::int64_t k = 0; k < n; ++k)
    ++tally[draw_from_support(dist.support(), uniform01(rng))];
  std::vector<EmpiricalSample::Count> counts(tally.begin(), tally.end());
  return EmpiricalSample::from_counts(dist.m(), std::move(counts));
}

EmpiricalSample sample(const ProductBernoulli& dist, std::int64_t n,
                       std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample size must be >= 1");
  std::mt19937_64 rng(seed);
  std::map<LabelVector, std::int64_t> tally;
  for (std::int64_t k = 0; k < n; ++k) {
    LabelVector y(dist.m());
    for (std::size_t i = 0; i < dist.m(); ++i)
      if (uniform01(rng) < dist.p[i]) y.set(i, true);
    ++tally[y];
  }
  std::vector<EmpiricalSample::Count> counts(tally.begin(), tally.end());
  return EmpiricalSample::from_counts(dist.m(), std::move(counts));
}

EmpiricalSample sample(const ChainLogistic& dist, std::int64_t n,
                       std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample size must be >= 1");
  std::mt19937_64 rng(seed);
  std::map<LabelVector, std::int64_t> tally;
  for (std::int64_t k = 0; k < n; ++k) {
    LabelVector y(dist.m());
    for (std::size_t i = 0; i < dist.m(); ++i)
      if (uniform01(rng) < dist.conditional(i, y)) y.set(i, true);
    ++tally[y];
  }
  std::vector<EmpiricalSample::Count> counts(tally.begin(), tally.end());
  return EmpiricalSample::from_counts(dist.m(), std::move(counts));
}

}  // namespace fmx
