#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fmax/label_vector.hpp"

namespace fmx {

class EmpiricalSample;

/// Joint distribution over {0,1}^m given by an explicit support list.
/// Entries are kept sorted in bitstring order with strictly positive,
/// normalized masses. This is the common enumerable form every inference
/// method accepts; the other representations convert to it.
class SparseJoint {
 public:
  using Entry = std::pair<LabelVector, double>;

  // Validates: dimensions, nonnegative masses, total within `tol` of 1.
  // Zero-mass entries are dropped and the rest renormalized.
  static SparseJoint from_entries(std::size_t m, std::vector<Entry> entries,
                                  double tol = 1e-9);

  std::size_t m() const { return m_; }
  const std::vector<Entry>& support() const { return support_; }

  double mass_of(const LabelVector& y) const;  // 0 if outside the support

 private:
  std::size_t m_ = 0;
  std::vector<Entry> support_;
};

/// Full table of 2^m probabilities indexed by the integer encoding of y
/// (label 1 is the most significant bit). m <= 20.
struct DenseJoint {
  std::size_t m = 0;
  std::vector<double> probs;

  static DenseJoint from_probs(std::size_t m, std::vector<double> probs,
                               double tol = 1e-9);
  SparseJoint to_sparse() const;
};

/// Independent Bernoulli labels: Pr(y) = prod p_i^{y_i} (1-p_i)^{1-y_i}.
struct ProductBernoulli {
  std::vector<double> p;

  std::size_t m() const { return p.size(); }
  double prob(const LabelVector& y) const;
  SparseJoint enumerate() const;  // m <= 20
};

/// Sampling-only chain model: Pr(y) factorizes through the chain rule with
/// conditionals 1 / (1 + exp(-sum_j 2 w_ij (y_j - 1/2) - w_i0)).
struct ChainLogistic {
  std::vector<double> intercepts;            // w_i0
  std::vector<std::vector<double>> weights;  // weights[i][j] = w_ij, j < i

  std::size_t m() const { return intercepts.size(); }
  double conditional(std::size_t i, const LabelVector& prefix) const;
};

/// Multiset of observed label vectors.
class EmpiricalSample {
 public:
  using Count = std::pair<LabelVector, std::int64_t>;

  static EmpiricalSample from_observations(std::size_t m,
                                           const std::vector<LabelVector>& obs);
  static EmpiricalSample from_counts(std::size_t m, std::vector<Count> counts);

  std::size_t m() const { return m_; }
  std::int64_t n() const { return n_; }
  const std::vector<Count>& counts() const { return counts_; }

  // Frequencies as masses, so samples feed every inference method.
  SparseJoint to_sparse() const;

 private:
  std::size_t m_ = 0;
  std::int64_t n_ = 0;
  std::vector<Count> counts_;  // sorted in bitstring order
};

std::vector<double> marginals(const SparseJoint& dist);
inline std::vector<double> marginals(const ProductBernoulli& dist) { return dist.p; }
std::vector<double> marginals(const EmpiricalSample& sample);

double prob_all_zero(const SparseJoint& dist);
double prob_all_zero(const ProductBernoulli& dist);
double prob_all_zero(const EmpiricalSample& sample);

// argmax Pr(y), ties to the lexicographically smallest bitstring.
LabelVector joint_mode(const SparseJoint& dist);
LabelVector joint_mode(const EmpiricalSample& sample);

// h_i = 1 iff p_i > 1/2; an exact tie goes to 0.
LabelVector marginal_modes(const std::vector<double>& p);

EmpiricalSample sample(const SparseJoint& dist, std::int64_t n, std::uint64_t seed);
EmpiricalSample sample(const ProductBernoulli& dist, std::int64_t n, std::uint64_t seed);
EmpiricalSample sample(const ChainLogistic& dist, std::int64_t n, std::uint64_t seed);

}  // namespace fmx
