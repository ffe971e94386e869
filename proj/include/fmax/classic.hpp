#pragma once

#include <vector>

#include "fmax/distribution.hpp"

namespace fmx {

/// Result of F maximization under the label-independence assumption.
/// The chosen h is always all-zero or a set of top-k marginals.
struct IndepFResult {
  LabelVector h;
  double expected_f = 0.0;       // under independence
  std::vector<double> per_k;     // E[F(Y, h^(k))], k = 0..m
};

struct ThresholdResult {
  LabelVector h;
  double theta = 0.0;
  double expected_f = 0.0;  // under the true joint
};

// Exact E[F(Y, h)] for independent Bernoulli labels and an arbitrary h,
// via the count convolution over selected and unselected labels.
double independent_expected_f(const std::vector<double>& p, const LabelVector& h);

// Exact E[F(Y, h^(k))] for independent Bernoulli labels, where h^(k)
// selects the k largest marginals. `p` must already be sorted descending.
// Computed as a count convolution: with A(a) = Pr(a ones among the
// selected) and B(b) = Pr(b ones among the rest), the value is
// sum_{a,b} 2a/(a+b+k) A(a) B(b).
double fm_expected_f_independent(const std::vector<double>& p, std::size_t k);

// Evaluates k = 0..m (k = 0 has value prod (1-p_i)) and returns the best.
// Labels sort by marginal descending, ties to the lower original index;
// equal-valued k go to the smaller k.
IndepFResult fm_maximize(const std::vector<double>& p);

// prod (1-p_i) for the all-zero h (exact), otherwise the ratio
// 2 sum p_i h_i / (sum p_i + sum h_i).
double lewis_approximation(const std::vector<double>& p, const LabelVector& h);

// Maximizer for a categorical joint (mass only on single-positive
// vectors): the k highest marginals for the smallest k with
// sum_{j<=k} p_j >= (1+k) p_{k+1}, or all-ones if no k qualifies.
LabelVector categorical_maximize(std::vector<double> p);

// Best of the m+1 level-set candidates of the sorted marginals, scored
// with the true joint expectation; ties go to the larger theta.
ThresholdResult threshold_maximize(const SparseJoint& dist);

LabelVector mm_predict(const SparseJoint& dist);
LabelVector jm_predict(const SparseJoint& dist);

}  // namespace fmx
