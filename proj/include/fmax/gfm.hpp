#pragma once

#include <utility>
#include <vector>

#include "fmax/distribution.hpp"

namespace fmx {

/// Matrix of Delta^1_{ik} = sum_{y: y_i=1} 2 Pr(y) / (s_y + k) together
/// with Pr(y = 0). These m^2 + 1 numbers are all the F-maximizer needs.
class DeltaMatrix {
 public:
  DeltaMatrix(std::size_t m, double p0)
      : m_(m), p0_(p0), delta_(m * m, 0.0) {}

  std::size_t m() const { return m_; }
  double p0() const { return p0_; }

  // label index i is 0-based, prediction size k runs 1..m
  double at(std::size_t i, std::size_t k) const { return delta_[i * m_ + (k - 1)]; }
  double& at(std::size_t i, std::size_t k) { return delta_[i * m_ + (k - 1)]; }

  void set_p0(double p0) { p0_ = p0; }

 private:
  std::size_t m_;
  double p0_;
  std::vector<double> delta_;
};

/// p_{is} = Pr(y_i = 1, s_y = s).
class PMatrix {
 public:
  explicit PMatrix(std::size_t m) : m_(m), p_(m * m, 0.0) {}

  std::size_t m() const { return m_; }
  double at(std::size_t i, std::size_t s) const { return p_[i * m_ + (s - 1)]; }
  double& at(std::size_t i, std::size_t s) { return p_[i * m_ + (s - 1)]; }

 private:
  std::size_t m_;
  std::vector<double> p_;
};

struct GfmResult {
  LabelVector h;
  double expected_f = 0.0;
  // candidate prediction and its expected F per size k = 0..m
  std::vector<std::pair<LabelVector, double>> per_k;
};

DeltaMatrix delta_from_joint(const SparseJoint& dist);
DeltaMatrix delta_from_sample(const EmpiricalSample& sample);

PMatrix p_matrix_from_joint(const SparseJoint& dist);
PMatrix p_matrix_from_sample(const EmpiricalSample& sample);

// Delta = P W with w_{sk} = 2/(s+k); agrees with delta_from_joint.
DeltaMatrix delta_from_p(const PMatrix& p, double p0);

// For each k picks the k labels with the highest Delta^1_{ik} (ties to the
// lowest label index), then takes the best k including the empty prediction
// whose value is Pr(y = 0).
GfmResult gfm_maximize(const DeltaMatrix& delta);

// E[F(Y, h)] recovered from Delta alone; the all-zero h evaluates to p0.
double expected_f_via_delta(const DeltaMatrix& delta, const LabelVector& h);

}  // namespace fmx
