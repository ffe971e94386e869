#include "fmax/oracle.hpp"

namespace fmx {

double expected_metric(const SparseJoint& dist, const LabelVector& h, Metric metric) {
  if (h.size() != dist.m()) throw std::invalid_argument("dimension mismatch");
  double e = 0.0;
  for (const auto& [y, mass] : dist.support()) e += mass * evaluate(metric, y, h);
  return e;
}

OracleResult maximize_exhaustive(const SparseJoint& dist, Metric metric,
                                 std::size_t cap) {
  const std::size_t m = dist.m();
  if (m > cap) throw cap_exceeded("label count exceeds exhaustive-search cap");
  const bool minimize = is_loss(metric);
  OracleResult result;
  bool first = true;
  // Ascending code order is bitstring order, so keeping strict improvements
  // leaves the lexicographically smallest optimum.
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
    const LabelVector h = LabelVector::from_index(code, m);
    const double value = expected_metric(dist, h, metric);
    if (first || (minimize ? value < result.value : value > result.value)) {
      result.best = h;
      result.value = value;
      first = false;
    }
    ++result.evaluated;
  }
  return result;
}

double regret(const SparseJoint& dist, const LabelVector& h, Metric metric,
              std::size_t cap) {
  const OracleResult opt = maximize_exhaustive(dist, metric, cap);
  const double value = expected_metric(dist, h, metric);
  return is_loss(metric) ? value - opt.value : opt.value - value;
}

LabelVector hamming_minimizer(const SparseJoint& dist) {
  return marginal_modes(marginals(dist));
}

LabelVector subset_minimizer(const SparseJoint& dist) { return joint_mode(dist); }

}  // namespace fmx
