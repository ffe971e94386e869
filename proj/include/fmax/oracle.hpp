#pragma once

#include <cstdint>
#include <stdexcept>

#include "fmax/distribution.hpp"
#include "fmax/metrics.hpp"

namespace fmx {

/// Thrown when a brute-force scan would exceed the configured size cap.
class cap_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  LabelVector best;
  double value = 0.0;          // expected utility (or risk, for losses)
  std::uint64_t evaluated = 0; // 2^m in exhaustive mode
};

inline constexpr std::size_t kDefaultExhaustiveCap = 14;

// Exact E[metric(Y, h)], iterating over the support only.
double expected_metric(const SparseJoint& dist, const LabelVector& h, Metric metric);

// Global optimum over all 2^m candidate predictions. Utilities are
// maximized, losses minimized; ties go to the lexicographically smallest h.
OracleResult maximize_exhaustive(const SparseJoint& dist, Metric metric,
                                 std::size_t cap = kDefaultExhaustiveCap);

// E[metric(Y, h*)] - E[metric(Y, h)] for utilities, sign flipped for losses.
double regret(const SparseJoint& dist, const LabelVector& h, Metric metric,
              std::size_t cap = kDefaultExhaustiveCap);

// Closed-form minimizers; must agree with maximize_exhaustive under the
// respective loss.
LabelVector hamming_minimizer(const SparseJoint& dist);
LabelVector subset_minimizer(const SparseJoint& dist);

}  // namespace fmx
