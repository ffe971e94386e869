#pragma once

#include "fmax/label_vector.hpp"

namespace fmx {

enum class Metric { FMeasure, Hamming, SubsetZeroOne, Jaccard, Precision, Recall };

/// Hamming and subset 0/1 are losses (minimize); the rest are utilities.
inline bool is_loss(Metric m) {
  return m == Metric::Hamming || m == Metric::SubsetZeroOne;
}

// F(y,h) = 2 sum y_i h_i / (sum y_i + sum h_i), with 0/0 = 1.
double f_measure(const LabelVector& y, const LabelVector& h);

// Fraction of disagreeing labels.
double hamming_loss(const LabelVector& y, const LabelVector& h);

// 1 unless the vectors are identical.
int subset_zero_one(const LabelVector& y, const LabelVector& h);

// |intersection| / |union|, with 0/0 = 0.
double jaccard(const LabelVector& y, const LabelVector& h);

// 0/0 = 1 for both, consistent with the F-measure convention.
double precision(const LabelVector& y, const LabelVector& h);
double recall(const LabelVector& y, const LabelVector& h);

double evaluate(Metric metric, const LabelVector& y, const LabelVector& h);

}  // namespace fmx
