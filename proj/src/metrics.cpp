#include "fmax/metrics.hpp"

#include <stdexcept>

namespace fmx {

namespace {
void check_dims(const LabelVector& y, const LabelVector& h) {
  if (y.size() != h.size()) throw std::invalid_argument("dimension mismatch");
}
}  // namespace

double f_measure(const LabelVector& y, const LabelVector& h) {
  check_dims(y, h);
  const int denom = y.ones_count() + h.ones_count();
  if (denom == 0) return 1.0;
  return 2.0 * LabelVector::intersection_count(y, h) / denom;
}

double hamming_loss(const LabelVector& y, const LabelVector& h) {
  check_dims(y, h);
  return static_cast<double>(LabelVector::hamming_distance(y, h)) / y.size();
}

int subset_zero_one(const LabelVector& y, const LabelVector& h) {
  check_dims(y, h);
  return y == h ? 0 : 1;
}

double jaccard(const LabelVector& y, const LabelVector& h) {
  check_dims(y, h);
  const int inter = LabelVector::intersection_count(y, h);
  const int uni = y.ones_count() + h.ones_count() - inter;
  if (uni == 0) return 0.0;
  return static_cast<double>(inter) / uni;
}

double precision(const LabelVector& y, const LabelVector& h) {
  check_dims(y, h);
  const int hk = h.ones_count();
  if (hk == 0) return 1.0;
  return static_cast<double>(LabelVector::intersection_count(y, h)) / hk;
}

double recall(const LabelVector& y, const LabelVector& h) {
  check_dims(y, h);
  const int yk = y.ones_count();
  if (yk == 0) return 1.0;
  return static_cast<double>(LabelVector::intersection_count(y, h)) / yk;
}

double evaluate(Metric metric, const LabelVector& y, const LabelVector& h) {
  switch (metric) {
    case Metric::FMeasure: return f_measure(y, h);
    case Metric::Hamming: return hamming_loss(y, h);
    case Metric::SubsetZeroOne: return subset_zero_one(y, h);
    case Metric::Jaccard: return jaccard(y, h);
    case Metric::Precision: return precision(y, h);
    case Metric::Recall: return recall(y, h);
  }
  throw std::invalid_argument("unknown metric");
}

}  // namespace fmx
