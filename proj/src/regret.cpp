#include "fmax/regret.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "fmax/classic.hpp"
#include "fmax/gfm.hpp"

namespace fmx {

double worst_case_hamming(std::size_t m) {
  if (m <= 2) throw std::invalid_argument("worst_case_hamming requires m > 2");
  return 0.5;
}

double worst_case_subset01(std::size_t m) {
  if (m <= 2) throw std::invalid_argument("worst_case_subset01 requires m > 2");
  const double md = static_cast<double>(m);
  return (2.0 * md * md - md - 2.0) * md /
         ((2.0 * md - 1.0) * (4.0 + md + md * md));
}

double independence_delta(double q, std::size_t m) {
  if (q < 0.0 || q > 1.0) throw std::invalid_argument("q must lie in [0,1]");
  const double md = static_cast<double>(m);
  double sum = 0.0;
  for (std::size_t s = 1; s <= m; ++s) {
    const double a = md - static_cast<double>(s);  // exponent on q
    const double b = static_cast<double>(s);       // exponent on 1-q
    if ((q == 0.0 && a > 0.0) || (q == 1.0 && b > 0.0)) continue;
    double lg = std::log(2.0) + std::lgamma(md + 1.0) - std::lgamma(md - s + 1.0) -
                std::lgamma(static_cast<double>(s)) - std::log(md + s);
    if (a > 0.0) lg += a * std::log(q);
    if (b > 0.0) lg += b * std::log1p(-q);
    sum += std::exp(lg);
  }
  return sum - std::pow(q, md);
}

double independence_regret_bound(double q, std::size_t) { return 2.0 * q - 1.0; }

double threshold_regret_bound(std::size_t m) {
  return std::max(0.0, 1.0 / 6.0 - 2.0 / (static_cast<double>(m) + 4.0));
}

double jaccard_regret_bound(const SparseJoint& dist) {
  return 1.0 - gfm_maximize(delta_from_joint(dist)).expected_f / 2.0;
}

namespace {

LabelVector single_one(std::size_t m, std::size_t pos) {
  LabelVector v(m);
  v.set(pos, true);
  return v;
}

LabelVector all_ones(std::size_t m) {
  LabelVector v(m);
  for (std::size_t i = 0; i < m; ++i) v.set(i, true);
  return v;
}

SparseJoint build_t31(std::size_t m, double eps) {
  if (m <= 2) throw std::invalid_argument("T3.1 witness requires m > 2");
  if (eps <= 0.0 || eps >= 1.0 / (4.0 * static_cast<double>(m)))
    throw std::invalid_argument("T3.1 witness requires 0 < eps < 1/(4m)");
  // All mass sits on singleton vectors, so every marginal stays below 1/2
  // and the Hamming minimizer is the all-zero vector with expected F = 0.
  // No prediction can combine the disjoint rows, so the F optimum is the
  // heavy singleton at 0.5 - eps and the regret approaches 1/2.
  std::vector<SparseJoint::Entry> entries;
  entries.emplace_back(single_one(m, 0), 0.5 - eps);
  const double rest = (0.5 + eps) / static_cast<double>(m - 1);
  for (std::size_t j = 1; j < m; ++j)
    entries.emplace_back(single_one(m, j), rest);
  return SparseJoint::from_entries(m, std::move(entries));
}

SparseJoint build_t32(std::size_t m) {
  if (m <= 2) throw std::invalid_argument("T3.2 witness requires m > 2");
  const double mass = 2.0 / (static_cast<double>(m) * m + m + 4.0);
  std::vector<SparseJoint::Entry> entries;
  entries.emplace_back(LabelVector(m), mass);
  entries.emplace_back(all_ones(m), mass);
  for (std::size_t i = 0; i < m; ++i) {
    LabelVector y = all_ones(m);
    y.set(i, false);
    entries.emplace_back(y, mass);
    for (std::size_t j = i + 1; j < m; ++j) {
      LabelVector z = y;
      z.set(j, false);
      entries.emplace_back(z, mass);
    }
  }
  return SparseJoint::from_entries(m, std::move(entries));
}

WitnessPair build_t42(std::size_t m, double q) {
  if (m == 0) throw std::invalid_argument("T4.2 witness requires m >= 1");
  if (q < 0.5 || q > 1.0) throw std::invalid_argument("T4.2 witness requires q in [1/2,1]");
  std::vector<SparseJoint::Entry> entries;
  entries.emplace_back(LabelVector(m), q);
  if (q < 1.0) entries.emplace_back(all_ones(m), 1.0 - q);
  WitnessPair pair{SparseJoint::from_entries(m, std::move(entries)),
                   ProductBernoulli{std::vector<double>(m, 1.0 - q)}};
  return pair;
}

SparseJoint build_t45(std::size_t m, double eps) {
  if (m < 6 || m % 2 != 0)
    throw std::invalid_argument("T4.5 witness requires even m >= 6");
  if (eps <= 0.0 || eps >= 1.0 / (4.0 * static_cast<double>(m)))
    throw std::invalid_argument("T4.5 witness requires 0 < eps < 1/(4m)");
  std::vector<SparseJoint::Entry> entries;
  entries.emplace_back(single_one(m, 0), 0.5 - eps);
  // two rows with y_2 = 1 and m/2 ones on disjoint halves of labels 3..m
  LabelVector row_a(m), row_b(m);
  row_a.set(1, true);
  row_b.set(1, true);
  for (std::size_t i = 2; i < m / 2 + 1; ++i) row_a.set(i, true);
  for (std::size_t i = m / 2 + 1; i < m; ++i) row_b.set(i, true);
  entries.emplace_back(row_a, (0.5 + eps) / 2.0);
  entries.emplace_back(row_b, (0.5 + eps) / 2.0);
  return SparseJoint::from_entries(m, std::move(entries));
}

}  // namespace

WitnessPair build_witness(const WitnessSpec& spec) {
  switch (spec.theorem) {
    case WitnessTheorem::T3_1: return {build_t31(spec.m, spec.eps), std::nullopt};
    case WitnessTheorem::T3_2: return {build_t32(spec.m), std::nullopt};
    case WitnessTheorem::T4_2: return build_t42(spec.m, spec.q);
    case WitnessTheorem::T4_5: return {build_t45(spec.m, spec.eps), std::nullopt};
  }
  throw std::invalid_argument("unknown witness theorem");
}

RegretReport verify_witness(const WitnessSpec& spec, std::size_t cap) {
  const WitnessPair pair = build_witness(spec);
  const SparseJoint& dist = pair.primary;

  RegretReport report;
  switch (spec.theorem) {
    case WitnessTheorem::T3_1:
      report.method = "marginal-modes";
      report.h_method = marginal_modes(marginals(dist));
      report.closed_form = worst_case_hamming(spec.m);
      break;
    case WitnessTheorem::T3_2:
      // The mode is tied across the whole support; the proof's intended
      // subset 0/1 minimizer is the all-zero vector.
      report.method = "joint-mode";
      report.h_method = LabelVector(spec.m);
      report.closed_form = worst_case_subset01(spec.m);
      break;
    case WitnessTheorem::T4_2:
      report.method = "fm-independent";
      report.h_method = fm_maximize(pair.independent->p).h;
      report.closed_form = independence_regret_bound(spec.q, spec.m);
      break;
    case WitnessTheorem::T4_5:
      report.method = "threshold";
      report.h_method = threshold_maximize(dist).h;
      report.closed_form = threshold_regret_bound(spec.m);
      break;
  }

  const OracleResult oracle = maximize_exhaustive(dist, Metric::FMeasure, cap);
  report.h_oracle = oracle.best;
  report.value_oracle = oracle.value;
  report.value_method = expected_metric(dist, report.h_method, Metric::FMeasure);
  report.regret = report.value_oracle - report.value_method;
  return report;
}

namespace {

const char* theorem_name(WitnessTheorem t) {
  switch (t) {
    case WitnessTheorem::T3_1: return "3.1";
    case WitnessTheorem::T3_2: return "3.2";
    case WitnessTheorem::T4_2: return "4.2";
    case WitnessTheorem::T4_5: return "4.5";
  }
  return "?";
}

}  // namespace

std::string witness_csv_header() {
  return "theorem,m,q,eps,regret_numeric,closed_form,abs_gap";
}

std::string witness_csv_row(const WitnessSpec& spec, const RegretReport& report) {
  const double closed = report.closed_form.value_or(0.0);
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%s,%zu,%.12g,%.12g,%.12g,%.12g,%.12g",
                theorem_name(spec.theorem), spec.m, spec.q, spec.eps,
                report.regret, closed, std::abs(report.regret - closed));
  return buf;
}

}  // namespace fmx
