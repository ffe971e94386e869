#pragma once

#include <optional>
#include <string>

#include "fmax/distribution.hpp"
#include "fmax/oracle.hpp"

namespace fmx {

enum class WitnessTheorem { T3_1, T3_2, T4_2, T4_5 };

/// Parameters of a constructive worst-case distribution.
struct WitnessSpec {
  WitnessTheorem theorem;
  std::size_t m = 0;
  double q = 0.9;     // T4_2 only
  double eps = 1e-4;  // T3_1 and T4_5 only
};

struct RegretReport {
  std::string method;
  LabelVector h_method;
  LabelVector h_oracle;
  double value_method = 0.0;
  double value_oracle = 0.0;
  double regret = 0.0;
  std::optional<double> closed_form;
};

// Worst-case regret of the Hamming-loss minimizer: 0.5 for m > 2.
double worst_case_hamming(std::size_t m);

// Worst-case regret of the subset 0/1 minimizer:
// (-m - 2 + 2 m^2) m / ((2m - 1)(4 + m + m^2)) for m > 2.
double worst_case_subset01(std::size_t m);

// delta_m = sum_{s=1..m} 2 m! / ((m-s)! (s-1)! (m+s)) q^{m-s} (1-q)^s - q^m,
// evaluated through log-factorials so large m stays stable. Independence
// leads FM to the wrong maximizer exactly when this is positive.
double independence_delta(double q, std::size_t m);

// Lower bound 2q - 1 on the regret of independence-based maximization;
// meaningful when independence_delta(q, m) > 0.
double independence_regret_bound(double q, std::size_t m);

// Lower bound max(0, 1/6 - 2/(m+4)) on the regret of marginal thresholding.
double threshold_regret_bound(std::size_t m);

// Upper bound 1 - delta(Pr)/2 on the Jaccard regret of the F-maximizer,
// where delta(Pr) is the expected F of the F-maximizer.
double jaccard_regret_bound(const SparseJoint& dist);

/// A witness distribution; T4_2 pairs the dependent joint with the
/// product distribution sharing its marginals.
struct WitnessPair {
  SparseJoint primary;
  std::optional<ProductBernoulli> independent;
};

WitnessPair build_witness(const WitnessSpec& spec);

// Builds the witness, runs the theorem's method against the exact
// F-maximizer and reports the numeric regret next to the closed form.
RegretReport verify_witness(const WitnessSpec& spec,
                            std::size_t cap = kDefaultExhaustiveCap);

std::string witness_csv_header();
std::string witness_csv_row(const WitnessSpec& spec, const RegretReport& report);

}  // namespace fmx
