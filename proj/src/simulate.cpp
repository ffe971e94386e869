#include "fmax/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

#include "fmax/classic.hpp"
#include "fmax/gfm.hpp"
#include "fmax/oracle.hpp"
#include "fmax/rng.hpp"

namespace fmx {

namespace {

constexpr std::uint64_t kModelTag = 0x6d6f64656cULL;  // sub-stream tags
constexpr std::uint64_t kTestTag = 0x74657374ULL;
constexpr std::uint64_t kTrainTag = 0x747261696eULL;

double logistic(double z) { return 1.0 / (1.0 + std::exp(-z)); }

// Box-Muller, so draws do not depend on the library's normal_distribution.
double normal(std::mt19937_64& rng, double mean, double variance) {
  const double u1 = 1.0 - uniform01(rng);  // (0,1]
  const double u2 = uniform01(rng);
  const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  return mean + std::sqrt(variance) * z;
}

const char* scenario_name(Scenario s) {
  return s == Scenario::Independent ? "independent" : "chain";
}

}  // namespace

void ScenarioConfig::validate() const {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (n_models < 1 || n_replicates < 1 || test_size < 1)
    throw std::invalid_argument("counts must be >= 1");
  if (train_sizes.empty() ||
      !std::is_sorted(train_sizes.begin(), train_sizes.end(),
                      [](auto a, auto b) { return a <= b; }))
    throw std::invalid_argument("train sizes must be strictly increasing");
  for (auto n : train_sizes)
    if (n < 1) throw std::invalid_argument("train sizes must be >= 1");
}

ProductBernoulli make_independent_model(std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> p(m);
  for (std::size_t i = 0; i < m; ++i) p[i] = logistic(normal(rng, 0.0, 3.0));
  return ProductBernoulli{std::move(p)};
}

ChainLogistic make_chain_model(std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ChainLogistic model;
  model.intercepts.resize(m);
  model.weights.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    model.intercepts[i] = normal(rng, 1.0, 3.0);
    model.weights[i].resize(i);
    for (std::size_t j = 0; j < i; ++j) model.weights[i][j] = normal(rng, 1.0, 3.0);
  }
  return model;
}

std::vector<ExperimentRow> run_experiment(const ScenarioConfig& cfg) {
  cfg.validate();
  const std::vector<std::pair<Metric, const char*>> metrics = {
      {Metric::Hamming, "Hamming"},
      {Metric::SubsetZeroOne, "Subset01"},
      {Metric::FMeasure, "FMeasure"},
      {Metric::Jaccard, "Jaccard"},
  };

  std::vector<ExperimentRow> rows;
  for (int model_id = 0; model_id < cfg.n_models; ++model_id) {
    const std::uint64_t model_seed = mix64(cfg.seed, kModelTag, model_id);
    const std::uint64_t test_seed = mix64(cfg.seed, kTestTag, model_id);

    ProductBernoulli indep{{}};
    ChainLogistic chain;
    if (cfg.scenario == Scenario::Independent)
      indep = make_independent_model(cfg.m, model_seed);
    else
      chain = make_chain_model(cfg.m, model_seed);

    const auto draw = [&](std::int64_t n, std::uint64_t seed) {
      return cfg.scenario == Scenario::Independent ? sample(indep, n, seed)
                                                   : sample(chain, n, seed);
    };

    const SparseJoint test_dist = draw(cfg.test_size, test_seed).to_sparse();

    for (std::int64_t train_size : cfg.train_sizes) {
      for (int replicate = 0; replicate < cfg.n_replicates; ++replicate) {
        const std::uint64_t train_seed =
            mix64(cfg.seed, mix64(kTrainTag, model_id), replicate);
        const EmpiricalSample train = draw(train_size, train_seed);
        const SparseJoint fitted = train.to_sparse();
        const std::vector<double> marg = marginals(fitted);

        const std::vector<std::pair<const char*, LabelVector>> predictions = {
            {"MM", marginal_modes(marg)},
            {"JM", joint_mode(fitted)},
            {"FM", fm_maximize(marg).h},
            {"GFM", gfm_maximize(delta_from_sample(train)).h},
        };

        for (const auto& [method, h] : predictions)
          for (const auto& [metric, metric_name] : metrics)
            rows.push_back({scenario_name(cfg.scenario), model_id, train_size,
                            replicate, method, metric_name,
                            expected_metric(test_dist, h, metric)});
      }
    }
  }
  // canonical order, independent of any future parallel scheduling
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::tie(a.model_id, a.train_size, a.replicate, a.method, a.metric) <
           std::tie(b.model_id, b.train_size, b.replicate, b.method, b.metric);
  });
  return rows;
}

std::vector<SummaryRow> summarize(const std::vector<ExperimentRow>& rows) {
  if (rows.empty()) throw std::invalid_argument("no rows to summarize");
  using Key = std::tuple<std::string, std::int64_t, std::string, std::string>;
  std::map<Key, std::vector<double>> groups;
  for (const auto& r : rows)
    groups[{r.scenario, r.train_size, r.method, r.metric}].push_back(r.value);

  std::vector<SummaryRow> out;
  for (const auto& [key, values] : groups) {
    SummaryRow s;
    std::tie(s.scenario, s.train_size, s.method, s.metric) = key;
    s.n = static_cast<std::int64_t>(values.size());
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / s.n;
    if (s.n > 1) {
      double ss = 0.0;
      for (double v : values) ss += (v - s.mean) * (v - s.mean);
      s.stderr_ = std::sqrt(ss / (s.n - 1)) / std::sqrt(static_cast<double>(s.n));
    }
    out.push_back(std::move(s));
  }
  return out;
}

void write_rows_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << "scenario,model_id,train_size,replicate,method,metric,value\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%.12g", r.value);
    out << r.scenario << ',' << r.model_id << ',' << r.train_size << ','
        << r.replicate << ',' << r.method << ',' << r.metric << ',' << buf << '\n';
  }
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << "scenario,train_size,method,metric,mean,stderr,n\n";
  char mean_buf[64], se_buf[64];
  for (const auto& r : rows) {
    std::snprintf(mean_buf, sizeof(mean_buf), "%.12g", r.mean);
    std::snprintf(se_buf, sizeof(se_buf), "%.12g", r.stderr_);
    out << r.scenario << ',' << r.train_size << ',' << r.method << ','
        << r.metric << ',' << mean_buf << ',' << se_buf << ',' << r.n << '\n';
  }
}

}  // namespace fmx
