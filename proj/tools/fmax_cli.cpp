#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fmax/classic.hpp"
#include "fmax/gfm.hpp"
#include "fmax/io.hpp"
#include "fmax/oracle.hpp"
#include "fmax/regret.hpp"
#include "fmax/rng.hpp"
#include "fmax/simulate.hpp"

namespace {

// exit codes: 0 success, 2 input error, 3 usage error, 4 resource cap
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InferInput {
  std::optional<fmx::SparseJoint> joint;
  std::vector<double> marginals;
};

InferInput load_input(const std::string& dist_file, const std::string& samples_file,
                      const std::string& marginals_file) {
  InferInput input;
  if (!dist_file.empty()) {
    input.joint = fmx::load_distribution(dist_file);
    input.marginals = fmx::marginals(*input.joint);
  } else if (!samples_file.empty()) {
    input.joint = fmx::load_samples(samples_file).to_sparse();
    input.marginals = fmx::marginals(*input.joint);
  } else if (!marginals_file.empty()) {
    input.marginals = fmx::load_marginals(marginals_file);
  } else {
    throw usage_error("one of --dist, --samples, --marginals is required");
  }
  return input;
}

fmx::Metric parse_target(const std::string& name) {
  if (name == "f") return fmx::Metric::FMeasure;
  if (name == "hamming") return fmx::Metric::Hamming;
  if (name == "subset01") return fmx::Metric::SubsetZeroOne;
  if (name == "jaccard") return fmx::Metric::Jaccard;
  throw usage_error("unknown target metric: " + name);
}

// One prediction per method; expected F is reported under the richest
// model the input supports (exact joint when available).
std::pair<fmx::LabelVector, double> run_method(const std::string& method,
                                                const InferInput& input) {
  const bool has_joint = input.joint.has_value();
  if (method == "gfm") {
    if (!has_joint) throw usage_error("gfm needs --dist or --samples");
    const auto result = fmx::gfm_maximize(fmx::delta_from_joint(*input.joint));
    return {result.h, result.expected_f};
  }
  if (method == "jm") {
    if (!has_joint) throw usage_error("jm needs --dist or --samples");
    const auto h = fmx::jm_predict(*input.joint);
    return {h, fmx::expected_metric(*input.joint, h, fmx::Metric::FMeasure)};
  }
  if (method == "threshold") {
    if (!has_joint) throw usage_error("threshold needs --dist or --samples");
    const auto result = fmx::threshold_maximize(*input.joint);
    return {result.h, result.expected_f};
  }
  if (method == "fm") {
    const auto result = fmx::fm_maximize(input.marginals);
    const double value =
        has_joint
            ? fmx::expected_metric(*input.joint, result.h, fmx::Metric::FMeasure)
            : result.expected_f;
    return {result.h, value};
  }
  if (method == "mm") {
    const auto h = fmx::marginal_modes(input.marginals);
    const double value =
        has_joint
            ? fmx::expected_metric(*input.joint, h, fmx::Metric::FMeasure)
            : fmx::independent_expected_f(input.marginals, h);
    return {h, value};
  }
  if (method == "categorical") {
    const auto h = fmx::categorical_maximize(input.marginals);
    double value;
    if (has_joint) {
      value = fmx::expected_metric(*input.joint, h, fmx::Metric::FMeasure);
    } else {
      // exact under the categorical joint the marginals describe
      std::vector<fmx::SparseJoint::Entry> entries;
      for (std::size_t i = 0; i < input.marginals.size(); ++i) {
        fmx::LabelVector y(input.marginals.size());
        y.set(i, true);
        entries.emplace_back(y, input.marginals[i]);
      }
      const auto cat = fmx::SparseJoint::from_entries(input.marginals.size(),
                                                       std::move(entries), 1e-6);
      value = fmx::expected_metric(cat, h, fmx::Metric::FMeasure);
    }
    return {h, value};
  }
  throw usage_error("unknown method: " + method);
}

int run_bench() {
  const std::vector<std::size_t> sizes = {50, 100, 200, 400};
  std::vector<double> gfm_times, delta_times;
  std::mt19937_64 rng(12345);
  for (std::size_t m : sizes) {
    fmx::DeltaMatrix delta(m, 0.01);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 1; k <= m; ++k)
        delta.at(i, k) = fmx::uniform01(rng) / static_cast<double>(m);

    fmx::PMatrix p(m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t s = 1; s <= m; ++s)
        p.at(i, s) = fmx::uniform01(rng) / static_cast<double>(m * m);

    const auto time_of = [](auto&& fn) {
      using clock = std::chrono::steady_clock;
      int reps = 1;
      for (;;) {
        const auto start = clock::now();
        for (int r = 0; r < reps; ++r) fn();
        const double sec = std::chrono::duration<double>(clock::now() - start).count();
        if (sec > 0.02) return sec / reps;
        reps *= 4;
      }
    };

    const double t_gfm = time_of([&] { fmx::gfm_maximize(delta); });
    const double t_delta = time_of([&] { fmx::delta_from_p(p, 0.01); });
    gfm_times.push_back(t_gfm);
    delta_times.push_back(t_delta);
    std::printf("m=%zu gfm=%s delta=%s\n", m, fmx::format_real(t_gfm).c_str(),
                fmx::format_real(t_delta).c_str());
  }

  const auto fit_exponent = [&](const std::vector<double>& times) {
    // least-squares slope of log(t) against log(m)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      const double x = std::log(static_cast<double>(sizes[i]));
      const double y = std::log(times[i]);
      sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
  };

  const double gfm_exp = fit_exponent(gfm_times);
  const double delta_exp = fit_exponent(delta_times);
  std::printf("gfm_exponent=%s\n", fmx::format_real(gfm_exp).c_str());
  std::printf("delta_exponent=%s\n", fmx::format_real(delta_exp).c_str());
  if (gfm_exp >= 2.6) {
    std::fprintf(stderr, "gfm growth exponent %.3f exceeds 2.6\n", gfm_exp);
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bayes-optimal F-measure predictions and regret verification"};
  app.require_subcommand(1);

  std::string dist_file, samples_file, marginals_file, method;
  auto* infer = app.add_subcommand("infer", "predict a label vector");
  auto* opt_dist = infer->add_option("--dist", dist_file, "distribution file");
  auto* opt_samples = infer->add_option("--samples", samples_file, "sample file");
  auto* opt_marg = infer->add_option("--marginals", marginals_file, "marginals file");
  opt_dist->excludes(opt_samples)->excludes(opt_marg);
  opt_samples->excludes(opt_marg);
  infer->add_option("--method", method, "gfm|fm|mm|jm|threshold|categorical")
      ->required();

  std::string oracle_dist, oracle_metric = "f";
  std::size_t cap = fmx::kDefaultExhaustiveCap;
  auto* oracle = app.add_subcommand("oracle", "brute-force optimum");
  oracle->add_option("--dist", oracle_dist)->required();
  oracle->add_option("--metric", oracle_metric, "f|hamming|subset01|jaccard");
  oracle->add_option("--cap", cap, "exhaustive-search label cap");

  std::string regret_dist, regret_method, regret_target = "f";
  auto* regret_cmd = app.add_subcommand("regret", "regret of a method");
  regret_cmd->add_option("--dist", regret_dist)->required();
  regret_cmd->add_option("--method", regret_method)->required();
  regret_cmd->add_option("--target", regret_target, "f|hamming|subset01|jaccard");
  regret_cmd->add_option("--cap", cap);

  std::string theorem;
  std::size_t witness_m = 0;
  double witness_q = 0.9, witness_eps = 1e-4;
  bool verify = false;
  auto* witness = app.add_subcommand("witness", "worst-case witness distributions");
  witness->add_option("--theorem", theorem, "3.1|3.2|4.2|4.5")->required();
  witness->add_option("--m", witness_m)->required();
  witness->add_option("--q", witness_q);
  witness->add_option("--eps", witness_eps);
  witness->add_flag("--verify", verify, "run the regret verification");
  witness->add_option("--cap", cap);

  fmx::ScenarioConfig cfg;
  std::string scenario_name = "independent", train_sizes_arg, out_file, summary_file;
  auto* simulate = app.add_subcommand("simulate", "synthetic-data comparison");
  simulate->add_option("--scenario", scenario_name, "independent|chain");
  simulate->add_option("--m", cfg.m);
  simulate->add_option("--train-sizes", train_sizes_arg, "comma-separated counts");
  simulate->add_option("--models", cfg.n_models);
  simulate->add_option("--replicates", cfg.n_replicates);
  simulate->add_option("--test-size", cfg.test_size);
  simulate->add_option("--seed", cfg.seed);
  simulate->add_option("--out", out_file)->required();
  simulate->add_option("--summary", summary_file);

  app.add_subcommand("bench", "growth-trend timing of gfm and delta");

  try {
    app.parse(argc, argv);

    if (infer->parsed()) {
      const auto input = load_input(dist_file, samples_file, marginals_file);
      const auto [h, expected_f] = run_method(method, input);
      std::cout << "method: " << method << '\n'
                << "h: " << h.to_string() << '\n'
                << "expected_f: " << fmx::format_real(expected_f) << '\n';
    } else if (oracle->parsed()) {
      const auto dist = fmx::load_distribution(oracle_dist);
      const auto result =
          fmx::maximize_exhaustive(dist, parse_target(oracle_metric), cap);
      std::cout << "h: " << result.best.to_string() << '\n'
                << "value: " << fmx::format_real(result.value) << '\n'
                << "evaluated: " << result.evaluated << '\n';
    } else if (regret_cmd->parsed()) {
      const auto dist = fmx::load_distribution(regret_dist);
      const auto [h, value] =
          run_method(regret_method, InferInput{dist, fmx::marginals(dist)});
      const fmx::Metric target = parse_target(regret_target);
      const auto best = fmx::maximize_exhaustive(dist, target, cap);
      const double method_value = fmx::expected_metric(dist, h, target);
      const double r = fmx::is_loss(target) ? method_value - best.value
                                             : best.value - method_value;
      std::cout << "method,target,h_method,h_oracle,value_method,value_oracle,regret\n"
                << regret_method << ',' << regret_target << ',' << h.to_string()
                << ',' << best.best.to_string() << ','
                << fmx::format_real(method_value) << ','
                << fmx::format_real(best.value) << ',' << fmx::format_real(r)
                << '\n';
    } else if (witness->parsed()) {
      fmx::WitnessSpec spec;
      if (theorem == "3.1")
        spec.theorem = fmx::WitnessTheorem::T3_1;
      else if (theorem == "3.2")
        spec.theorem = fmx::WitnessTheorem::T3_2;
      else if (theorem == "4.2")
        spec.theorem = fmx::WitnessTheorem::T4_2;
      else if (theorem == "4.5")
        spec.theorem = fmx::WitnessTheorem::T4_5;
      else
        throw usage_error("unknown theorem: " + theorem);
      spec.m = witness_m;
      spec.q = witness_q;
      spec.eps = witness_eps;
      if (verify) {
        const auto report = fmx::verify_witness(spec, cap);
        std::cout << fmx::witness_csv_header() << '\n'
                  << fmx::witness_csv_row(spec, report) << '\n';
      } else {
        fmx::write_distribution(std::cout, fmx::build_witness(spec).primary);
      }
    } else if (simulate->parsed()) {
      if (scenario_name == "independent")
        cfg.scenario = fmx::Scenario::Independent;
      else if (scenario_name == "chain")
        cfg.scenario = fmx::Scenario::Chain;
      else
        throw usage_error("unknown scenario: " + scenario_name);
      if (!train_sizes_arg.empty()) {
        cfg.train_sizes.clear();
        std::istringstream ss(train_sizes_arg);
        std::string token;
        while (std::getline(ss, token, ','))
          cfg.train_sizes.push_back(std::stoll(token));
      }
      const auto rows = fmx::run_experiment(cfg);
      {
        const std::string tmp = out_file + ".tmp";
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        fmx::write_rows_csv(out, rows);
        out.close();
        if (std::rename(tmp.c_str(), out_file.c_str()) != 0)
          throw std::runtime_error("cannot move " + tmp + " into place");
      }
      if (!summary_file.empty()) {
        std::ofstream out(summary_file);
        if (!out) throw std::runtime_error("cannot write " + summary_file);
        fmx::write_summary_csv(out, fmx::summarize(rows));
      }
    } else {  // bench
      return run_bench();
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  } catch (const fmx::cap_exceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
