#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "fmax/distribution.hpp"
#include "fmax/io.hpp"
#include "test_util.hpp"

using fmx::LabelVector;

TEST_CASE("fourlabel tables share marginals") {
  const auto a = testutil::fourlabel_independent_like();
  const auto b = testutil::fourlabel_dependent();
  const std::vector<double> expected = {0.5, 0.2, 0.2, 0.1};
  const auto pa = fmx::marginals(a);
  const auto pb = fmx::marginals(b);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(pa[i] == doctest::Approx(expected[i]).epsilon(1e-12));
    CHECK(pb[i] == doctest::Approx(expected[i]).epsilon(1e-12));
  }
}

TEST_CASE("prob_all_zero") {
  CHECK(fmx::prob_all_zero(testutil::fourlabel_independent_like()) == 0.0);
  CHECK(fmx::prob_all_zero(testutil::fourlabel_dependent()) ==
        doctest::Approx(0.5).epsilon(1e-12));
  fmx::ProductBernoulli half{{0.5, 0.5}};
  CHECK(fmx::prob_all_zero(half) == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("joint_mode") {
  CHECK(fmx::joint_mode(testutil::fourlabel_independent_like()) ==
        LabelVector::from_string("1000"));
  CHECK(fmx::joint_mode(testutil::fourlabel_dependent()) ==
        LabelVector::from_string("0000"));
  const auto sample = fmx::EmpiricalSample::from_counts(
      3, {{LabelVector::from_string("110"), 3}, {LabelVector::from_string("011"), 2}});
  CHECK(fmx::joint_mode(sample) == LabelVector::from_string("110"));
}

TEST_CASE("joint_mode tie goes to the smaller bitstring") {
  const auto tied = fmx::SparseJoint::from_entries(
      2, {{LabelVector::from_string("10"), 0.5}, {LabelVector::from_string("01"), 0.5}});
  CHECK(fmx::joint_mode(tied) == LabelVector::from_string("01"));
}

TEST_CASE("marginal_modes") {
  CHECK(fmx::marginal_modes(fmx::marginals(testutil::fourlabel_independent_like())) ==
        LabelVector::from_string("0000"));
  CHECK(fmx::marginal_modes({0.9, 0.1}) == LabelVector::from_string("10"));
  CHECK(fmx::marginal_modes({0.6, 0.7, 0.2}) == LabelVector::from_string("110"));
  CHECK(fmx::marginal_modes({0.5}) == LabelVector::from_string("0"));
}

TEST_CASE("product bernoulli enumeration reproduces the factorized masses") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 50; ++t) {
    const auto dist = testutil::random_product(rng, 1 + rng() % 8);
    const auto joint = dist.enumerate();
    double total = 0.0;
    for (const auto& [y, mass] : joint.support()) {
      CHECK(mass == doctest::Approx(dist.prob(y)).epsilon(1e-12));
      total += mass;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("sampling is deterministic per seed") {
  const fmx::ProductBernoulli dist{{0.3, 0.7, 0.5}};
  const auto a = fmx::sample(dist, 1000, 42);
  const auto b = fmx::sample(dist, 1000, 42);
  const auto c = fmx::sample(dist, 1000, 43);
  CHECK(a.counts() == b.counts());
  CHECK(a.counts() != c.counts());
}

TEST_CASE("degenerate sampling") {
  const fmx::ProductBernoulli sure{{1.0, 0.0}};
  const auto s = fmx::sample(sure, 3, 5);
  REQUIRE(s.counts().size() == 1);
  CHECK(s.counts()[0].first == LabelVector::from_string("10"));
  CHECK(s.counts()[0].second == 3);

  const auto point = fmx::SparseJoint::from_entries(
      4, {{LabelVector::from_string("1111"), 1.0}});
  const auto sp = fmx::sample(point, 5, 9);
  REQUIRE(sp.counts().size() == 1);
  CHECK(sp.counts()[0].second == 5);

  fmx::ChainLogistic chain{{50.0, 50.0, 50.0},
                            {{}, {0.0}, {0.0, 0.0}}};
  const auto sc = fmx::sample(chain, 4, 7);
  REQUIRE(sc.counts().size() == 1);
  CHECK(sc.counts()[0].first == LabelVector::from_string("111"));
}

TEST_CASE("empirical marginals track the generator") {
  const fmx::ProductBernoulli dist{{0.1, 0.35, 0.5, 0.8, 0.97}};
  const std::int64_t n = 100000;
  const auto s = fmx::sample(dist, n, 2024);
  const auto p_hat = fmx::marginals(s);
  for (std::size_t i = 0; i < dist.m(); ++i) {
    const double se = std::sqrt(dist.p[i] * (1 - dist.p[i]) / n);
    CHECK(std::abs(p_hat[i] - dist.p[i]) <= 4 * se + 1e-12);
  }
}

TEST_CASE("independence makes the joint mode the marginal modes") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 100; ++t) {
    const auto dist = testutil::random_product(rng, 1 + rng() % 8);
    bool tied = false;
    for (double pi : dist.p)
      if (pi == 0.5) tied = true;
    if (tied) continue;
    CHECK(fmx::joint_mode(dist.enumerate()) == fmx::marginal_modes(dist.p));
  }
}

TEST_CASE("chain conditionals respond to the prefix") {
  fmx::ChainLogistic chain{{0.0, 0.0}, {{}, {1.5}}};
  LabelVector ones(2), zeros(2);
  ones.set(0, true);
  CHECK(chain.conditional(0, zeros) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(chain.conditional(1, ones) > chain.conditional(1, zeros));
}

TEST_CASE("distribution file round trip") {
  const auto dist = testutil::fourlabel_dependent();
  std::stringstream buf;
  fmx::write_distribution(buf, dist);
  const auto again = fmx::read_distribution(buf);
  REQUIRE(again.support().size() == dist.support().size());
  for (std::size_t j = 0; j < dist.support().size(); ++j) {
    CHECK(again.support()[j].first == dist.support()[j].first);
    CHECK(again.support()[j].second ==
          doctest::Approx(dist.support()[j].second).epsilon(1e-9));
  }
}

TEST_CASE("malformed inputs are rejected") {
  std::stringstream no_header("0101 1.0\n");
  CHECK_THROWS(fmx::read_distribution(no_header));
  std::stringstream bad_sum("m 2\n10 0.4\n01 0.4\n");
  CHECK_THROWS(fmx::read_distribution(bad_sum));
  std::stringstream bad_len("m 3\n10 1.0\n");
  CHECK_THROWS(fmx::read_distribution(bad_len));
  std::stringstream empty("");
  CHECK_THROWS(fmx::read_samples(empty));
  std::stringstream bad_marg("0.5 1.5\n");
  CHECK_THROWS(fmx::read_marginals(bad_marg));
}

TEST_CASE("marginals and samples files parse") {
  std::stringstream marg("0.5 0.2 0.2 0.1\n");
  const auto p = fmx::read_marginals(marg);
  CHECK(p == std::vector<double>{0.5, 0.2, 0.2, 0.1});

  std::stringstream samp("110\n011\n110\n");
  const auto s = fmx::read_samples(samp);
  CHECK(s.n() == 3);
  CHECK(fmx::joint_mode(s) == LabelVector::from_string("110"));
}

TEST_CASE("dense joint round trips through sparse") {
  fmx::DenseJoint dense = fmx::DenseJoint::from_probs(2, {0.1, 0.2, 0.3, 0.4});
  const auto sparse = dense.to_sparse();
  CHECK(sparse.mass_of(LabelVector::from_string("00")) == doctest::Approx(0.1));
  CHECK(sparse.mass_of(LabelVector::from_string("01")) == doctest::Approx(0.2));
  CHECK(sparse.mass_of(LabelVector::from_string("10")) == doctest::Approx(0.3));
  CHECK(sparse.mass_of(LabelVector::from_string("11")) == doctest::Approx(0.4));
}
