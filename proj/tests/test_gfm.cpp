#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fmax/gfm.hpp"
#include "fmax/oracle.hpp"
#include "test_util.hpp"

using fmx::LabelVector;

TEST_CASE("delta_from_joint hand values") {
  const auto delta = fmx::delta_from_joint(testutil::fourlabel_independent_like());
  CHECK(delta.at(0, 1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(delta.p0() == 0.0);

  const auto point =
      fmx::SparseJoint::from_entries(2, {{LabelVector::from_string("11"), 1.0}});
  const auto dp = fmx::delta_from_joint(point);
  for (std::size_t k = 1; k <= 2; ++k) {
    CHECK(dp.at(0, k) == doctest::Approx(2.0 / (2 + k)).epsilon(1e-12));
    CHECK(dp.at(1, k) == doctest::Approx(2.0 / (2 + k)).epsilon(1e-12));
  }

  const auto zero =
      fmx::SparseJoint::from_entries(3, {{LabelVector::from_string("000"), 1.0}});
  const auto dz = fmx::delta_from_joint(zero);
  CHECK(dz.p0() == 1.0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 1; k <= 3; ++k) CHECK(dz.at(i, k) == 0.0);
}

TEST_CASE("delta entries are nonincreasing in k") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 50; ++t) {
    const auto dist = testutil::random_sparse(rng, 1 + rng() % 8, 16);
    const auto delta = fmx::delta_from_joint(dist);
    for (std::size_t i = 0; i < dist.m(); ++i)
      for (std::size_t k = 2; k <= dist.m(); ++k)
        CHECK(delta.at(i, k) <= delta.at(i, k - 1) + 1e-15);
  }
}

TEST_CASE("delta_from_sample hand values") {
  const auto ones = fmx::EmpiricalSample::from_counts(
      4, {{LabelVector::from_string("1111"), 7}});
  const auto d = fmx::delta_from_sample(ones);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 1; k <= 4; ++k)
      CHECK(d.at(i, k) == doctest::Approx(2.0 / (4 + k)).epsilon(1e-12));

  const auto two = fmx::EmpiricalSample::from_counts(
      2, {{LabelVector::from_string("10"), 5}, {LabelVector::from_string("01"), 5}});
  CHECK(fmx::delta_from_sample(two).at(0, 1) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("delta_from_sample equals delta_from_joint of the empirical law") {
  std::mt19937_64 rng(47);
  const auto dist = testutil::random_sparse(rng, 6, 12);
  const auto s = fmx::sample(dist, 500, 99);
  const auto a = fmx::delta_from_sample(s);
  const auto b = fmx::delta_from_joint(s.to_sparse());
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t k = 1; k <= 6; ++k) CHECK(a.at(i, k) == b.at(i, k));
  CHECK(a.p0() == b.p0());
}

TEST_CASE("sampled delta converges to the exact one") {
  const auto dist = testutil::fourlabel_independent_like();
  const auto exact = fmx::delta_from_joint(dist);
  const std::int64_t n = 100000;
  const auto est = fmx::delta_from_sample(fmx::sample(dist, n, 77));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 1; k <= 4; ++k) {
      // each entry is a mean of bounded terms; 2/(1+k) bounds one draw
      const double se = 1.0 / std::sqrt(static_cast<double>(n));
      CHECK(std::abs(est.at(i, k) - exact.at(i, k)) <= 4 * se);
    }
}

TEST_CASE("p matrix hand values") {
  const auto point =
      fmx::SparseJoint::from_entries(2, {{LabelVector::from_string("11"), 1.0}});
  const auto pp = fmx::p_matrix_from_joint(point);
  CHECK(pp.at(0, 2) == 1.0);
  CHECK(pp.at(1, 2) == 1.0);
  CHECK(pp.at(0, 1) == 0.0);

  const auto table = fmx::p_matrix_from_joint(testutil::fourlabel_independent_like());
  CHECK(table.at(0, 1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(table.at(1, 1) == doctest::Approx(0.2).epsilon(1e-12));

  const fmx::ProductBernoulli half{{0.5, 0.5}};
  const auto ph = fmx::p_matrix_from_joint(half.enumerate());
  CHECK(ph.at(0, 1) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(ph.at(0, 2) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("p matrix row consistency and marginal sums") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 50; ++t) {
    const auto dist = testutil::random_sparse(rng, 1 + rng() % 8, 16);
    const auto pm = fmx::p_matrix_from_joint(dist);
    const auto p = fmx::marginals(dist);
    const std::size_t m = dist.m();
    for (std::size_t i = 0; i < m; ++i) {
      double row = 0.0;
      for (std::size_t s = 1; s <= m; ++s) row += pm.at(i, s);
      CHECK(row == doctest::Approx(p[i]).epsilon(1e-12));
      CHECK(pm.at(i, m) == doctest::Approx(pm.at(0, m)).epsilon(1e-15));
    }
  }
}

TEST_CASE("delta factorizes through the p matrix") {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 200; ++t) {
    const auto dist = testutil::random_sparse(rng, 1 + rng() % 8, 16);
    const auto direct = fmx::delta_from_joint(dist);
    const auto via_p =
        fmx::delta_from_p(fmx::p_matrix_from_joint(dist), direct.p0());
    for (std::size_t i = 0; i < dist.m(); ++i)
      for (std::size_t k = 1; k <= dist.m(); ++k)
        CHECK(via_p.at(i, k) == doctest::Approx(direct.at(i, k)).epsilon(1e-12));
  }
}

TEST_CASE("gfm_maximize on the worked tables") {
  const auto a = fmx::gfm_maximize(
      fmx::delta_from_joint(testutil::fourlabel_independent_like()));
  CHECK(a.h == LabelVector::from_string("1000"));
  CHECK(a.expected_f == doctest::Approx(0.5).epsilon(1e-12));

  const auto b =
      fmx::gfm_maximize(fmx::delta_from_joint(testutil::fourlabel_dependent()));
  CHECK(b.h == LabelVector::from_string("0000"));
  CHECK(b.expected_f == doctest::Approx(0.5).epsilon(1e-12));

  const auto c = fmx::gfm_maximize(
      fmx::delta_from_joint(testutil::twelve_label_threshold_example()));
  CHECK(c.h == LabelVector::from_string("100000000000"));
  CHECK(c.expected_f == doctest::Approx(0.39).epsilon(1e-12));
}

TEST_CASE("gfm equals the brute-force oracle") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 300; ++t) {
    const auto dist = testutil::random_sparse(rng, 1 + rng() % 10, 32);
    const auto g = fmx::gfm_maximize(fmx::delta_from_joint(dist));
    const auto o = fmx::maximize_exhaustive(dist, fmx::Metric::FMeasure);
    CHECK(g.expected_f == doctest::Approx(o.value).epsilon(1e-12));
  }
}

TEST_CASE("per_k values match an independent top-k sum") {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 50; ++t) {
    const auto dist = testutil::random_sparse(rng, 2 + rng() % 7, 16);
    const auto delta = fmx::delta_from_joint(dist);
    const auto g = fmx::gfm_maximize(delta);
    const std::size_t m = dist.m();
    REQUIRE(g.per_k.size() == m + 1);
    CHECK(g.per_k[0].second == delta.p0());
    for (std::size_t k = 1; k <= m; ++k) {
      std::vector<double> col;
      for (std::size_t i = 0; i < m; ++i) col.push_back(delta.at(i, k));
      std::sort(col.begin(), col.end(), std::greater<>{});
      double top = 0.0;
      for (std::size_t j = 0; j < k; ++j) top += col[j];
      CHECK(g.per_k[k].second == doctest::Approx(top).epsilon(1e-12));
      CHECK(g.per_k[k].first.ones_count() == static_cast<int>(k));
    }
  }
}

TEST_CASE("expected_f_via_delta matches the oracle expectation") {
  const auto table = testutil::fourlabel_independent_like();
  const auto delta = fmx::delta_from_joint(table);
  CHECK(fmx::expected_f_via_delta(delta, LabelVector::from_string("0000")) ==
        delta.p0());
  CHECK(fmx::expected_f_via_delta(delta, LabelVector::from_string("1100")) ==
        doctest::Approx(7.0 / 15).epsilon(1e-12));

  std::mt19937_64 rng(71);
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = 1 + rng() % 8;
    const auto dist = testutil::random_sparse(rng, m, 16);
    const auto d = fmx::delta_from_joint(dist);
    const auto h = testutil::random_vector(rng, m);
    CHECK(fmx::expected_f_via_delta(d, h) ==
          doctest::Approx(fmx::expected_metric(dist, h, fmx::Metric::FMeasure))
              .epsilon(1e-12));
  }
}
