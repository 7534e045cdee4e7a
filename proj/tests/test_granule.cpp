#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>
#include <vector>

#include "egfc/granule.hpp"
#include "oracles.hpp"

using namespace egfc;

TEST_CASE("membership degree matches the Gaussian formula") {
  GaussianMembership a{0.5, kSigmaMax};
  CHECK(membership_degree(a, 0.5) == 1.0);

  GaussianMembership b{0.0, kSigmaMax};
  CHECK(membership_degree(b, kSigmaMax) == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));

  // far from the modal value: tiny but never negative
  const double far = membership_degree(b, 10.0);
  CHECK(far >= 0.0);
  CHECK(far < 1e-100);
}

TEST_CASE("membership degree rejects degenerate input") {
  GaussianMembership a{0.5, kSigmaMax};
  CHECK_THROWS_AS(membership_degree(a, std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(membership_degree({0.5, 0.0}, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(membership_degree({0.5, -0.1}, 0.5), std::invalid_argument);
}

TEST_CASE("membership degree strictly decreases away from the modal value") {
  GaussianMembership a{0.3, 0.1};
  double prev = membership_degree(a, 0.3);
  for (double step = 0.05; step <= 0.5; step += 0.05) {
    const double cur = membership_degree(a, 0.3 + step);
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("granule activation is the min T-norm") {
  auto g = create_granule(std::vector{0.2, 0.8}, 1);
  CHECK(granule_activation(g, std::vector{0.2, 0.8}) == 1.0);

  // per-dimension degrees differ; min wins
  const double act = granule_activation(g, std::vector{0.2, 0.7});
  CHECK(act == doctest::Approx(membership_degree(g.memberships[1], 0.7)));

  // one far dimension dominates regardless of the others
  auto g3 = create_granule(std::vector{0.5, 0.5, 0.5}, std::nullopt);
  CHECK(granule_activation(g3, std::vector{0.5, 0.5, 10.0}) < 1e-100);

  CHECK_THROWS_AS(granule_activation(g, std::vector{0.1}), std::invalid_argument);
}

TEST_CASE("creation starts big") {
  auto g = create_granule(std::vector{0.3, 0.7}, 2);
  CHECK(g.memberships[0].mu == 0.3);
  CHECK(g.memberships[1].mu == 0.7);
  CHECK(g.memberships[0].sigma == doctest::Approx(0.15915).epsilon(1e-4));
  CHECK(g.memberships[1].sigma == kSigmaMax);
  CHECK(g.label == 2);
  CHECK(g.update_count == 1);
  CHECK(g.inactivity == 0);

  auto unlabeled = create_granule(std::vector{0.0}, std::nullopt);
  CHECK_FALSE(unlabeled.label.has_value());
  CHECK(unlabeled.memberships[0].mu == 0.0);
  CHECK(unlabeled.memberships[0].sigma == kSigmaMax);

  auto twin = create_granule(std::vector{0.3, 0.7}, 2);
  CHECK(twin.memberships[0].mu == g.memberships[0].mu);
  CHECK(twin.memberships[1].sigma == g.memberships[1].sigma);

  CHECK_THROWS_AS(create_granule(std::vector{0.1, std::nan("")}, 1),
                  std::invalid_argument);
}

TEST_CASE("absorb updates modal value and dispersion recursively") {
  auto g = create_granule(std::vector{0.5}, 1);
  absorb_sample(g, std::vector{0.7});
  CHECK(g.memberships[0].mu == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(g.update_count == 2);

  auto g2 = create_granule(std::vector{0.5}, 1);
  absorb_sample(g2, std::vector{0.5});
  CHECK(g2.memberships[0].mu == 0.5);
  CHECK(g2.memberships[0].sigma ==
        doctest::Approx(kSigmaMax / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(g2.memberships[0].sigma == doctest::Approx(0.11254).epsilon(1e-4));

  CHECK_THROWS_AS(absorb_sample(g, std::vector{0.1, 0.2}), std::invalid_argument);
}

TEST_CASE("zero-innovation absorption shrinks dispersion down to the floor") {
  auto g = create_granule(std::vector{0.5}, 1);
  double prev = g.memberships[0].sigma;
  for (int i = 0; i < 200; ++i) {
    absorb_sample(g, std::vector{0.5});
    CHECK(g.memberships[0].sigma <= prev);
    prev = g.memberships[0].sigma;
  }
  CHECK(g.memberships[0].sigma == kSigmaMin);
}

TEST_CASE("modal value equals the batch mean of absorbed samples") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> xs{unif(rng)};
    auto g = create_granule(std::vector{xs[0]}, std::nullopt);
    const int len = 1 + static_cast<int>(rng() % 100);
    for (int i = 0; i < len; ++i) {
      xs.push_back(unif(rng));
      absorb_sample(g, std::vector{xs.back()});
    }
    CHECK(g.memberships[0].mu ==
          doctest::Approx(static_cast<double>(oracle::batch_mean(xs))).epsilon(1e-9));
  }
}

TEST_CASE("dispersion recursion matches a high-precision replay, pre-clamp") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = create_granule(std::vector{unif(rng)}, std::nullopt);
    long double mu_ld = g.memberships[0].mu;
    long double sigma_ld = g.memberships[0].sigma;
    for (int i = 0; i < 60; ++i) {
      const double x = unif(rng);
      const std::uint64_t count = g.update_count + 1;

      const double impl_pre = sigma_step(g.memberships[0].sigma, g.memberships[0].mu,
                                         x, count);
      const long double oracle_pre =
          oracle::sigma_recursion(sigma_ld, mu_ld, x, count);
      CHECK(impl_pre == doctest::Approx(static_cast<double>(oracle_pre)).epsilon(1e-9));

      // both sides clamp their running state the same way
      mu_ld = ((static_cast<long double>(count) - 1.0L) * mu_ld + x) /
              static_cast<long double>(count);
      sigma_ld = std::clamp(oracle_pre, static_cast<long double>(kSigmaMin),
                            static_cast<long double>(kSigmaMax));
      absorb_sample(g, std::vector{x});
    }
  }
}

TEST_CASE("dispersion stays clamped after any absorption") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> unif(-0.5, 1.5);
  auto g = create_granule(std::vector{0.5, 0.5, 0.5}, 1);
  for (int i = 0; i < 500; ++i) {
    absorb_sample(g, std::vector{unif(rng), unif(rng), unif(rng)});
    for (const auto& m : g.memberships) {
      CHECK(m.sigma >= kSigmaMin);
      CHECK(m.sigma <= kSigmaMax);
    }
  }
}

TEST_CASE("activation is monotone toward the modal value") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = create_granule(std::vector{unif(rng), unif(rng)}, std::nullopt);
    std::vector<double> x{unif(rng), unif(rng)};
    const double before = granule_activation(g, x);
    // pull one coordinate halfway toward its modal value
    const std::size_t j = rng() % 2;
    x[j] = 0.5 * (x[j] + g.memberships[j].mu);
    CHECK(granule_activation(g, x) >= before);
  }
}
