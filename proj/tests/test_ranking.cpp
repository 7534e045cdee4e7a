#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "egfc/features.hpp"
#include "egfc/ranking.hpp"
#include "oracles.hpp"

using namespace egfc;

TEST_CASE("spearman: perfect monotone relations are exactly +/-1") {
  CHECK(spearman(std::vector{1.0, 2.0, 3.0, 4.0}, std::vector{10.0, 20.0, 30.0, 40.0}) ==
        1.0);
  CHECK(spearman(std::vector{1.0, 2.0, 3.0, 4.0}, std::vector{8.0, 6.0, 4.0, 2.0}) ==
        -1.0);
  // any strictly increasing transform preserves the value exactly
  CHECK(spearman(std::vector{0.1, 0.7, 0.3, 0.9}, std::vector{1.0, 3.0, 2.0, 4.0}) ==
        spearman(std::vector{std::exp(0.1), std::exp(0.7), std::exp(0.3), std::exp(0.9)},
                 std::vector{10.0, 30.0, 20.0, 40.0}));
}

TEST_CASE("spearman: tied values take mid ranks") {
  const std::vector<double> u{1.0, 2.0, 2.0, 4.0};
  const std::vector<double> v{1.0, 3.0, 2.0, 4.0};
  const double r = spearman(u, v);
  CHECK(r == doctest::Approx(oracle::spearman(u, v)).epsilon(1e-15));
  CHECK(r == doctest::Approx(0.9486832980505138).epsilon(1e-12));
}

TEST_CASE("spearman: input validation") {
  CHECK_THROWS_AS(spearman(std::vector{1.0, 2.0}, std::vector{1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(spearman(std::vector{1.0}, std::vector{1.0}), std::invalid_argument);
  CHECK_THROWS_AS(spearman(std::vector{2.0, 2.0, 2.0}, std::vector{1.0, 2.0, 3.0}),
                  std::domain_error);
}

TEST_CASE("spearman: symmetry, self-correlation, oracle agreement with ties") {
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<int> coarse(0, 9);  // forces ties
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 5 + rng() % 40;
    std::vector<double> u(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = coarse(rng);
      v[i] = coarse(rng);
    }
    auto constant = [](const std::vector<double>& w) {
      return std::all_of(w.begin(), w.end(), [&](double x) { return x == w[0]; });
    };
    if (constant(u) || constant(v)) continue;
    CHECK(spearman(u, v) == doctest::Approx(spearman(v, u)).epsilon(1e-15));
    CHECK(spearman(u, u) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(spearman(u, v) == doctest::Approx(oracle::spearman(u, v)).epsilon(1e-12));
  }
}

TEST_CASE("rank_features: hand-computed scores on a twin-column toy set") {
  // labels 1..4; f0 is unique, f1 and f2 are identical twins with the same
  // relevance as f0 (0.8 each).
  const std::vector<std::vector<double>> rows{
      {1.0, 1.0, 1.0}, {3.0, 2.0, 2.0}, {2.0, 4.0, 4.0}, {4.0, 3.0, 3.0}};
  const std::vector<int> labels{1, 2, 3, 4};
  const auto scores = rank_features(rows, labels);
  REQUIRE(scores.size() == 3);

  CHECK(scores[0].feature_index == 0);
  CHECK(scores[0].relevance == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(scores[0].redundancy == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(scores[0].score == doctest::Approx(0.4).epsilon(1e-12));

  // twins drag each other down: redundancy (0.4 + 1.0) / 2
  for (std::size_t r = 1; r < 3; ++r) {
    CHECK(scores[r].relevance == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(scores[r].redundancy == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(scores[r].score == doctest::Approx(0.1).epsilon(1e-12));
  }
  CHECK(scores[1].feature_index == 1);  // tie broken by index
  CHECK(scores[2].feature_index == 2);
}

TEST_CASE("rank_features: label copy first, pure noise last, permutation output") {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const std::size_t n = 400;
  std::vector<std::vector<double>> rows(n, std::vector<double>(3));
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = static_cast<int>(i % 4) + 1;
    rows[i][0] = unif(rng);                               // noise
    rows[i][1] = 0.2 * labels[i] + 0.02 * unif(rng);      // strongly monotone in y
    rows[i][2] = 0.5 * unif(rng);                         // noise
  }
  const auto scores = rank_features(rows, labels);
  CHECK(scores[0].feature_index == 1);
  CHECK(scores[0].relevance > 0.9);
  CHECK(scores[2].relevance < 0.15);

  std::set<std::size_t> seen;
  for (const auto& s : scores) seen.insert(s.feature_index);
  CHECK(seen.size() == scores.size());

  // deterministic re-computation
  const auto again = rank_features(rows, labels);
  for (std::size_t i = 0; i < scores.size(); ++i) {
    CHECK(scores[i].feature_index == again[i].feature_index);
    CHECK(scores[i].score == again[i].score);
  }
}

TEST_CASE("rank_features: constant feature scores zero relevance") {
  const std::vector<std::vector<double>> rows{
      {1.0, 5.0}, {1.0, 6.0}, {1.0, 7.0}, {1.0, 8.0}};
  const std::vector<int> labels{1, 2, 1, 2};
  const auto scores = rank_features(rows, labels);
  const auto it = std::find_if(scores.begin(), scores.end(),
                               [](const FeatureScore& s) { return s.feature_index == 0; });
  REQUIRE(it != scores.end());
  CHECK(it->relevance == 0.0);
}

TEST_CASE("leave-n-out schedule: sizes and nesting") {
  auto make_ranking = [](std::size_t dim) {
    std::vector<FeatureScore> r(dim);
    for (std::size_t i = 0; i < dim; ++i) r[i].feature_index = dim - 1 - i;
    return r;
  };

  const auto big = leave_n_out_schedule(make_ranking(140), 5, 140);
  REQUIRE(big.size() == 28);
  CHECK(big.front().size() == 140);
  CHECK(big[26].size() == 10);
  CHECK(big.back().size() == 5);
  for (std::size_t i = 1; i < big.size(); ++i) {
    CHECK(big[i].size() == big[i - 1].size() - 5);
    const std::set<std::size_t> prev(big[i - 1].begin(), big[i - 1].end());
    for (std::size_t f : big[i]) CHECK(prev.count(f) == 1);  // nested
  }

  const auto small = leave_n_out_schedule(make_ranking(10), 5, 10);
  REQUIRE(small.size() == 2);
  CHECK(small[0].size() == 10);
  CHECK(small[1].size() == 5);

  CHECK_THROWS_AS(leave_n_out_schedule(make_ranking(10), 10, 10), std::invalid_argument);
  CHECK_THROWS_AS(leave_n_out_schedule(make_ranking(10), 0, 10), std::invalid_argument);
}

TEST_CASE("band/class correlation sums per channel, split by hemisphere") {
  SampleSet set;
  set.layout.channels = {"C3", "C4"};
  set.layout.bands = default_bands();
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    ProcessedSample s;
    s.label = (i % 4) + 1;
    s.x.assign(set.layout.dim(), 0.0);
    for (std::size_t j = 0; j < s.x.size(); ++j) s.x[j] = unif(rng);
    // Alpha mean feature of both channels mirrors the label exactly
    s.x[0 * 10 + 2 * 2 + 1] = s.label;
    s.x[1 * 10 + 2 * 2 + 1] = s.label;
    set.samples.push_back(std::move(s));
  }

  const auto rows = band_class_correlation(set, BandStat::mean);
  REQUIRE(rows.size() == 5);
  CHECK(rows[2].band == "Alpha");
  CHECK(rows[2].global == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(rows[2].left == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rows[2].right == doctest::Approx(1.0).epsilon(1e-12));

  // independent features: sums stay near zero
  for (std::size_t b = 0; b < rows.size(); ++b) {
    if (b == 2) continue;
    CHECK(rows[b].global < 0.35);  // 2 channels x |null corr| on 200 samples
  }
}

TEST_CASE("hemisphere parsing from channel suffix") {
  CHECK(hemisphere_of("Af3") == 'l');
  CHECK(hemisphere_of("Af4") == 'r');
  CHECK(hemisphere_of("T7") == 'l');
  CHECK(hemisphere_of("O2") == 'r');
  CHECK(hemisphere_of("Fc6") == 'r');
  CHECK(hemisphere_of("Cz") == 0);
}
