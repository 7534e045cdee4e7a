#include "egfc/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace egfc {

namespace {

std::vector<double> fractional_ranks(std::span<const double> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });

  std::vector<double> ranks(v.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    // tied block [i, j] gets the average of ranks i+1 .. j+1
    const double rank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

bool is_constant(std::span<const double> v) {
  for (double x : v) {
    if (x != v[0]) return false;
  }
  return true;
}

}  // namespace

double spearman(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw std::invalid_argument("length mismatch");
  if (u.size() < 2) throw std::invalid_argument("need at least two observations");
  if (is_constant(u) || is_constant(v))
    throw std::domain_error("correlation undefined for constant input");

  const auto ru = fractional_ranks(u);
  const auto rv = fractional_ranks(v);
  const double n = static_cast<double>(u.size());
  const double mu = std::accumulate(ru.begin(), ru.end(), 0.0) / n;
  const double mv = std::accumulate(rv.begin(), rv.end(), 0.0) / n;
  double suv = 0.0, suu = 0.0, svv = 0.0;
  for (std::size_t i = 0; i < ru.size(); ++i) {
    const double du = ru[i] - mu;
    const double dv = rv[i] - mv;
    suv += du * dv;
    suu += du * du;
    svv += dv * dv;
  }
  return std::clamp(suv / std::sqrt(suu * svv), -1.0, 1.0);
}

std::vector<FeatureScore> rank_features(const std::vector<std::vector<double>>& rows,
                                        std::span<const int> labels) {
  if (rows.size() != labels.size())
    throw std::invalid_argument("sample/label count mismatch");
  if (rows.size() < 2) throw std::invalid_argument("need at least two samples");
  const std::size_t dim = rows[0].size();
  for (const auto& r : rows) {
    if (r.size() != dim) throw std::invalid_argument("ragged sample rows");
  }

  std::vector<std::vector<double>> cols(dim, std::vector<double>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < dim; ++j) cols[j][i] = rows[i][j];
  }
  std::vector<double> y(labels.size());
  std::transform(labels.begin(), labels.end(), y.begin(),
                 [](int c) { return static_cast<double>(c); });

  auto abs_corr_or_zero = [](std::span<const double> a, std::span<const double> b) {
    try {
      return std::abs(spearman(a, b));
    } catch (const std::domain_error&) {
      return 0.0;  // constant column carries no rank information
    }
  };

  std::vector<FeatureScore> scores(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    scores[j].feature_index = j;
    scores[j].relevance = abs_corr_or_zero(cols[j], y);
  }
  for (std::size_t j = 0; j < dim; ++j) {
    double sum = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
      if (k == j) continue;
      sum += abs_corr_or_zero(cols[j], cols[k]);
    }
    scores[j].redundancy = dim > 1 ? sum / static_cast<double>(dim - 1) : 0.0;
    scores[j].score = scores[j].relevance - scores[j].redundancy;
  }

  std::sort(scores.begin(), scores.end(), [](const FeatureScore& a, const FeatureScore& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.feature_index < b.feature_index;
  });
  return scores;
}

std::vector<std::vector<std::size_t>> leave_n_out_schedule(
    std::span<const FeatureScore> ranking, std::size_t n, std::size_t dim) {
  if (ranking.size() != dim) throw std::invalid_argument("ranking does not cover all features");
  if (n < 1 || n >= dim) throw std::invalid_argument("need 1 <= n < dim");

  std::vector<std::vector<std::size_t>> subsets;
  std::size_t size = dim;
  while (true) {
    std::vector<std::size_t> subset(size);
    for (std::size_t i = 0; i < size; ++i) subset[i] = ranking[i].feature_index;
    subsets.push_back(std::move(subset));
    if (size <= n) break;  // next drop would leave nothing
    size -= n;
  }
  return subsets;
}

}  // namespace egfc
