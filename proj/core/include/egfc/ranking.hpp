// Spearman-correlation feature scoring and leave-n-features-out schedules.
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace egfc {

/// Pearson correlation of fractional (mid) ranks; ties take average ranks.
/// Throws std::invalid_argument on size mismatch or length < 2, and
/// std::domain_error when either input is constant.
double spearman(std::span<const double> u, std::span<const double> v);

struct FeatureScore {
  std::size_t feature_index = 0;
  double relevance = 0.0;   // |spearman(feature, labels)|, 0 when undefined
  double redundancy = 0.0;  // mean |spearman| against all other features
  double score = 0.0;       // relevance - redundancy
};

/// Scores every feature column and sorts by descending score
/// (ties broken by lower feature index). `rows` holds one sample per entry.
std::vector<FeatureScore> rank_features(const std::vector<std::vector<double>>& rows,
                                        std::span<const int> labels);

/// Nested subsets of feature indices: sizes dim, dim-n, dim-2n, ... down to the
/// smallest size > 0, dropping the lowest-ranked n features each round.
std::vector<std::vector<std::size_t>> leave_n_out_schedule(
    std::span<const FeatureScore> ranking, std::size_t n, std::size_t dim);

}  // namespace egfc
