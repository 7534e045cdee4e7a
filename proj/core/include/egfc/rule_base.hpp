// Evolving rule base: classification, semi-supervised learning step,
// adaptive activation threshold, granule merging and inactivity pruning.
#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "egfc/granule.hpp"

namespace egfc {

// Inactivity horizon value meaning "never delete".
inline constexpr std::uint64_t kNoHorizon = std::numeric_limits<std::uint64_t>::max();

struct HyperParams {
  double rho0 = 0.1;    // initial activation threshold
  double delta = 0.1;   // merge distance threshold
  std::uint64_t h_r = 200;  // inactivity horizon, kNoHorizon = infinity
  double rho_min = 0.01;
  double rho_max = 1.0;
};

struct ClassEstimate {
  std::optional<int> label;
  std::optional<std::size_t> winning_rule;
  double activation = 0.0;
};

// What a single learn step did to the structure.
struct StepOutcome {
  bool rejected = false;
  bool created = false;
  bool absorbed = false;
  bool label_assigned = false;
  bool merged = false;
  std::size_t deletions = 0;
  std::optional<std::uint64_t> touched_granule;  // id of created/updated granule
};

/// Average-dispersion distance between two Gaussian granules:
/// (1/n) * sum_j (|mu1-mu2| + sigma1 + sigma2 - 2*sqrt(sigma1*sigma2)).
double granule_distance(const Granule& g1, const Granule& g2);

/// Dispersion-weighted modal values, summed dispersions (then clamped).
/// Labels must be compatible (equal or at most one defined); throws otherwise.
Granule merge_pair(const Granule& g1, const Granule& g2, std::uint64_t id = 0);

class RuleBase {
 public:
  explicit RuleBase(std::size_t dim, HyperParams params = {});

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return granules_.size(); }
  const std::vector<Granule>& granules() const { return granules_; }
  const HyperParams& params() const { return params_; }
  double rho() const { return rho_; }
  std::uint64_t step() const { return step_; }
  std::optional<double> sigma_avg_prev() const { return sigma_avg_prev_; }

  /// Class of the most activated labeled granule; ties broken by larger
  /// update_count, then lower index. Absent label when no labeled rule exists.
  ClassEstimate classify(std::span<const double> x) const;

  /// Index of the rule the sample would adapt: most active above rho, and for
  /// labeled samples the most active whose label matches or is undefined.
  std::optional<std::size_t> select_adaptation_rule(std::span<const double> x,
                                                    std::optional<int> y) const;

  /// One semi-supervised step: adapt or create, update threshold, merge, prune.
  /// Throws on dimension mismatch / non-finite input before any mutation.
  StepOutcome learn_step(std::span<const double> x, std::optional<int> y);

  /// rho <- rho * sigma_avg / sigma_avg_prev, clamped to [rho_min, rho_max].
  void update_threshold();

  /// Merge the closest label-compatible pair if within delta. At most one merge.
  bool maybe_merge();

  /// Remove granules idle for h_r or more steps. Returns how many were removed.
  std::size_t prune_inactive();

  /// FNV-1a digest of the full model state (granules, counters, rho, step).
  std::uint64_t state_hash() const;

  // Test/tool hooks.
  void seed_granule(Granule g);  // insert a granule directly (assigns id)

 private:
  std::size_t dim_;
  HyperParams params_;
  std::vector<Granule> granules_;
  double rho_;
  std::optional<double> sigma_avg_prev_;
  std::uint64_t step_ = 0;
  std::uint64_t next_id_ = 1;

  friend std::string to_json(const RuleBase& rb, int indent);
  friend RuleBase rule_base_from_json(const std::string& text);
};

/// Snapshot serialization. Field names are documented in the README.
std::string to_json(const RuleBase& rb, int indent = 2);
RuleBase rule_base_from_json(const std::string& text);

}  // namespace egfc
