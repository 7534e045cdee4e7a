// Train-after-test stream evaluation: recursive accuracy/compactness metrics,
// per-step traces, latency, and the single-/multi-channel experiment drivers.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "egfc/features.hpp"
#include "egfc/ranking.hpp"
#include "egfc/rule_base.hpp"
#include "egfc/stream.hpp"

namespace egfc {

// -1 delays a label forever (the learner never sees it).
inline constexpr std::int64_t kNeverLabeled = -1;

struct RunConfig {
  HyperParams params;
  std::int64_t label_delay = 0;  // steps between the estimate and its label
  bool normalize = false;        // causal min-max scaling before the model
  bool collect_steps = true;     // keep per-step records for traces/plots
};

struct StepRecord {
  std::uint64_t h = 0;
  std::optional<int> estimate;
  std::optional<int> truth;
  bool correct = false;
  double acc = 0.0;              // running accuracy after this step
  double c_avg = 0.0;            // running rule-count average after this step
  std::size_t rule_count = 0;
  double rho = 0.0;
  double latency_us = 0.0;       // classify + learn wall time for this step
  std::uint64_t model_hash_pre = 0;  // model state before any learning at h
  int creations = 0;
  int merges = 0;
  int deletions = 0;
  int label_assignments = 0;
};

struct EvalReport {
  std::vector<StepRecord> steps;
  std::uint64_t samples = 0;
  double final_acc = 0.0;
  double final_c_avg = 0.0;
  double learn_seconds = 0.0;    // total classify+learn time, I/O excluded
};

/// Running-mean recursions: new = ((h-1)/h) * old + (1/h) * value.
double recursive_accuracy(double acc_old, std::uint64_t h, int tau);
double recursive_compactness(double c_avg_old, std::uint64_t h, double c_now);

/// Classify each sample first, then learn from it (supervised when its label
/// is visible and due). Throws on mis-ordered explicit timestamps.
EvalReport run_stream(RuleBase& model, std::span<const StreamSample> samples,
                      const RunConfig& config);

struct TraceRow {
  std::uint64_t h = 0;
  std::size_t rule_count = 0;
  std::string event;  // create | merge | delete | none
};

/// One row per structural event (plus "none" rows for quiet steps); replaying
/// the rows reconstructs the rule count exactly.
std::vector<TraceRow> structural_trace(const EvalReport& report);

struct LatencyStats {
  double mean_us = 0.0;
  double p99_us = 0.0;
  double max_us = 0.0;
};

LatencyStats measure_latency(const EvalReport& report);

struct ChannelResult {
  std::string channel;
  char hemisphere = 0;  // 'l', 'r', or 0
  EvalReport report;
};

/// One independent model per channel over that channel's 10-feature stream.
/// `channel_filter` empty = all channels; unknown names are skipped.
std::vector<ChannelResult> single_channel_experiment(
    const std::vector<RawRecording>& recordings, const ExtractOptions& extract,
    const RunConfig& run, const std::vector<std::string>& channel_filter = {});

struct SubsetResult {
  std::size_t n_features = 0;
  double acc = 0.0;
  double c_avg = 0.0;
  double learn_seconds = 0.0;
  EvalReport report;
};

/// One run per leave-n-out feature subset, largest first.
std::vector<SubsetResult> multi_channel_experiment(const SampleSet& set,
                                                   std::span<const FeatureScore> ranking,
                                                   std::size_t n_out,
                                                   const RunConfig& run);

/// Processed samples -> evaluation stream (optionally restricted to a feature
/// subset), preserving order; h is positional.
std::vector<StreamSample> to_stream(const SampleSet& set,
                                    std::span<const std::size_t> feature_subset = {});

}  // namespace egfc
