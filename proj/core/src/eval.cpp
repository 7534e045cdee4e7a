#include "egfc/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace egfc {

double recursive_accuracy(double acc_old, std::uint64_t h, int tau) {
  if (h < 1) throw std::invalid_argument("h must be >= 1");
  if (tau != 0 && tau != 1) throw std::invalid_argument("tau must be 0 or 1");
  const double hd = static_cast<double>(h);
  return ((hd - 1.0) / hd) * acc_old + (1.0 / hd) * static_cast<double>(tau);
}

double recursive_compactness(double c_avg_old, std::uint64_t h, double c_now) {
  if (h < 1) throw std::invalid_argument("h must be >= 1");
  const double hd = static_cast<double>(h);
  return ((hd - 1.0) / hd) * c_avg_old + (1.0 / hd) * c_now;
}

EvalReport run_stream(RuleBase& model, std::span<const StreamSample> samples,
                      const RunConfig& config) {
  // Explicit timestamps, when present, must be strictly increasing.
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (samples[i].h != 0 && samples[i - 1].h != 0 && samples[i].h <= samples[i - 1].h)
      throw std::invalid_argument("stream samples are not ordered by timestamp");
  }

  EvalReport report;
  Normalizer normalizer(model.dim());

  struct PendingLabel {
    std::uint64_t due;
    std::vector<double> x;
    int label;
  };
  std::deque<PendingLabel> pending;

  double acc = 0.0;
  double c_avg = 0.0;
  std::uint64_t scored = 0;  // samples with known ground truth

  using clock = std::chrono::steady_clock;
  for (std::uint64_t h = 1; h <= samples.size(); ++h) {
    const StreamSample& s = samples[h - 1];
    const std::vector<double> x = config.normalize ? normalizer.push(s.x) : s.x;

    StepRecord rec;
    rec.h = h;
    rec.truth = s.truth;
    rec.model_hash_pre = model.state_hash();

    const auto t0 = clock::now();
    const ClassEstimate est = model.classify(x);

    auto track = [&rec](const StepOutcome& o) {
      rec.creations += o.created ? 1 : 0;
      rec.merges += o.merged ? 1 : 0;
      rec.deletions += static_cast<int>(o.deletions);
      rec.label_assignments += o.label_assigned ? 1 : 0;
    };

    // Labels promised at earlier steps fall due now: one supervised step each.
    while (!pending.empty() && pending.front().due <= h) {
      track(model.learn_step(pending.front().x, pending.front().label));
      pending.pop_front();
    }

    if (config.label_delay == 0) {
      const bool supervised = s.truth && s.label_visible;
      track(model.learn_step(x, supervised ? s.truth : std::nullopt));
    } else {
      track(model.learn_step(x, std::nullopt));
      if (config.label_delay > 0 && s.truth && s.label_visible) {
        pending.push_back({h + static_cast<std::uint64_t>(config.label_delay), x, *s.truth});
      }
    }
    const auto t1 = clock::now();

    rec.estimate = est.label;
    rec.correct = est.label && s.truth && *est.label == *s.truth;
    if (s.truth) {
      ++scored;
      acc = recursive_accuracy(acc, scored, rec.correct ? 1 : 0);
    }
    c_avg = recursive_compactness(c_avg, h, static_cast<double>(model.size()));

    rec.acc = acc;
    rec.c_avg = c_avg;
    rec.rule_count = model.size();
    rec.rho = model.rho();
    rec.latency_us =
        std::chrono::duration<double, std::micro>(t1 - t0).count();
    report.learn_seconds += rec.latency_us * 1e-6;
    if (config.collect_steps) report.steps.push_back(std::move(rec));
  }

  report.samples = samples.size();
  report.final_acc = acc;
  report.final_c_avg = c_avg;
  return report;
}

std::vector<TraceRow> structural_trace(const EvalReport& report) {
  std::vector<TraceRow> rows;
  std::size_t c = 0;
  for (const auto& step : report.steps) {
    const bool quiet = step.creations == 0 && step.merges == 0 && step.deletions == 0;
    for (int i = 0; i < step.creations; ++i) rows.push_back({step.h, ++c, "create"});
    for (int i = 0; i < step.merges; ++i) rows.push_back({step.h, --c, "merge"});
    for (int i = 0; i < step.deletions; ++i) rows.push_back({step.h, --c, "delete"});
    if (quiet) rows.push_back({step.h, c, "none"});
    if (c != step.rule_count)
      throw std::logic_error("structural events do not reconstruct the rule count");
  }
  return rows;
}

LatencyStats measure_latency(const EvalReport& report) {
  LatencyStats stats;
  if (report.steps.empty()) return stats;
  std::vector<double> lat(report.steps.size());
  for (std::size_t i = 0; i < report.steps.size(); ++i) lat[i] = report.steps[i].latency_us;
  stats.mean_us = 0.0;
  for (double v : lat) stats.mean_us += v;
  stats.mean_us /= static_cast<double>(lat.size());
  std::sort(lat.begin(), lat.end());
  const auto idx = static_cast<std::size_t>(
      std::ceil(0.99 * static_cast<double>(lat.size())));
  stats.p99_us = lat[std::min(idx > 0 ? idx - 1 : 0, lat.size() - 1)];
  stats.max_us = lat.back();
  return stats;
}

std::vector<StreamSample> to_stream(const SampleSet& set,
                                    std::span<const std::size_t> feature_subset) {
  std::vector<StreamSample> out;
  out.reserve(set.samples.size());
  for (std::size_t i = 0; i < set.samples.size(); ++i) {
    const auto& s = set.samples[i];
    StreamSample e;
    e.h = i + 1;
    e.truth = s.label;
    if (feature_subset.empty()) {
      e.x = s.x;
    } else {
      e.x.reserve(feature_subset.size());
      for (std::size_t idx : feature_subset) e.x.push_back(s.x.at(idx));
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ChannelResult> single_channel_experiment(
    const std::vector<RawRecording>& recordings, const ExtractOptions& extract,
    const RunConfig& run, const std::vector<std::string>& channel_filter) {
  const SampleSet set = extract_features(recordings, extract);
  const auto& layout = set.layout;
  const std::size_t per_channel = layout.bands.size() * 2;

  std::vector<ChannelResult> results;
  for (std::size_t c = 0; c < layout.channels.size(); ++c) {
    const std::string& name = layout.channels[c];
    if (!channel_filter.empty() &&
        std::find(channel_filter.begin(), channel_filter.end(), name) ==
            channel_filter.end())
      continue;
    std::vector<std::size_t> subset(per_channel);
    for (std::size_t j = 0; j < per_channel; ++j) subset[j] = c * per_channel + j;
    const auto stream = to_stream(set, subset);

    RuleBase model(per_channel, run.params);
    ChannelResult res;
    res.channel = name;
    res.hemisphere = hemisphere_of(name);
    res.report = run_stream(model, stream, run);
    results.push_back(std::move(res));
  }
  return results;
}

std::vector<SubsetResult> multi_channel_experiment(const SampleSet& set,
                                                   std::span<const FeatureScore> ranking,
                                                   std::size_t n_out,
                                                   const RunConfig& run) {
  const auto subsets = leave_n_out_schedule(ranking, n_out, set.layout.dim());
  std::vector<SubsetResult> results;
  for (const auto& subset : subsets) {
    if (subset.empty()) continue;
    const auto stream = to_stream(set, subset);
    RuleBase model(subset.size(), run.params);
    SubsetResult res;
    res.n_features = subset.size();
    res.report = run_stream(model, stream, run);
    res.acc = res.report.final_acc;
    res.c_avg = res.report.final_c_avg;
    res.learn_seconds = res.report.learn_seconds;
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace egfc
