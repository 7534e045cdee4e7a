// CSV / JSON emission of evaluation reports, experiment tables, rankings,
// band summaries, and plot traces.
#pragma once

#include <span>
#include <string>

#include "egfc/eval.hpp"
#include "egfc/features.hpp"
#include "egfc/ranking.hpp"

namespace egfc {

/// Per-step record: h,estimate,truth,correct,acc,c,c_avg,rho,latency_us,
/// model_hash_pre,creations,merges,deletions,label_assignments.
void write_report_csv(const EvalReport& report, const std::string& path);

/// Plot rows: h,c,event.
void write_trace_csv(const EvalReport& report, const std::string& path);

/// channel,hemisphere,acc_pct,c_avg per channel, then per-hemisphere averages.
void write_channel_table_csv(std::span<const ChannelResult> results,
                             const std::string& path);

/// n_features,acc_pct,c_avg,cpu_time_s per leave-n-out subset.
void write_subset_table_csv(std::span<const SubsetResult> results,
                            const std::string& path);

/// feature,channel,band,statistic,relevance,redundancy,score,rank.
void write_ranking_csv(std::span<const FeatureScore> ranking,
                       const FeatureLayout& layout, const std::string& path);

/// band,global,left,right.
void write_band_summary_csv(std::span<const BandCorrelation> rows,
                            const std::string& path);

/// Machine-readable run summary (final metrics, latency stats, config echo).
std::string summary_json(const EvalReport& report, const RunConfig& config,
                         const std::string& run_name);

}  // namespace egfc
