#include "egfc/report_io.hpp"

#include <fstream>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace egfc {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.precision(12);
  return out;
}

std::string opt_str(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "";
}

}  // namespace

void write_report_csv(const EvalReport& report, const std::string& path) {
  auto out = open_out(path);
  out << "h,estimate,truth,correct,acc,c,c_avg,rho,latency_us,model_hash_pre,"
         "creations,merges,deletions,label_assignments\n";
  for (const auto& s : report.steps) {
    out << s.h << "," << opt_str(s.estimate) << "," << opt_str(s.truth) << ","
        << (s.correct ? 1 : 0) << "," << s.acc << "," << s.rule_count << ","
        << s.c_avg << "," << s.rho << "," << s.latency_us << "," << s.model_hash_pre
        << "," << s.creations << "," << s.merges << "," << s.deletions << ","
        << s.label_assignments << "\n";
  }
}

void write_trace_csv(const EvalReport& report, const std::string& path) {
  auto out = open_out(path);
  out << "h,c,event\n";
  for (const auto& row : structural_trace(report)) {
    out << row.h << "," << row.rule_count << "," << row.event << "\n";
  }
}

void write_channel_table_csv(std::span<const ChannelResult> results,
                             const std::string& path) {
  auto out = open_out(path);
  out << "channel,hemisphere,acc_pct,c_avg\n";
  std::map<char, std::pair<double, double>> sums;  // hemi -> (acc, c_avg)
  std::map<char, int> counts;
  for (const auto& r : results) {
    const char hemi = r.hemisphere ? r.hemisphere : '?';
    out << r.channel << "," << hemi << "," << 100.0 * r.report.final_acc << ","
        << r.report.final_c_avg << "\n";
    sums[r.hemisphere].first += 100.0 * r.report.final_acc;
    sums[r.hemisphere].second += r.report.final_c_avg;
    counts[r.hemisphere]++;
  }
  for (const auto& [hemi, sum] : sums) {
    if (!hemi) continue;
    const double n = counts[hemi];
    out << "avg_" << (hemi == 'l' ? "left" : "right") << "," << hemi << ","
        << sum.first / n << "," << sum.second / n << "\n";
  }
}

void write_subset_table_csv(std::span<const SubsetResult> results,
                            const std::string& path) {
  auto out = open_out(path);
  out << "n_features,acc_pct,c_avg,cpu_time_s\n";
  for (const auto& r : results) {
    out << r.n_features << "," << 100.0 * r.acc << "," << r.c_avg << ","
        << r.learn_seconds << "\n";
  }
}

void write_ranking_csv(std::span<const FeatureScore> ranking,
                       const FeatureLayout& layout, const std::string& path) {
  auto out = open_out(path);
  out << "feature,channel,band,statistic,relevance,redundancy,score,rank\n";
  for (std::size_t r = 0; r < ranking.size(); ++r) {
    const auto& fs = ranking[r];
    out << layout.feature_name(fs.feature_index) << ","
        << layout.channels[layout.channel_of(fs.feature_index)] << ","
        << layout.bands[layout.band_of(fs.feature_index)].name << ","
        << (layout.is_mean(fs.feature_index) ? "mean" : "max") << ","
        << fs.relevance << "," << fs.redundancy << "," << fs.score << "," << r + 1
        << "\n";
  }
}

void write_band_summary_csv(std::span<const BandCorrelation> rows,
                            const std::string& path) {
  auto out = open_out(path);
  out << "band,global,left,right\n";
  for (const auto& row : rows) {
    out << row.band << "," << row.global << "," << row.left << "," << row.right << "\n";
  }
}

std::string summary_json(const EvalReport& report, const RunConfig& config,
                         const std::string& run_name) {
  nlohmann::json j;
  j["run"] = run_name;
  j["samples"] = report.samples;
  j["final_acc"] = report.final_acc;
  j["final_c_avg"] = report.final_c_avg;
  j["cpu_time_s"] = report.learn_seconds;
  const auto lat = measure_latency(report);
  j["latency_us"] = {{"mean", lat.mean_us}, {"p99", lat.p99_us}, {"max", lat.max_us}};
  j["config"] = {{"rho0", config.params.rho0},
                 {"delta", config.params.delta},
                 {"h_r", config.params.h_r == kNoHorizon
                             ? nlohmann::json("inf")
                             : nlohmann::json(config.params.h_r)},
                 {"rho_min", config.params.rho_min},
                 {"rho_max", config.params.rho_max},
                 {"label_delay", config.label_delay},
                 {"normalize", config.normalize}};
  return j.dump(2);
}

}  // namespace egfc
