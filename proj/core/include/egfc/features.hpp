// Processed-sample pipeline: recordings -> windows -> band features, plus the
// feature layout metadata (channel/band provenance) and per-band correlation.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "egfc/corpus.hpp"
#include "egfc/spectral.hpp"

namespace egfc {

// Fixed feature ordering: per channel, bands in order, (max, mean) per band.
struct FeatureLayout {
  std::vector<std::string> channels;
  std::vector<BandDef> bands;

  std::size_t dim() const { return channels.size() * bands.size() * 2; }
  std::size_t channel_of(std::size_t idx) const { return idx / (bands.size() * 2); }
  std::size_t band_of(std::size_t idx) const { return (idx % (bands.size() * 2)) / 2; }
  bool is_mean(std::size_t idx) const { return idx % 2 == 1; }  // even = max, odd = mean
  std::string feature_name(std::size_t idx) const;
};

/// Left hemisphere = odd trailing channel number, right = even.
/// Returns 'l', 'r', or 0 when the channel carries no number.
char hemisphere_of(const std::string& channel);

struct ProcessedSample {
  std::vector<double> x;
  int label = 0;
  std::string player;
  std::string game;
  std::uint64_t window_index = 0;  // window ordinal within its recording
};

struct SampleSet {
  FeatureLayout layout;
  std::vector<ProcessedSample> samples;
};

struct ExtractOptions {
  double window_seconds = 10.0;
  Taper taper = Taper::none;
  SpectrumStat stat = SpectrumStat::magnitude;
  bool normalize = false;  // causal running min-max over the sample stream
};

/// Recordings are processed in order; windows become samples labeled with the
/// recording's class. All recordings must share the channel header.
SampleSet extract_features(const std::vector<RawRecording>& recordings,
                           const ExtractOptions& options);

// Processed-sample CSV: player,game,window,label,<feature columns>.
void write_samples_csv(const SampleSet& set, const std::string& path,
                       int precision = 12);
SampleSet read_samples_csv(const std::string& path);

enum class BandStat { mean, max };

struct BandCorrelation {
  std::string band;
  double global = 0.0;  // sum over channels of |spearman(band feature, labels)|
  double left = 0.0;
  double right = 0.0;
};

/// Per-band monotonic correlation with the class labels, one designated
/// feature per channel (the band's mean feature by default).
std::vector<BandCorrelation> band_class_correlation(const SampleSet& set,
                                                    BandStat source = BandStat::mean);

}  // namespace egfc
