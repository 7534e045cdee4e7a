// Windowed spectral features: non-overlapping time windows, magnitude
// spectrum, and per-band max/mean statistics.
#pragma once

#include <span>
#include <string>
#include <vector>

namespace egfc {

struct BandDef {
  std::string name;
  double lo_hz;
  double hi_hz;
};

// Delta [1,4), Theta [4,8), Alpha [8,13), Beta [13,30), Gamma [30,64].
// Half-open intervals; the last band includes its upper edge.
const std::vector<BandDef>& default_bands();

struct RawWindow {
  std::string channel;
  std::vector<double> samples;
  double fs_hz = 128.0;
};

// One entry per channel, time-aligned. Trailing partial windows are dropped.
std::vector<std::vector<RawWindow>> window_stream(
    const std::vector<std::string>& channels,
    const std::vector<std::vector<double>>& series, double fs_hz,
    double window_seconds);

struct Spectrum {
  double bin_hz = 0.0;              // frequency resolution fs/N
  std::vector<double> magnitude;    // bins 0..N/2 (DC through Nyquist)

  double freq(std::size_t k) const { return bin_hz * static_cast<double>(k); }
};

enum class Taper { none, hann };
enum class SpectrumStat { magnitude, power };

/// DFT magnitudes for non-negative frequencies. Throws on NaN or length < 2.
Spectrum magnitude_spectrum(const RawWindow& w, Taper taper = Taper::none);

/// Per band: (max, mean) of spectral values over bins with lo <= f < hi
/// (final band closed at hi). The DC bin never contributes. Empty band -> (0,0).
std::vector<double> band_features(const Spectrum& s, std::span<const BandDef> bands,
                                  SpectrumStat stat = SpectrumStat::magnitude);

// Causal per-feature min-max scaling into [0,1]; state updated before mapping.
class Normalizer {
 public:
  explicit Normalizer(std::size_t dim, double epsilon = 1e-12);

  std::vector<double> push(std::span<const double> values);

  std::size_t dim() const { return mins_.size(); }
  const std::vector<double>& mins() const { return mins_; }
  const std::vector<double>& maxs() const { return maxs_; }

 private:
  std::vector<double> mins_;
  std::vector<double> maxs_;
  double epsilon_;
  bool primed_ = false;
};

}  // namespace egfc
