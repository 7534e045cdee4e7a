#include "egfc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include <fftw3.h>

namespace egfc {

const std::vector<BandDef>& default_bands() {
  static const std::vector<BandDef> bands = {
      {"Delta", 1.0, 4.0},  {"Theta", 4.0, 8.0},  {"Alpha", 8.0, 13.0},
      {"Beta", 13.0, 30.0}, {"Gamma", 30.0, 64.0}};
  return bands;
}

std::vector<std::vector<RawWindow>> window_stream(
    const std::vector<std::string>& channels,
    const std::vector<std::vector<double>>& series, double fs_hz,
    double window_seconds) {
  if (channels.size() != series.size())
    throw std::invalid_argument("channel name / series count mismatch");
  if (!(fs_hz > 0.0) || !(window_seconds > 0.0))
    throw std::invalid_argument("sampling rate and window length must be positive");
  for (std::size_t ch = 1; ch < series.size(); ++ch) {
    if (series[ch].size() != series[0].size())
      throw std::invalid_argument("channels have different lengths");
  }

  const auto win_len = static_cast<std::size_t>(std::llround(window_seconds * fs_hz));
  std::vector<std::vector<RawWindow>> out;
  if (series.empty() || win_len == 0 || series[0].size() < win_len) return out;

  const std::size_t n_windows = series[0].size() / win_len;
  out.reserve(n_windows);
  for (std::size_t w = 0; w < n_windows; ++w) {
    std::vector<RawWindow> set;
    set.reserve(channels.size());
    for (std::size_t ch = 0; ch < channels.size(); ++ch) {
      const auto begin = series[ch].begin() + static_cast<std::ptrdiff_t>(w * win_len);
      set.push_back({channels[ch], {begin, begin + static_cast<std::ptrdiff_t>(win_len)},
                     fs_hz});
    }
    out.push_back(std::move(set));
  }
  return out;
}

namespace {

// FFTW plan creation is not thread-safe; execution on distinct buffers is.
std::mutex& fftw_plan_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

Spectrum magnitude_spectrum(const RawWindow& w, Taper taper) {
  const std::size_t n = w.samples.size();
  if (n < 2) throw std::invalid_argument("window too short for a spectrum");
  if (!(w.fs_hz > 0.0)) throw std::invalid_argument("invalid sampling rate");
  for (double v : w.samples) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite sample in window");
  }

  std::vector<double> in(w.samples);
  if (taper == Taper::hann) {
    for (std::size_t i = 0; i < n; ++i) {
      in[i] *= 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                     static_cast<double>(n - 1)));
    }
  }

  const std::size_t n_bins = n / 2 + 1;
  std::vector<fftw_complex> out(n_bins);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex());
    plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.data(), out.data(),
                                FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex());
    fftw_destroy_plan(plan);
  }

  Spectrum s;
  s.bin_hz = w.fs_hz / static_cast<double>(n);
  s.magnitude.resize(n_bins);
  for (std::size_t k = 0; k < n_bins; ++k) {
    s.magnitude[k] = std::hypot(out[k][0], out[k][1]);
  }
  return s;
}

std::vector<double> band_features(const Spectrum& s, std::span<const BandDef> bands,
                                  SpectrumStat stat) {
  std::vector<double> features;
  features.reserve(bands.size() * 2);
  for (std::size_t b = 0; b < bands.size(); ++b) {
    const bool last = (b + 1 == bands.size());
    double mx = 0.0;
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t k = 1; k < s.magnitude.size(); ++k) {  // k = 0 is DC, excluded
      const double f = s.freq(k);
      const bool in_band = f >= bands[b].lo_hz &&
                           (last ? f <= bands[b].hi_hz : f < bands[b].hi_hz);
      if (!in_band) continue;
      double v = s.magnitude[k];
      if (stat == SpectrumStat::power) v *= v;
      mx = std::max(mx, v);
      sum += v;
      ++count;
    }
    features.push_back(mx);
    features.push_back(count ? sum / static_cast<double>(count) : 0.0);
  }
  return features;
}

Normalizer::Normalizer(std::size_t dim, double epsilon)
    : mins_(dim, 0.0), maxs_(dim, 0.0), epsilon_(epsilon) {
  if (dim == 0) throw std::invalid_argument("normalizer dimension must be positive");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
}

std::vector<double> Normalizer::push(std::span<const double> values) {
  if (values.size() != mins_.size()) throw std::invalid_argument("dimension mismatch");
  if (!primed_) {
    std::copy(values.begin(), values.end(), mins_.begin());
    std::copy(values.begin(), values.end(), maxs_.begin());
    primed_ = true;
  } else {
    for (std::size_t j = 0; j < values.size(); ++j) {
      mins_[j] = std::min(mins_[j], values[j]);
      maxs_[j] = std::max(maxs_[j], values[j]);
    }
  }
  std::vector<double> out(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    out[j] = std::clamp((values[j] - mins_[j]) / (maxs_[j] - mins_[j] + epsilon_),
                        0.0, 1.0);
  }
  return out;
}

}  // namespace egfc
