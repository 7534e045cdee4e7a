#include "egfc/features.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "csv_util.hpp"
#include "egfc/ranking.hpp"

namespace egfc {

std::string FeatureLayout::feature_name(std::size_t idx) const {
  return channels[channel_of(idx)] + "_" + bands[band_of(idx)].name + "_" +
         (is_mean(idx) ? "mean" : "max");
}

char hemisphere_of(const std::string& channel) {
  std::size_t end = channel.size();
  while (end > 0 && std::isdigit(static_cast<unsigned char>(channel[end - 1]))) --end;
  if (end == channel.size()) return 0;
  const int number = std::stoi(channel.substr(end));
  return number % 2 == 1 ? 'l' : 'r';
}

SampleSet extract_features(const std::vector<RawRecording>& recordings,
                           const ExtractOptions& options) {
  SampleSet set;
  if (recordings.empty()) return set;
  set.layout.channels = recordings.front().channels;
  set.layout.bands = default_bands();

  Normalizer normalizer(set.layout.dim());
  for (const auto& rec : recordings) {
    if (rec.channels != set.layout.channels)
      throw std::invalid_argument(rec.meta.path + ": channel header differs across recordings");
    const auto window_sets =
        window_stream(rec.channels, rec.series, rec.fs_hz, options.window_seconds);
    for (std::size_t w = 0; w < window_sets.size(); ++w) {
      ProcessedSample sample;
      sample.player = rec.meta.player;
      sample.game = rec.meta.game;
      sample.label = rec.meta.label;
      sample.window_index = w;
      sample.x.reserve(set.layout.dim());
      for (const auto& window : window_sets[w]) {
        const auto spectrum = magnitude_spectrum(window, options.taper);
        const auto feats = band_features(spectrum, set.layout.bands, options.stat);
        sample.x.insert(sample.x.end(), feats.begin(), feats.end());
      }
      if (options.normalize) sample.x = normalizer.push(sample.x);
      set.samples.push_back(std::move(sample));
    }
  }
  return set;
}

void write_samples_csv(const SampleSet& set, const std::string& path, int precision) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write samples: " + path);
  out << "player,game,window,label";
  for (std::size_t j = 0; j < set.layout.dim(); ++j) {
    out << "," << set.layout.feature_name(j);
  }
  out << "\n";
  out.precision(precision);
  for (const auto& s : set.samples) {
    out << s.player << "," << s.game << "," << s.window_index << "," << s.label;
    for (double v : s.x) out << "," << v;
    out << "\n";
  }
}

namespace {

// Reconstruct the layout from "<channel>_<band>_<max|mean>" column names.
FeatureLayout layout_from_columns(const std::vector<std::string>& columns,
                                  const std::string& path) {
  FeatureLayout layout;
  layout.bands = default_bands();
  const std::size_t per_channel = layout.bands.size() * 2;
  if (columns.empty() || columns.size() % per_channel != 0)
    throw std::runtime_error(path + ": feature columns are not a whole number of channels");
  for (std::size_t c = 0; c < columns.size(); c += per_channel) {
    const std::string& name = columns[c];
    const auto cut = name.find('_');
    if (cut == std::string::npos)
      throw std::runtime_error(path + ": unrecognized feature column '" + name + "'");
    layout.channels.push_back(name.substr(0, cut));
  }
  return layout;
}

}  // namespace

SampleSet read_samples_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open samples: " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path + ":1: empty file");
  auto header = detail::split_csv(line);
  if (header.size() < 5 || header[0] != "player" || header[1] != "game" ||
      header[2] != "window" || header[3] != "label")
    throw std::runtime_error(path + ":1: expected player,game,window,label,<features> header");

  SampleSet set;
  set.layout = layout_from_columns({header.begin() + 4, header.end()}, path);

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto cells = detail::split_csv(line);
    if (cells.size() != header.size())
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": expected " +
                               std::to_string(header.size()) + " cells, got " +
                               std::to_string(cells.size()));
    ProcessedSample s;
    s.player = cells[0];
    s.game = cells[1];
    s.window_index = static_cast<std::uint64_t>(
        detail::parse_cell(cells[2], path, line_no, 2));
    s.label = static_cast<int>(detail::parse_cell(cells[3], path, line_no, 3));
    s.x.reserve(cells.size() - 4);
    for (std::size_t c = 4; c < cells.size(); ++c) {
      s.x.push_back(detail::parse_cell(cells[c], path, line_no, c));
    }
    set.samples.push_back(std::move(s));
  }
  return set;
}

std::vector<BandCorrelation> band_class_correlation(const SampleSet& set,
                                                    BandStat source) {
  const auto& layout = set.layout;
  std::vector<double> labels(set.samples.size());
  for (std::size_t i = 0; i < set.samples.size(); ++i) {
    labels[i] = static_cast<double>(set.samples[i].label);
  }

  std::vector<BandCorrelation> out;
  for (std::size_t b = 0; b < layout.bands.size(); ++b) {
    BandCorrelation row;
    row.band = layout.bands[b].name;
    for (std::size_t c = 0; c < layout.channels.size(); ++c) {
      const std::size_t idx = c * layout.bands.size() * 2 + b * 2 +
                              (source == BandStat::mean ? 1 : 0);
      std::vector<double> column(set.samples.size());
      for (std::size_t i = 0; i < set.samples.size(); ++i) {
        column[i] = set.samples[i].x[idx];
      }
      double corr = 0.0;
      try {
        corr = std::abs(spearman(column, labels));
      } catch (const std::domain_error&) {
        corr = 0.0;
      }
      row.global += corr;
      const char hemi = hemisphere_of(layout.channels[c]);
      if (hemi == 'l') row.left += corr;
      if (hemi == 'r') row.right += corr;
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace egfc
