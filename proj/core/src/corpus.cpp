#include "egfc/corpus.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "csv_util.hpp"

namespace egfc {

CorpusManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("manifest parse error in " + path + ": " + e.what());
  }
  CorpusManifest m;
  m.fs_hz = j.value("fs_hz", 128.0);
  if (!(m.fs_hz > 0.0)) throw std::runtime_error("manifest fs_hz must be positive");
  if (j.contains("channels")) {
    for (const auto& c : j.at("channels")) m.channels.push_back(c.get<std::string>());
  }
  for (const auto& r : j.at("recordings")) {
    CorpusEntry e;
    e.player = r.at("player").get<std::string>();
    e.game = r.at("game").get<std::string>();
    e.label = r.at("class").get<int>();
    e.path = r.at("path").get<std::string>();
    m.entries.push_back(std::move(e));
  }
  return m;
}

void save_manifest(const CorpusManifest& manifest, const std::string& path) {
  nlohmann::json j;
  j["fs_hz"] = manifest.fs_hz;
  if (!manifest.channels.empty()) j["channels"] = manifest.channels;
  j["recordings"] = nlohmann::json::array();
  for (const auto& e : manifest.entries) {
    j["recordings"].push_back({{"player", e.player},
                               {"game", e.game},
                               {"class", e.label},
                               {"path", e.path}});
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write manifest: " + path);
  out << j.dump(2) << "\n";
}

RawRecording read_recording_csv(const std::string& path, double fs_hz) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open recording: " + path);

  RawRecording rec;
  rec.fs_hz = fs_hz;
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error(path + ":1: empty file, expected channel header");
  rec.channels = detail::split_csv(line);
  if (rec.channels.empty() || rec.channels[0].empty())
    throw std::runtime_error(path + ":1: missing channel names in header");
  rec.series.assign(rec.channels.size(), {});

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto cells = detail::split_csv(line);
    if (cells.size() != rec.channels.size()) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": expected " +
                               std::to_string(rec.channels.size()) + " cells, got " +
                               std::to_string(cells.size()));
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const double v = detail::parse_cell(cells[c], path, line_no, c);
      if (!std::isfinite(v)) {
        throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                 ": non-finite value in column " + std::to_string(c + 1));
      }
      rec.series[c].push_back(v);
    }
  }
  return rec;
}

void write_recording_csv(const RawRecording& rec, const std::string& path,
                         int precision) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write recording: " + path);
  for (std::size_t c = 0; c < rec.channels.size(); ++c) {
    out << (c ? "," : "") << rec.channels[c];
  }
  out << "\n";
  out.precision(precision);
  const std::size_t rows = rec.series.empty() ? 0 : rec.series[0].size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < rec.series.size(); ++c) {
      out << (c ? "," : "") << rec.series[c][r];
    }
    out << "\n";
  }
}

std::vector<RawRecording> ingest_corpus(const CorpusManifest& manifest,
                                        const std::string& manifest_dir) {
  std::vector<RawRecording> out;
  out.reserve(manifest.entries.size());
  const std::filesystem::path base(manifest_dir);
  for (const auto& entry : manifest.entries) {
    std::filesystem::path p(entry.path);
    if (p.is_relative()) p = base / p;
    RawRecording rec = read_recording_csv(p.string(), manifest.fs_hz);
    if (!manifest.channels.empty() && rec.channels != manifest.channels) {
      throw std::runtime_error(p.string() +
                               ": channel header does not match the manifest");
    }
    if (!out.empty() && rec.channels != out.front().channels) {
      throw std::runtime_error(p.string() + ": channel header differs from " +
                               out.front().meta.path);
    }
    rec.meta = entry;
    rec.meta.path = p.string();
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<RawRecording> ingest_corpus(const std::string& manifest_path) {
  const auto manifest = load_manifest(manifest_path);
  return ingest_corpus(manifest,
                       std::filesystem::path(manifest_path).parent_path().string());
}

}  // namespace egfc
