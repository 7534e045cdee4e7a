// Dataset manifest and raw multichannel recording ingestion.
#pragma once

#include <string>
#include <vector>

namespace egfc {

struct CorpusEntry {
  std::string player;
  std::string game;
  int label = 0;      // 1=boredom, 2=calmness, 3=horror/angriness, 4=joy
  std::string path;   // recording CSV, relative to the manifest file
};

struct CorpusManifest {
  double fs_hz = 128.0;
  std::vector<std::string> channels;  // optional; validated against file headers
  std::vector<CorpusEntry> entries;
};

CorpusManifest load_manifest(const std::string& path);
void save_manifest(const CorpusManifest& manifest, const std::string& path);

struct RawRecording {
  CorpusEntry meta;
  double fs_hz = 128.0;
  std::vector<std::string> channels;           // from the CSV header
  std::vector<std::vector<double>> series;     // one column per channel
};

/// One CSV per recording: header row of channel names, one row per sample.
/// Malformed or non-finite cells abort with file/line context.
RawRecording read_recording_csv(const std::string& path, double fs_hz);
void write_recording_csv(const RawRecording& rec, const std::string& path,
                         int precision = 9);

/// All recordings in manifest order; paths resolved against the manifest dir.
std::vector<RawRecording> ingest_corpus(const CorpusManifest& manifest,
                                        const std::string& manifest_dir);
std::vector<RawRecording> ingest_corpus(const std::string& manifest_path);

}  // namespace egfc
