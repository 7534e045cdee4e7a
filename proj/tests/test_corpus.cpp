#include <doctest.h>

#include <stdexcept>

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "egfc/corpus.hpp"
#include "egfc/features.hpp"

using namespace egfc;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("egfc_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream out(p);
  out << content;
}

}  // namespace

TEST_CASE("recording ingestion preserves order and values") {
  TempDir tmp;
  write_file(tmp.path / "rec.csv",
             "Af3,Af4\n"
             "1.25,-2.5\n"
             "3.5,4.75\n"
             "0.0,1.0\n");
  const auto rec = read_recording_csv((tmp.path / "rec.csv").string(), 128.0);
  REQUIRE(rec.channels == std::vector<std::string>{"Af3", "Af4"});
  REQUIRE(rec.series[0].size() == 3);
  CHECK(rec.series[0][0] == 1.25);
  CHECK(rec.series[1][0] == -2.5);
  CHECK(rec.series[0][2] == 0.0);

  // lossless re-emission round trip
  write_recording_csv(rec, (tmp.path / "out.csv").string());
  const auto again = read_recording_csv((tmp.path / "out.csv").string(), 128.0);
  CHECK(again.channels == rec.channels);
  CHECK(again.series == rec.series);
}

TEST_CASE("malformed rows are rejected with their line number") {
  TempDir tmp;
  write_file(tmp.path / "bad.csv",
             "A,B\n"
             "1.0,2.0\n"
             "1.0,oops\n");
  try {
    read_recording_csv((tmp.path / "bad.csv").string(), 128.0);
    FAIL("expected a parse error");
  } catch (const std::runtime_error& e) {
    const std::string msg = e.what();
    CHECK(msg.find(":3:") != std::string::npos);
    CHECK(msg.find("column 2") != std::string::npos);
  }

  write_file(tmp.path / "ragged.csv", "A,B\n1.0\n");
  CHECK_THROWS_AS(read_recording_csv((tmp.path / "ragged.csv").string(), 128.0),
                  std::runtime_error);
  CHECK_THROWS_AS(read_recording_csv((tmp.path / "missing.csv").string(), 128.0),
                  std::runtime_error);
}

TEST_CASE("manifest round trip and ordered corpus ingestion") {
  TempDir tmp;
  CorpusManifest manifest;
  manifest.fs_hz = 128.0;
  for (int p = 0; p < 2; ++p) {
    for (int g = 1; g <= 2; ++g) {
      const std::string name =
          "p" + std::to_string(p) + "_g" + std::to_string(g) + ".csv";
      std::string content = "X1,X2\n";
      for (int r = 0; r < 4; ++r) {
        content += std::to_string(p) + "." + std::to_string(r) + "," +
                   std::to_string(g) + ".5\n";
      }
      write_file(tmp.path / name, content);
      manifest.entries.push_back({"p" + std::to_string(p), "g" + std::to_string(g),
                                  g, name});
    }
  }
  save_manifest(manifest, (tmp.path / "manifest.json").string());

  const auto loaded = load_manifest((tmp.path / "manifest.json").string());
  CHECK(loaded.fs_hz == 128.0);
  REQUIRE(loaded.entries.size() == 4);
  CHECK(loaded.entries[0].player == "p0");
  CHECK(loaded.entries[3].game == "g2");

  const auto recs = ingest_corpus((tmp.path / "manifest.json").string());
  REQUIRE(recs.size() == 4);
  for (std::size_t i = 0; i < recs.size(); ++i) {
    CHECK(recs[i].meta.player == loaded.entries[i].player);
    CHECK(recs[i].meta.label == loaded.entries[i].label);
    CHECK(recs[i].channels == std::vector<std::string>{"X1", "X2"});
    CHECK(recs[i].series[0].size() == 4);
  }
}

TEST_CASE("corpus ingestion fails when headers disagree") {
  TempDir tmp;
  write_file(tmp.path / "a.csv", "A,B\n1,2\n");
  write_file(tmp.path / "b.csv", "A,C\n1,2\n");
  CorpusManifest manifest;
  manifest.entries = {{"p", "g1", 1, "a.csv"}, {"p", "g2", 2, "b.csv"}};
  save_manifest(manifest, (tmp.path / "m.json").string());
  CHECK_THROWS_AS(ingest_corpus((tmp.path / "m.json").string()), std::runtime_error);

  // a declared channel schema is enforced against every file
  manifest.entries.pop_back();
  manifest.channels = {"A", "Z"};
  save_manifest(manifest, (tmp.path / "m2.json").string());
  CHECK_THROWS_AS(ingest_corpus((tmp.path / "m2.json").string()), std::runtime_error);
  manifest.channels = {"A", "B"};
  save_manifest(manifest, (tmp.path / "m3.json").string());
  CHECK(ingest_corpus((tmp.path / "m3.json").string()).size() == 1);
}

TEST_CASE("feature extraction: counts, metadata, and layout naming") {
  std::vector<RawRecording> recs(2);
  for (int i = 0; i < 2; ++i) {
    recs[i].fs_hz = 128.0;
    recs[i].meta = {"p0", "g" + std::to_string(i + 1), i + 1, ""};
    recs[i].channels = {"Af3", "T8"};
    recs[i].series.assign(2, std::vector<double>(38400, 0.1 * (i + 1)));
  }

  ExtractOptions options;
  options.window_seconds = 10.0;
  const auto set = extract_features(recs, options);
  CHECK(set.layout.dim() == 20);
  REQUIRE(set.samples.size() == 60);  // 2 recordings x 30 windows
  CHECK(set.samples[0].player == "p0");
  CHECK(set.samples[0].game == "g1");
  CHECK(set.samples[0].window_index == 0);
  CHECK(set.samples[29].window_index == 29);
  CHECK(set.samples[30].game == "g2");
  CHECK(set.samples[30].window_index == 0);
  CHECK(set.samples[0].label == 1);
  CHECK(set.samples[59].label == 2);

  CHECK(set.layout.feature_name(0) == "Af3_Delta_max");
  CHECK(set.layout.feature_name(1) == "Af3_Delta_mean");
  CHECK(set.layout.feature_name(5) == "Af3_Alpha_mean");
  CHECK(set.layout.feature_name(10) == "T8_Delta_max");
  CHECK(set.layout.feature_name(19) == "T8_Gamma_mean");

  // constant signal: all band features are zero (energy only at DC)
  for (double v : set.samples[0].x) CHECK(v < 1e-9);
}

TEST_CASE("processed-sample CSV round trip") {
  std::vector<RawRecording> recs(1);
  recs[0].fs_hz = 128.0;
  recs[0].meta = {"p7", "g3", 3, ""};
  recs[0].channels = {"O1", "O2"};
  recs[0].series.assign(2, std::vector<double>(3840));
  std::mt19937_64 rng(89);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (auto& col : recs[0].series) {
    for (auto& v : col) v = unif(rng);
  }

  ExtractOptions options;
  options.window_seconds = 10.0;
  const auto set = extract_features(recs, options);
  REQUIRE(set.samples.size() == 3);

  TempDir tmp;
  const auto path = (tmp.path / "samples.csv").string();
  write_samples_csv(set, path);
  const auto loaded = read_samples_csv(path);
  CHECK(loaded.layout.channels == set.layout.channels);
  REQUIRE(loaded.samples.size() == set.samples.size());
  for (std::size_t i = 0; i < set.samples.size(); ++i) {
    CHECK(loaded.samples[i].player == set.samples[i].player);
    CHECK(loaded.samples[i].game == set.samples[i].game);
    CHECK(loaded.samples[i].label == set.samples[i].label);
    CHECK(loaded.samples[i].window_index == set.samples[i].window_index);
    REQUIRE(loaded.samples[i].x.size() == set.samples[i].x.size());
    for (std::size_t j = 0; j < set.samples[i].x.size(); ++j) {
      CHECK(loaded.samples[i].x[j] ==
            doctest::Approx(set.samples[i].x[j]).epsilon(1e-9));
    }
  }
}
