// Seeded synthetic stream generation: axis-aligned Gaussian clusters in the
// unit hypercube with optional center drift and partial label visibility.
#pragma once

#include <cstdint>
#include <vector>

#include "egfc/stream.hpp"

namespace egfc {

struct DriftEvent {
  std::uint64_t at_step = 0;  // first 1-based step that uses the shifted centers
  double shift = 0.0;         // added to every center coordinate, wrapped into [0,1)
};

struct SyntheticSpec {
  int classes = 4;
  std::size_t dims = 10;
  std::vector<std::vector<double>> centers;  // one per class, in [0,1]^dims
  double dispersion = 0.03;                  // per-dimension standard deviation
  std::uint64_t samples_per_class = 500;
  bool blocked = false;                      // false = round-robin interleave
  std::vector<DriftEvent> drift;
  double label_visibility = 1.0;             // fraction of labels the learner sees
  bool shuffle_labels = false;               // detach labels from features
  std::uint64_t seed = 1;
};

/// Four well-separated 10-dim clusters, 2000 samples, all labels visible.
SyntheticSpec separable4_spec();

/// Deterministic for a fixed spec; samples are clipped to [0,1]^dims.
std::vector<StreamSample> generate_synthetic(const SyntheticSpec& spec);

}  // namespace egfc
