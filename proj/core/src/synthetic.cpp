#include "egfc/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace egfc {

SyntheticSpec separable4_spec() {
  SyntheticSpec spec;
  spec.classes = 4;
  spec.dims = 10;
  spec.dispersion = 0.03;
  spec.samples_per_class = 500;
  spec.seed = 42;
  // Corner pattern: any two centers differ by 0.6 in at least half the
  // dimensions, so pairwise Euclidean distances exceed 1.3.
  spec.centers.assign(4, std::vector<double>(spec.dims));
  for (std::size_t j = 0; j < spec.dims; ++j) {
    spec.centers[0][j] = 0.2;
    spec.centers[1][j] = 0.8;
    spec.centers[2][j] = (j % 2 == 0) ? 0.2 : 0.8;
    spec.centers[3][j] = (j % 2 == 0) ? 0.8 : 0.2;
  }
  return spec;
}

std::vector<StreamSample> generate_synthetic(const SyntheticSpec& spec) {
  if (spec.classes < 1) throw std::invalid_argument("need at least one class");
  if (spec.centers.size() != static_cast<std::size_t>(spec.classes))
    throw std::invalid_argument("one center per class required");
  for (const auto& c : spec.centers) {
    if (c.size() != spec.dims) throw std::invalid_argument("center dimension mismatch");
  }
  if (!(spec.dispersion >= 0.0)) throw std::invalid_argument("dispersion must be >= 0");
  if (spec.samples_per_class == 0)
    throw std::invalid_argument("samples_per_class must be positive");
  if (spec.label_visibility < 0.0 || spec.label_visibility > 1.0)
    throw std::invalid_argument("label visibility must be in [0,1]");

  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> noise(0.0, spec.dispersion);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const std::uint64_t total = spec.samples_per_class * static_cast<std::uint64_t>(spec.classes);
  std::vector<StreamSample> out;
  out.reserve(total);

  for (std::uint64_t h = 1; h <= total; ++h) {
    const int cls = spec.blocked
                        ? static_cast<int>((h - 1) / spec.samples_per_class) + 1
                        : static_cast<int>((h - 1) % spec.classes) + 1;
    double shift = 0.0;
    for (const auto& d : spec.drift) {
      if (h >= d.at_step) shift += d.shift;
    }
    StreamSample s;
    s.h = h;
    s.truth = cls;
    s.x.resize(spec.dims);
    for (std::size_t j = 0; j < spec.dims; ++j) {
      double center = spec.centers[static_cast<std::size_t>(cls - 1)][j] + shift;
      center -= std::floor(center);  // wrap into [0,1)
      s.x[j] = std::clamp(center + noise(rng), 0.0, 1.0);
    }
    s.label_visible = unit(rng) < spec.label_visibility;
    out.push_back(std::move(s));
  }

  if (spec.shuffle_labels) {
    std::vector<int> labels(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) labels[i] = *out[i].truth;
    std::shuffle(labels.begin(), labels.end(), rng);
    for (std::size_t i = 0; i < out.size(); ++i) out[i].truth = labels[i];
  }
  return out;
}

}  // namespace egfc
