#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace egfc {

// One evaluation-stream element. `truth` is the ground-truth class used for
// scoring; `label_visible` controls whether the learner ever sees it.
struct StreamSample {
  std::vector<double> x;
  std::optional<int> truth;
  bool label_visible = true;
  std::uint64_t h = 0;  // 1-based timestamp index; 0 = positional
};

}  // namespace egfc
