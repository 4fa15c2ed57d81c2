#include "block.hpp"

#include <algorithm>
#include <functional>

#include "abacus.hpp"
#include "error.hpp"

namespace w2b {

bool is_e_core(const Partition& la, int e) { return e_core_and_weight(la, e).second == 0; }

void validate_block(const BlockId& b) {
  require(b.e >= 2, errc::invalid_argument, "block needs e >= 2");
  require(b.weight >= 0, errc::invalid_argument, "block weight must be >= 0");
  require(b.weight <= 4, errc::invalid_argument, "block enumeration supports weight <= 4");
  require(is_e_core(b.core, b.e), errc::invalid_argument,
          "core " + b.core.str() + " is not an " + std::to_string(b.e) + "-core");
}

int default_frame(const BlockId& b) { return b.core.length() + b.weight * b.e; }

BlockId block_of(const Partition& la, int e) {
  auto [core, weight] = e_core_and_weight(la, e);
  return {e, core, weight};
}

std::vector<Partition> enumerate_block(const BlockId& b) {
  validate_block(b);
  int frame = default_frame(b);
  AbacusDisplay core_disp = display(b.core, b.e, frame);

  // Distribute the weight over the runners: a partition of m_r slides the
  // bottommost beads of runner r down, the j-th largest slide applying to the
  // j-th bead from the bottom.
  std::vector<std::vector<int>> rows(b.e);
  for (int r = 0; r < b.e; ++r) rows[r] = core_disp.runner_rows(r);

  std::vector<std::vector<Partition>> parts_by_size(b.weight + 1);
  for (int m = 0; m <= b.weight; ++m) parts_by_size[m] = partitions_of(m);

  std::vector<Partition> out;
  std::vector<const Partition*> chosen(b.e, nullptr);
  std::function<void(int, int)> rec = [&](int r, int left) {
    if (r == b.e) {
      if (left != 0) return;
      std::vector<int> beads;
      for (int rr = 0; rr < b.e; ++rr) {
        const auto& qs = rows[rr];
        const auto& om = *chosen[rr];
        int c = static_cast<int>(qs.size());
        for (int j = 0; j < c; ++j) {
          // j-th bead from the bottom slides down by part j+1 of the runner's
          // partition.
          beads.push_back(rr + (qs[c - 1 - j] + om.part(j + 1)) * b.e);
        }
      }
      std::sort(beads.begin(), beads.end());
      out.push_back(partition_of(AbacusDisplay{b.e, std::move(beads)}));
      return;
    }
    int cap = static_cast<int>(rows[r].size());
    for (int m = 0; m <= left; ++m)
      for (const Partition& om : parts_by_size[m]) {
        if (om.length() > cap) continue;
        chosen[r] = &om;
        rec(r + 1, left - m);
      }
    chosen[r] = nullptr;
  };
  rec(0, b.weight);

  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace w2b
