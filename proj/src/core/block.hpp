#pragma once

#include <vector>

#include "partition.hpp"

namespace w2b {

/// A block of partitions: all partitions with the given e-core and e-weight.
struct BlockId {
  int e = 2;
  Partition core;
  int weight = 0;

  bool operator==(const BlockId&) const = default;
  auto operator<=>(const BlockId&) const = default;

  BlockId conjugate() const { return {e, core.conjugate(), weight}; }
  /// Size of the partitions in the block.
  int n() const { return core.size() + e * weight; }
};

bool is_e_core(const Partition& la, int e);
/// Throws invalid_argument unless e >= 2, the core is an e-core and the
/// weight is a small non-negative number (enumeration is supported up to
/// weight 4).
void validate_block(const BlockId& b);

/// Bead count used for the block's displays: length(core) + weight * e.
/// With this frame the lowest weight*e positions of the core display are all
/// occupied, so every runner holds at least `weight` beads.
int default_frame(const BlockId& b);

BlockId block_of(const Partition& la, int e);

/// All partitions in the block, descending lexicographic.
std::vector<Partition> enumerate_block(const BlockId& b);

}  // namespace w2b
