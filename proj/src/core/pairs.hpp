#pragma once

#include <vector>

#include "abacus.hpp"
#include "block.hpp"
#include "partition.hpp"

namespace w2b {

/// A [w:k]-pair of blocks: displayed with `frame` beads, the two core
/// displays differ by swapping the contents of runners i-1 and i, with the
/// b side holding k more beads on runner i.  n(b) = n(c) + k.
struct PairInfo {
  BlockId b, c;
  int i = 1;
  int k = 1;
  int frame = 0;

  bool operator==(const PairInfo&) const = default;
};

/// All pairs in which `b` plays the larger role, one per partner core,
/// found by scanning e consecutive framings of the core display.
std::vector<PairInfo> find_pairs(const BlockId& b);

/// pr.frame enlarged by multiples of e until every partition of both blocks
/// fits on the display.
int pair_frame(const PairInfo& pr);

/// The bijection b -> c of a pair, defined by matching runner labels.  Away
/// from the exceptional members (all of b when k >= 2) it coincides with
/// swapping the two runner contents.
Partition phi(const PairInfo& pr, const Partition& la);
/// Rowwise swap of the contents of runners i-1 and i at the pair frame.
Partition phi_swap(const PairInfo& pr, const Partition& la);

/// Indices, into the respective analyzed block, of the three partitions a
/// [2:1]-pair moves irregularly, in descending dominance order.
struct Exceptional {
  int alpha = -1, beta = -1, gamma = -1;
};
Exceptional exceptional_b(const PairInfo& pr);
Exceptional exceptional_c(const PairInfo& pr);

enum class InsertKind { empty_runner, full_runner };

/// Insertion of a new runner at `slot` (0..e) into an e-runner display.
/// The new runner receives beads in rows 0..rows-1.  An empty insertion
/// requires those rows of the original display to be fully occupied, so the
/// new runner is bare where the display is interesting; a full insertion
/// requires every bead to sit in those rows, so the new runner is full
/// throughout.
struct RunnerInsertion {
  int slot = 0;
  InsertKind kind = InsertKind::empty_runner;
  int rows = 0;
};

Partition insert_runner(const Partition& la, int e, const RunnerInsertion& ins, int frame);

/// Whether some framing of the core separates every pair of runner counts:
/// c_i >= c_j + w or c_j >= c_i + w - 1 for all i < j.
bool is_rouquier(const BlockId& b);

/// Shortest chain of pairs leading from b up to a Rouquier block: each step
/// swaps an adjacent runner pair chosen by a breadth-first walk over count
/// profiles.  Entry t has c = the block reached so far and b = the next one;
/// empty when b is already Rouquier.
std::vector<PairInfo> chain_to_rouquier(const BlockId& b);

}  // namespace w2b
