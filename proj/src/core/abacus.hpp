#pragma once

#include <utility>
#include <vector>

#include "partition.hpp"

namespace w2b {

/// Bead positions of a partition on an abacus with e runners.  Position p
/// sits on runner p mod e in row p div e.  Beads are kept sorted ascending.
struct AbacusDisplay {
  int e = 2;
  std::vector<int> beads;

  int bead_count() const { return static_cast<int>(beads.size()); }
  bool occupied(int pos) const;
  int runner(int pos) const { return pos % e; }
  int row(int pos) const { return pos / e; }
  /// Number of occupied positions strictly between lo and hi.
  int occupied_between(int lo, int hi) const;
  /// Rows (ascending) of the beads on one runner.
  std::vector<int> runner_rows(int r) const;
  std::vector<int> runner_counts() const;

  bool operator==(const AbacusDisplay&) const = default;
};

/// Display of la with n_beads beads: bead i at la_i + n_beads - i.
AbacusDisplay display(const Partition& la, int e, int n_beads);
Partition partition_of(const AbacusDisplay& d);

std::pair<Partition, int> e_core_and_weight(const Partition& la, int e);
/// (-1)^t where t sums the leg lengths of single-step upward bead moves
/// taken until the core is reached.  The parity of t does not depend on the
/// order of the moves.
int relative_sign(const Partition& la, int e);

/// No e equal nonzero parts.
bool is_e_regular(const Partition& la, int e);
/// Conjugate is e-regular.
bool is_e_restricted(const Partition& la, int e);

/// One bead move between positions `from` (occupied) and `to` (vacant) on the
/// same runner.  leg counts occupied positions strictly between the two, in
/// the display the move is applied to; steps = |from - to| / e.
struct HookMove {
  int from = 0;
  int to = 0;
  int leg = 0;
  int steps = 0;
  bool operator==(const HookMove&) const = default;
};

AbacusDisplay apply_move(const AbacusDisplay& d, int from, int to);

/// Every (bead, step count) pair whose target position from - steps*e is
/// vacant and >= 0, with the resulting display.
std::vector<std::pair<HookMove, AbacusDisplay>> up_moves(const AbacusDisplay& d);
/// Downward counterpart; the abacus is unbounded below, so the caller bounds
/// the step count.
std::vector<std::pair<HookMove, AbacusDisplay>> down_moves(const AbacusDisplay& d, int max_steps);

}  // namespace w2b
