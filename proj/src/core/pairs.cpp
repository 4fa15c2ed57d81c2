#include "pairs.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "decomp.hpp"
#include "error.hpp"

namespace w2b {

namespace {

Partition swap_runners(const Partition& la, int e, int i, int frame) {
  AbacusDisplay d = display(la, e, frame);
  std::vector<int> beads;
  beads.reserve(d.beads.size());
  for (int p : d.beads) {
    int r = p % e;
    if (r == i)
      beads.push_back(p - 1);
    else if (r == i - 1)
      beads.push_back(p + 1);
    else
      beads.push_back(p);
  }
  std::sort(beads.begin(), beads.end());
  return partition_of({e, beads});
}

/// Beads of runner `run` whose horizontal neighbour (offset -1 or +1) is
/// vacant.
int loose_on_runner(const AbacusDisplay& d, int run, int offset) {
  int count = 0;
  for (int p : d.beads)
    if (p % d.e == run && !d.occupied(p + offset)) ++count;
  return count;
}

// Runner-count profile of a core in a fixed framing, kept normalised so the
// smallest count is zero; every quantity below depends only on differences.
using Profile = std::vector<int>;

Profile normalised(Profile c) {
  int lo = *std::min_element(c.begin(), c.end());
  for (int& x : c) x -= lo;
  return c;
}

// Separation test: some framing must have, for every i < j, either
// c_i >= c_j + w or c_j >= c_i + (w - 1).  Moving to the next framing
// rotates the profile and lifts the wrapped runner by one row.
bool profile_separated(Profile c, int w) {
  const int e = static_cast<int>(c.size());
  for (int m = 0; m < e; ++m) {
    bool ok = true;
    for (int i = 0; i < e && ok; ++i)
      for (int j = i + 1; j < e && ok; ++j)
        if (c[i] < c[j] + w && c[j] < c[i] + w - 1) ok = false;
    if (ok) return true;
    c.insert(c.begin(), c.back() + 1);
    c.pop_back();
  }
  return false;
}

// Adjacent runner swaps as seen on profiles.  Move j >= 1 exchanges runners
// j-1 and j when the left one is strictly taller; move 0 is the same swap
// performed one framing up, so it exchanges the two ends with a one-row
// correction and is legal when the last count is at least the first.
bool profile_move(const Profile& c, int j, Profile& out) {
  const int e = static_cast<int>(c.size());
  if (j == 0) {
    if (c[e - 1] < c[0]) return false;
    out = c;
    out[0] = c[e - 1] + 1;
    out[e - 1] = c[0] - 1;
    return true;
  }
  if (c[j - 1] <= c[j]) return false;
  out = c;
  std::swap(out[j - 1], out[j]);
  return true;
}

// First move of a shortest walk from `start` into the separated region,
// found breadth-first.  Such a walk always exists, and after taking one
// step the remaining distance drops by one, so a caller that replans after
// every step terminates.
int plan_first_move(const Profile& start, int w) {
  struct Node {
    Profile c;
    int parent;
    int move;
  };
  std::vector<Node> nodes{{normalised(start), -1, -1}};
  std::set<Profile> seen{nodes[0].c};
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    require(nodes.size() < (std::size_t{1} << 18), errc::internal,
            "runner-swap chain failed to reach a Rouquier block");
    for (int j = 0; j < static_cast<int>(start.size()); ++j) {
      Profile next;
      if (!profile_move(nodes[head].c, j, next)) continue;
      next = normalised(std::move(next));
      if (!seen.insert(next).second) continue;
      if (profile_separated(next, w)) {
        int at = static_cast<int>(head), mv = j;
        while (nodes[at].parent >= 0) {
          mv = nodes[at].move;
          at = nodes[at].parent;
        }
        return mv;
      }
      nodes.push_back({std::move(next), static_cast<int>(head), j});
    }
  }
  require(false, errc::internal, "runner-swap chain failed to reach a Rouquier block");
  return -1;
}

Exceptional pick_triple(const BlockData& bd, int frame, int run, int offset) {
  std::vector<int> hits;
  for (int idx = 0; idx < static_cast<int>(bd.partitions.size()); ++idx) {
    AbacusDisplay d = display(bd.partitions[idx], bd.id.e, frame);
    if (loose_on_runner(d, run, offset) >= 2) hits.push_back(idx);
  }
  require(hits.size() == 3, errc::internal, "a [2:1]-pair has exactly three exceptional members");
  require(strictly_dominates(bd.partitions[hits[0]], bd.partitions[hits[1]]) &&
              strictly_dominates(bd.partitions[hits[1]], bd.partitions[hits[2]]),
          errc::internal, "exceptional members must form a dominance chain");
  return {hits[0], hits[1], hits[2]};
}

}  // namespace

std::vector<PairInfo> find_pairs(const BlockId& b) {
  validate_block(b);
  const int e = b.e;
  const int base = default_frame(b);
  std::vector<PairInfo> pairs;
  std::map<Partition, bool> seen;
  for (int frame = base; frame < base + e; ++frame) {
    auto counts = display(b.core, e, frame).runner_counts();
    for (int i = 1; i < e; ++i) {
      int k = counts[i] - counts[i - 1];
      if (k < 1) continue;
      Partition partner = swap_runners(b.core, e, i, frame);
      require(is_e_core(partner, e), errc::internal, "runner swap of a core must be a core");
      if (seen[partner]) continue;
      seen[partner] = true;
      pairs.push_back({b, {e, partner, b.weight}, i, k, frame});
    }
  }
  return pairs;
}

int pair_frame(const PairInfo& pr) {
  int needed = std::max(pr.b.core.length(), pr.c.core.length()) + pr.b.weight * pr.b.e;
  int f = pr.frame;
  while (f < needed) f += pr.b.e;
  return f;
}

Partition phi(const PairInfo& pr, const Partition& la) {
  auto bb = analyze_block(pr.b);
  auto cc = analyze_block(pr.c);
  const Weight2Label& lab = bb->labels[bb->index_of(la)];
  return cc->partitions[partition_of_label(*cc, lab.a, lab.b)];
}

Partition phi_swap(const PairInfo& pr, const Partition& la) {
  return swap_runners(la, pr.b.e, pr.i, pair_frame(pr));
}

Exceptional exceptional_b(const PairInfo& pr) {
  require(pr.k == 1, errc::invalid_argument, "exceptional members exist only for k = 1");
  return pick_triple(*analyze_block(pr.b), pair_frame(pr), pr.i, -1);
}

Exceptional exceptional_c(const PairInfo& pr) {
  require(pr.k == 1, errc::invalid_argument, "exceptional members exist only for k = 1");
  return pick_triple(*analyze_block(pr.c), pair_frame(pr), pr.i - 1, +1);
}

Partition insert_runner(const Partition& la, int e, const RunnerInsertion& ins, int frame) {
  require(e >= 2, errc::invalid_argument, "e must be at least 2");
  require(ins.slot >= 0 && ins.slot <= e, errc::invalid_argument, "slot must lie in 0..e");
  require(ins.rows >= 0, errc::invalid_argument, "rows must be non-negative");
  AbacusDisplay d = display(la, e, frame);
  if (ins.kind == InsertKind::empty_runner) {
    for (int q = 0; q < ins.rows; ++q)
      for (int r = 0; r < e; ++r)
        require(d.occupied(q * e + r), errc::invalid_argument,
                "empty insertion needs the bottom rows fully occupied");
  } else {
    for (int p : d.beads)
      require(p / e < ins.rows, errc::invalid_argument,
              "full insertion needs every bead inside the filled rows");
  }
  std::vector<int> beads;
  beads.reserve(d.beads.size() + ins.rows);
  for (int p : d.beads) {
    int q = p / e, r = p % e;
    beads.push_back(q * (e + 1) + (r < ins.slot ? r : r + 1));
  }
  for (int q = 0; q < ins.rows; ++q) beads.push_back(q * (e + 1) + ins.slot);
  std::sort(beads.begin(), beads.end());
  return partition_of({e + 1, beads});
}

bool is_rouquier(const BlockId& b) {
  validate_block(b);
  return profile_separated(display(b.core, b.e, default_frame(b)).runner_counts(), b.weight);
}

std::vector<PairInfo> chain_to_rouquier(const BlockId& b) {
  validate_block(b);
  const int e = b.e;
  std::vector<PairInfo> chain;
  BlockId cur = b;
  while (!is_rouquier(cur)) {
    const int base = default_frame(cur);
    auto counts = display(cur.core, e, base).runner_counts();
    const int mv = plan_first_move(counts, cur.weight);
    const int i = mv == 0 ? 1 : mv;
    const int frame = mv == 0 ? base + 1 : base;
    const int k = mv == 0 ? counts[e - 1] + 1 - counts[0] : counts[mv - 1] - counts[mv];
    require(k >= 1, errc::internal, "chain step must raise the block");
    Partition up = swap_runners(cur.core, e, i, frame);
    require(is_e_core(up, e), errc::internal, "runner swap of a core must be a core");
    PairInfo pr{{e, up, cur.weight}, cur, i, k, frame};
    chain.push_back(pr);
    cur = pr.b;
  }
  return chain;
}

}  // namespace w2b
