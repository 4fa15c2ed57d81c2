#include <doctest.h>

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "abacus.hpp"
#include "error.hpp"
#include "partition.hpp"

using w2b::AbacusDisplay;
using w2b::HookMove;
using w2b::Partition;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

// One-ribbon removal computed on the Young diagram, with no abacus in sight.
// lambda/mu is an e-ribbon iff mu fits inside lambda, the rows that shrink are
// consecutive, and adjacent shrinking rows overlap in exactly one column.
struct Removal {
  Partition result;
  int leg = 0;
};

std::vector<Removal> ribbon_removals(const Partition& la, int e) {
  std::vector<Removal> out;
  const int n = la.size();
  if (n < e) return out;
  for (const auto& mu : w2b::partitions_of(n - e)) {
    if (mu.length() > la.length()) continue;
    int r1 = -1, r2 = -1;
    bool ok = true;
    for (int i = 0; i < la.length() && ok; ++i) {
      const int m = mu.part(i + 1);
      if (m > la.part(i + 1)) ok = false;
      if (m < la.part(i + 1)) {
        if (r1 < 0) r1 = i;
        if (r2 >= 0 && i != r2 + 1) ok = false;  // shrinking rows must be consecutive
        r2 = i;
      }
    }
    if (!ok || r1 < 0) continue;
    for (int i = r1; i < r2 && ok; ++i)
      if (mu.part(i + 1) != la.part(i + 2) - 1) ok = false;  // one-column overlap
    if (ok) out.push_back({mu, r2 - r1});
  }
  return out;
}

// Strip e-ribbons until none remain; pick_last selects the other extreme of the
// enumeration so the confluence of core/weight/sign gets exercised.
struct StripResult {
  Partition core;
  int weight = 0;
  int sign = 1;
};

StripResult strip(const Partition& la, int e, bool pick_last) {
  StripResult r{la, 0, 1};
  for (;;) {
    auto moves = ribbon_removals(r.core, e);
    if (moves.empty()) return r;
    const Removal& pick = pick_last ? moves.back() : moves.front();
    r.core = pick.result;
    r.weight += 1;
    if (pick.leg % 2 == 1) r.sign = -r.sign;
  }
}

bool naive_regular(const Partition& la, int e) {
  for (int i = 0; i + e - 1 < la.length(); ++i)
    if (la.part(i + 1) == la.part(i + e)) return false;
  return true;
}

bool naive_restricted(const Partition& la, int e) {
  for (int i = 1; i <= la.length(); ++i)
    if (la.part(i) - la.part(i + 1) >= e) return false;
  return true;
}

std::vector<Partition> all_partitions_up_to(int n_max) {
  std::vector<Partition> out;
  for (int n = 0; n <= n_max; ++n)
    for (const auto& la : w2b::partitions_of(n)) out.push_back(la);
  return out;
}

}  // namespace

TEST_CASE("bead positions of small displays") {
  CHECK(w2b::display(P({4}), 2, 4).beads == std::vector<int>{0, 1, 2, 7});
  CHECK(w2b::display(P({3, 1}), 2, 4).beads == std::vector<int>{0, 1, 3, 6});
  CHECK(w2b::display(P({2, 2}), 2, 4).beads == std::vector<int>{0, 1, 4, 5});
  CHECK(w2b::display(P({2, 1, 1}), 2, 4).beads == std::vector<int>{0, 2, 3, 5});
  CHECK(w2b::display(P({1, 1, 1, 1}), 2, 4).beads == std::vector<int>{1, 2, 3, 4});
  CHECK(w2b::display(P({3, 2}), 2, 5).beads == std::vector<int>{0, 1, 2, 5, 7});
  CHECK(w2b::display(P({}), 3, 3).beads == std::vector<int>{0, 1, 2});
}

TEST_CASE("display accessors") {
  AbacusDisplay d = w2b::display(P({2, 2}), 2, 4);
  CHECK(d.e == 2);
  CHECK(d.bead_count() == 4);
  CHECK(d.occupied(0));
  CHECK(d.occupied(4));
  CHECK_FALSE(d.occupied(2));
  CHECK_FALSE(d.occupied(9));
  CHECK(d.runner(5) == 1);
  CHECK(d.row(5) == 2);
  CHECK(d.occupied_between(0, 4) == 1);   // only position 1
  CHECK(d.occupied_between(1, 5) == 1);   // only position 4
  CHECK(d.occupied_between(4, 5) == 0);   // strict on both ends
  CHECK(d.runner_counts() == std::vector<int>{2, 2});
  CHECK(d.runner_rows(0) == std::vector<int>{0, 2});
  CHECK(d.runner_rows(1) == std::vector<int>{0, 2});
}

TEST_CASE("partition round-trips through displays of every frame") {
  for (const auto& la : all_partitions_up_to(8))
    for (int e = 2; e <= 5; ++e)
      for (int extra = 0; extra <= 2; ++extra) {
        const int n_beads = la.length() + extra * e;
        if (n_beads == 0) continue;
        AbacusDisplay d = w2b::display(la, e, n_beads);
        CHECK(d.bead_count() == n_beads);
        CHECK(w2b::partition_of(d) == la);
      }
}

TEST_CASE("core, weight and sign agree with diagram-side ribbon stripping") {
  for (const auto& la : all_partitions_up_to(8))
    for (int e = 2; e <= 5; ++e) {
      StripResult first = strip(la, e, false);
      StripResult last = strip(la, e, true);
      // Confluence: the order ribbons are removed in never matters.
      CHECK(first.core == last.core);
      CHECK(first.weight == last.weight);
      CHECK(first.sign == last.sign);
      auto [core, weight] = w2b::e_core_and_weight(la, e);
      CHECK(core == first.core);
      CHECK(weight == first.weight);
      CHECK(la.size() == core.size() + e * weight);
      CHECK(w2b::relative_sign(la, e) == first.sign);
      CHECK(ribbon_removals(core, e).empty());
    }
}

TEST_CASE("frozen cores and signs") {
  CHECK(w2b::e_core_and_weight(P({4}), 2) == std::pair(P({}), 2));
  CHECK(w2b::e_core_and_weight(P({3, 2}), 2) == std::pair(P({1}), 2));
  CHECK(w2b::e_core_and_weight(P({2, 1}), 2) == std::pair(P({2, 1}), 0));
  CHECK(w2b::relative_sign(P({4}), 2) == 1);
  CHECK(w2b::relative_sign(P({3, 1}), 2) == -1);
  CHECK(w2b::relative_sign(P({2, 2}), 2) == 1);
  CHECK(w2b::relative_sign(P({2, 1, 1}), 2) == -1);
  CHECK(w2b::relative_sign(P({1, 1, 1, 1}), 2) == 1);
}

TEST_CASE("regular and restricted match the part-wise definitions") {
  for (const auto& la : all_partitions_up_to(8))
    for (int e = 2; e <= 5; ++e) {
      CHECK(w2b::is_e_regular(la, e) == naive_regular(la, e));
      CHECK(w2b::is_e_restricted(la, e) == naive_restricted(la, e));
      CHECK(w2b::is_e_restricted(la, e) == w2b::is_e_regular(la.conjugate(), e));
    }
}

TEST_CASE("up moves from (2,2) on two runners") {
  AbacusDisplay d = w2b::display(P({2, 2}), 2, 4);
  auto moves = w2b::up_moves(d);
  REQUIRE(moves.size() == 2);
  CHECK(moves[0].first == HookMove{4, 2, 0, 1});
  CHECK(w2b::partition_of(moves[0].second) == P({2}));
  CHECK(moves[1].first == HookMove{5, 3, 1, 1});
  CHECK(w2b::partition_of(moves[1].second) == P({1, 1}));
}

TEST_CASE("down moves from the empty display") {
  AbacusDisplay d = w2b::display(P({}), 2, 2);
  auto moves = w2b::down_moves(d, 2);
  REQUIRE(moves.size() == 4);
  std::set<std::pair<Partition, int>> got;
  for (const auto& [mv, disp] : moves) {
    CHECK(disp.bead_count() == 2);
    CHECK(mv.to == mv.from + 2 * mv.steps);
    got.insert({w2b::partition_of(disp), mv.leg});
  }
  std::set<std::pair<Partition, int>> want = {
      {P({1, 1}), 1}, {P({3, 1}), 1}, {P({2}), 0}, {P({4}), 0}};
  CHECK(got == want);
}

TEST_CASE("up and down moves are inverse on every weight-two display") {
  for (const auto& la : all_partitions_up_to(8))
    for (int e = 2; e <= 4; ++e) {
      AbacusDisplay d = w2b::display(la, e, la.length() + e);
      for (const auto& [mv, up] : w2b::up_moves(d)) {
        CHECK(w2b::apply_move(d, mv.from, mv.to) == up);
        CHECK(w2b::apply_move(up, mv.to, mv.from) == d);
        CHECK(w2b::partition_of(up).size() == la.size() - e * mv.steps);
        // The move reappears among the downward moves of its result.
        bool found = false;
        for (const auto& [back, down] : w2b::down_moves(up, mv.steps))
          if (back.from == mv.to && back.to == mv.from && down == d) {
            found = true;
            CHECK(back.leg == mv.leg);
            CHECK(back.steps == mv.steps);
          }
        CHECK(found);
      }
    }
}

TEST_CASE("apply_move rejects bad endpoints") {
  AbacusDisplay d = w2b::display(P({2, 2}), 2, 4);
  CHECK_THROWS_AS((void)w2b::apply_move(d, 2, 4), w2b::error);   // source vacant
  CHECK_THROWS_AS((void)w2b::apply_move(d, 4, 0), w2b::error);   // target occupied
  CHECK_THROWS_AS((void)w2b::apply_move(d, 4, 3), w2b::error);   // runner change
  CHECK_THROWS_AS((void)w2b::apply_move(d, -1, 3), w2b::error);  // out of range
}
