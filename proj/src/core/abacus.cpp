#include "abacus.hpp"

#include <algorithm>

#include "error.hpp"

namespace w2b {

bool AbacusDisplay::occupied(int pos) const {
  return std::binary_search(beads.begin(), beads.end(), pos);
}

int AbacusDisplay::occupied_between(int lo, int hi) const {
  if (lo > hi) std::swap(lo, hi);
  auto a = std::upper_bound(beads.begin(), beads.end(), lo);
  auto b = std::lower_bound(beads.begin(), beads.end(), hi);
  return static_cast<int>(b - a);
}

std::vector<int> AbacusDisplay::runner_rows(int r) const {
  std::vector<int> rows;
  for (int p : beads)
    if (p % e == r) rows.push_back(p / e);
  return rows;
}

std::vector<int> AbacusDisplay::runner_counts() const {
  std::vector<int> c(e, 0);
  for (int p : beads) ++c[p % e];
  return c;
}

AbacusDisplay display(const Partition& la, int e, int n_beads) {
  require(e >= 2, errc::invalid_argument, "abacus needs e >= 2");
  require(n_beads >= la.length(), errc::invalid_argument,
          "bead count must be at least the number of parts");
  AbacusDisplay d{e, {}};
  d.beads.reserve(n_beads);
  for (int i = n_beads; i >= 1; --i) d.beads.push_back(la.part(i) + n_beads - i);
  std::sort(d.beads.begin(), d.beads.end());
  return d;
}

Partition partition_of(const AbacusDisplay& d) {
  int n = d.bead_count();
  std::vector<int> parts;
  for (int i = 0; i < n; ++i) {
    int la = d.beads[n - 1 - i] - (n - 1 - i);
    if (la > 0) parts.push_back(la);
  }
  return Partition(std::move(parts));
}

std::pair<Partition, int> e_core_and_weight(const Partition& la, int e) {
  AbacusDisplay d = display(la, e, la.length());
  int weight = 0;
  std::vector<int> core_beads;
  for (int r = 0; r < e; ++r) {
    std::vector<int> rows = d.runner_rows(r);
    for (size_t j = 0; j < rows.size(); ++j) {
      weight += rows[j] - static_cast<int>(j);
      core_beads.push_back(r + static_cast<int>(j) * e);
    }
  }
  std::sort(core_beads.begin(), core_beads.end());
  return {partition_of(AbacusDisplay{e, std::move(core_beads)}), weight};
}

int relative_sign(const Partition& la, int e) {
  AbacusDisplay d = display(la, e, la.length());
  int t = 0;
  for (;;) {
    bool moved = false;
    for (int p : d.beads) {
      if (p - e >= 0 && !d.occupied(p - e)) {
        t += d.occupied_between(p - e, p);
        d = apply_move(d, p, p - e);
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return t % 2 == 0 ? 1 : -1;
}

bool is_e_regular(const Partition& la, int e) {
  require(e >= 2, errc::invalid_argument, "regularity needs e >= 2");
  const auto& p = la.parts();
  for (size_t i = 0; i + e <= p.size(); ++i)
    if (p[i] == p[i + e - 1]) return false;
  return true;
}

bool is_e_restricted(const Partition& la, int e) { return is_e_regular(la.conjugate(), e); }

AbacusDisplay apply_move(const AbacusDisplay& d, int from, int to) {
  require(d.occupied(from), errc::invalid_argument, "move source must be occupied");
  require(to >= 0 && !d.occupied(to), errc::invalid_argument, "move target must be vacant");
  require((from - to) % d.e == 0, errc::invalid_argument, "moves stay on one runner");
  AbacusDisplay out = d;
  out.beads.erase(std::find(out.beads.begin(), out.beads.end(), from));
  out.beads.insert(std::upper_bound(out.beads.begin(), out.beads.end(), to), to);
  return out;
}

std::vector<std::pair<HookMove, AbacusDisplay>> up_moves(const AbacusDisplay& d) {
  std::vector<std::pair<HookMove, AbacusDisplay>> out;
  for (int p : d.beads)
    for (int i = 1; p - i * d.e >= 0; ++i) {
      int to = p - i * d.e;
      if (d.occupied(to)) continue;
      out.push_back({{p, to, d.occupied_between(to, p), i}, apply_move(d, p, to)});
    }
  return out;
}

std::vector<std::pair<HookMove, AbacusDisplay>> down_moves(const AbacusDisplay& d, int max_steps) {
  require(max_steps >= 0, errc::invalid_argument, "down_moves needs a step bound");
  std::vector<std::pair<HookMove, AbacusDisplay>> out;
  for (int p : d.beads)
    for (int i = 1; i <= max_steps; ++i) {
      int to = p + i * d.e;
      if (d.occupied(to)) continue;
      out.push_back({{p, to, d.occupied_between(p, to), i}, apply_move(d, p, to)});
    }
  return out;
}

}  // namespace w2b
