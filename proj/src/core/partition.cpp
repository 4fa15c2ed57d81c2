#include "partition.hpp"

#include <algorithm>
#include <numeric>

#include "error.hpp"

namespace w2b {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    require(parts_[i] > 0, errc::invalid_argument, "partition parts must be positive");
    if (i > 0)
      require(parts_[i - 1] >= parts_[i], errc::invalid_argument,
              "partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  require(i >= 1, errc::invalid_argument, "part index is 1-based");
  return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> out(parts_[0]);
  for (int j = 0; j < parts_[0]; ++j)
    out[j] = static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                            [j](int p) { return p >= j + 1; }));
  return Partition(std::move(out));
}

std::string Partition::str() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  s += ')';
  return s;
}

bool dominates(const Partition& a, const Partition& b) {
  require(a.size() == b.size(), errc::invalid_argument,
          "dominance compares partitions of the same number");
  int sa = 0, sb = 0;
  int len = std::max(a.length(), b.length());
  for (int i = 1; i <= len; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa < sb) return false;
  }
  return true;
}

bool strictly_dominates(const Partition& a, const Partition& b) {
  return a != b && dominates(a, b);
}

namespace {
void gen(int n, int maxp, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(n, maxp); p >= 1; --p) {
    cur.push_back(p);
    gen(n - p, p, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
  require(n >= 0, errc::invalid_argument, "partitions_of needs n >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen(n, n, cur, out);
  return out;
}

}  // namespace w2b
