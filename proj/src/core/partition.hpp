#pragma once

#include <compare>
#include <string>
#include <vector>

namespace w2b {

/// A partition: weakly decreasing sequence of positive integers.  The empty
/// partition has no parts.  operator<=> compares the part vectors, which is
/// the lexicographic order on partitions with missing parts read as zero.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  /// 1-based part access; parts past the end are zero.
  int part(int i) const;
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

  /// "(3,1)", "()" for the empty partition.
  std::string str() const;

private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// a dominates b: partial sums of a are >= those of b.  Only defined for
/// partitions of the same number; otherwise invalid_argument.
bool dominates(const Partition& a, const Partition& b);
bool strictly_dominates(const Partition& a, const Partition& b);

/// All partitions of n >= 0, sorted descending lexicographic.
std::vector<Partition> partitions_of(int n);

}  // namespace w2b
