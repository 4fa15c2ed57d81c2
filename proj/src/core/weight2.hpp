#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abacus.hpp"
#include "block.hpp"
#include "partition.hpp"

namespace w2b {

enum class CaseTag { same_runner_stack, double_step, two_runners };
enum class Colour { black, white };

/// Runner label of a weight-2 partition.  partial is the absolute difference
/// of the leg lengths of the two hooks removed to reach the core; eps is 1
/// exactly when partial != a - b.  colour is set only when partial == 0.
struct Weight2Label {
  int a = 0;
  int b = 0;
  CaseTag tag = CaseTag::same_runner_stack;
  int partial = 0;
  int eps = 0;
  std::optional<Colour> colour;

  bool operator==(const Weight2Label&) const = default;
  std::string str() const;
};

/// Case analysis of the displaced beads of a weight-2 display.  The result
/// does not depend on the frame as long as the display holds the whole
/// partition; classify uses the block's default frame.
Weight2Label classify(const Partition& la, const BlockId& b);
Weight2Label classify_at(const Partition& la, const BlockId& b, int frame);

/// Valid labels for a given e: (a,b) with 0 <= b < a < e, or b == a, or
/// b == a + 1 (0 <= a < e).
bool is_valid_label(int e, int a, int b);
/// Labels carried by the e-singular members of a weight-2 block:
/// (0,0), (0,1) and (j,0) for 1 <= j < e.
bool is_singular_label(int e, int a, int b);

/// Label of the Mullineux image of a regular label: (a,a+1) -> (e-a,e-a+1)
/// for 1 <= a < e, and (a,b) with 1 <= b <= a < e -> (e-b,e-a).
std::pair<int, int> mullineux_label_map(int e, int a, int b);

/// The partitions of a weight-2 block grouped by partial (and by colour when
/// partial is 0).  Within a class the dominance order is total; members are
/// stored descending, so the last entry is the least element.
struct DeltaClasses {
  // keys: "d0b", "d0w", "d1", ..., ordered.
  std::vector<std::pair<std::string, std::vector<int>>> classes;
  // per partition: index into `classes` and position inside the class.
  std::vector<std::pair<int, int>> position;
};

}  // namespace w2b
