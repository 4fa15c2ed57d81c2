#include "weight2.hpp"

#include "error.hpp"

namespace w2b {

std::string Weight2Label::str() const {
  return "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

bool is_valid_label(int e, int a, int b) {
  return a >= 0 && a < e && b >= 0 && (b <= a || b == a + 1);
}

bool is_singular_label(int e, int a, int b) {
  (void)e;
  return b == 0 || (a == 0 && b == 1);
}

std::pair<int, int> mullineux_label_map(int e, int a, int b) {
  require(is_valid_label(e, a, b), errc::invalid_argument, "not a label");
  require(!is_singular_label(e, a, b), errc::invalid_argument,
          "Mullineux map needs an e-regular label");
  if (b == a + 1) return {e - a, e - a + 1};
  return {e - b, e - a};
}

namespace {
int vacant_between(const AbacusDisplay& d, int lo, int hi) {
  return (hi - lo - 1) - d.occupied_between(lo, hi);
}
}  // namespace

Weight2Label classify_at(const Partition& la, const BlockId& b, int frame) {
  require(b.weight == 2, errc::invalid_argument, "classification applies to weight-2 blocks");
  validate_block(b);
  auto [core, weight] = e_core_and_weight(la, b.e);
  require(core == b.core && weight == 2, errc::invalid_argument,
          la.str() + " is not in the block");
  require(frame >= la.length(), errc::invalid_argument, "frame too small for the partition");

  const int e = b.e;
  AbacusDisplay d = display(la, e, frame);

  std::vector<int> loose;
  for (int p : d.beads)
    if (p - e >= 0 && !d.occupied(p - e)) loose.push_back(p);

  Weight2Label lab;
  int x = 0, y = 0;
  if (loose.size() == 2) {
    x = loose[1];
    y = loose[0];
    require(x % e != y % e, errc::internal, "two loose beads must sit on distinct runners");
    lab.tag = CaseTag::two_runners;
    lab.a = vacant_between(d, x - e, x);
    lab.b = vacant_between(d, y - e, y);
    bool interleaved = y > x - e;
    lab.partial = interleaved ? lab.a - lab.b + 1 : lab.a - lab.b;
  } else if (loose.size() == 1) {
    int p = loose[0];
    if (p - 2 * e >= 0 && !d.occupied(p - 2 * e)) {
      lab.tag = CaseTag::double_step;
      x = p;
      lab.a = vacant_between(d, x - e, x);
      lab.b = 1 + vacant_between(d, x - 2 * e, x - e);
      lab.partial = lab.a - lab.b + 1;
    } else {
      lab.tag = CaseTag::same_runner_stack;
      x = p + e;
      require(d.occupied(x), errc::internal, "stacked case needs a bead above the loose one");
      lab.a = vacant_between(d, x - e, x);
      lab.b = vacant_between(d, x - 2 * e, x - e);
      lab.partial = lab.a - lab.b;
    }
  } else {
    fail(errc::internal, "weight-2 display must have one or two loose beads");
  }

  require(lab.partial >= 0 && lab.partial < e, errc::internal, "leg difference out of range");
  require(is_valid_label(e, lab.a, lab.b), errc::internal, "invalid runner label computed");
  lab.eps = lab.partial != lab.a - lab.b ? 1 : 0;

  if (lab.partial == 0) {
    bool black;
    if (lab.tag == CaseTag::two_runners) {
      // Two single-step hooks: larger leg even.
      int l1 = d.occupied_between(x - e, x);
      int l2 = d.occupied_between(y - e, y);
      black = std::max(l1, l2) % 2 == 0;
    } else {
      // One hook of twice the length: its leg is 0 or 3 mod 4.
      int l = d.occupied_between(x - 2 * e, x);
      black = l % 4 == 0 || l % 4 == 3;
    }
    lab.colour = black ? Colour::black : Colour::white;
  }
  return lab;
}

Weight2Label classify(const Partition& la, const BlockId& b) {
  return classify_at(la, b, default_frame(b));
}

}  // namespace w2b
