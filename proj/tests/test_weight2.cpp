#include <doctest.h>

#include <set>
#include <utility>
#include <vector>

#include "block.hpp"
#include "error.hpp"
#include "partition.hpp"
#include "weight2.hpp"

using w2b::BlockId;
using w2b::CaseTag;
using w2b::Colour;
using w2b::Partition;
using w2b::Weight2Label;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_CASE("labels of the principal block at e = 2") {
  BlockId b{2, P({}), 2};
  Weight2Label l4 = w2b::classify(P({4}), b);
  CHECK(l4.a == 1);
  CHECK(l4.b == 2);
  CHECK(l4.tag == CaseTag::double_step);
  CHECK(l4.partial == 0);
  CHECK(l4.eps == 1);
  CHECK(l4.colour == Colour::black);

  Weight2Label l31 = w2b::classify(P({3, 1}), b);
  CHECK(l31.a == 1);
  CHECK(l31.b == 1);
  CHECK(l31.tag == CaseTag::double_step);
  CHECK(l31.partial == 1);
  CHECK(l31.eps == 1);
  CHECK_FALSE(l31.colour.has_value());

  Weight2Label l22 = w2b::classify(P({2, 2}), b);
  CHECK(l22.a == 0);
  CHECK(l22.b == 1);
  CHECK(l22.tag == CaseTag::two_runners);
  CHECK(l22.partial == 0);
  CHECK(l22.eps == 1);
  CHECK(l22.colour == Colour::white);

  Weight2Label l211 = w2b::classify(P({2, 1, 1}), b);
  CHECK(l211.a == 1);
  CHECK(l211.b == 0);
  CHECK(l211.tag == CaseTag::same_runner_stack);
  CHECK(l211.partial == 1);
  CHECK(l211.eps == 0);

  Weight2Label l1111 = w2b::classify(P({1, 1, 1, 1}), b);
  CHECK(l1111.a == 0);
  CHECK(l1111.b == 0);
  CHECK(l1111.tag == CaseTag::same_runner_stack);
  CHECK(l1111.partial == 0);
  CHECK(l1111.eps == 0);
  CHECK(l1111.colour == Colour::black);
}

TEST_CASE("labels of the core-(1) block at e = 2") {
  BlockId b{2, P({1}), 2};
  CHECK(w2b::classify(P({5}), b).partial == 0);
  CHECK(w2b::classify(P({5}), b).colour == Colour::black);
  Weight2Label l32 = w2b::classify(P({3, 2}), b);
  CHECK(l32.a == 1);
  CHECK(l32.b == 1);
  CHECK(l32.partial == 0);
  CHECK(l32.eps == 0);
  CHECK(l32.colour == Colour::white);
  CHECK(w2b::classify(P({3, 1, 1}), b).partial == 1);
  Weight2Label l221 = w2b::classify(P({2, 2, 1}), b);
  CHECK(l221.a == 0);
  CHECK(l221.b == 1);
  CHECK(l221.eps == 1);
  CHECK(l221.colour == Colour::white);
  CHECK(w2b::classify(P({1, 1, 1, 1, 1}), b).colour == Colour::black);
}

TEST_CASE("classification is independent of the frame") {
  for (int e = 2; e <= 4; ++e)
    for (int m = 0; m <= 3; ++m)
      for (const auto& core : w2b::partitions_of(m)) {
        if (!w2b::is_e_core(core, e)) continue;
        BlockId id{e, core, 2};
        int base = w2b::default_frame(id);
        for (const auto& la : w2b::enumerate_block(id)) {
          Weight2Label ref = w2b::classify(la, id);
          CHECK(w2b::classify_at(la, id, base + e) == ref);
          CHECK(w2b::classify_at(la, id, base + 3 * e) == ref);
          CHECK(ref.eps == (ref.partial != ref.a - ref.b ? 1 : 0));
          CHECK(w2b::is_valid_label(e, ref.a, ref.b));
          CHECK((ref.partial == 0) == ref.colour.has_value());
        }
      }
}

TEST_CASE("classify rejects partitions outside the block") {
  BlockId b{2, P({}), 2};
  CHECK_THROWS_AS(w2b::classify(P({3, 2}), b), w2b::error);
  CHECK_THROWS_AS(w2b::classify(P({2, 1}), b), w2b::error);
}

TEST_CASE("valid labels") {
  for (int e = 2; e <= 6; ++e) {
    int count = 0;
    for (int a = 0; a < e + 2; ++a)
      for (int b = 0; b < e + 2; ++b)
        if (w2b::is_valid_label(e, a, b)) ++count;
    CHECK(count == e * (e + 3) / 2);
  }
  CHECK(w2b::is_valid_label(3, 2, 0));
  CHECK(w2b::is_valid_label(3, 2, 2));
  CHECK(w2b::is_valid_label(3, 2, 3));
  CHECK_FALSE(w2b::is_valid_label(3, 0, 2));   // b > a + 1
  CHECK_FALSE(w2b::is_valid_label(3, 3, 1));   // a >= e needs b == a or a + 1
  CHECK_FALSE(w2b::is_valid_label(3, -1, 0));
  CHECK_FALSE(w2b::is_valid_label(3, 3, 4));   // a must stay below e
}

TEST_CASE("singular labels") {
  CHECK(w2b::is_singular_label(3, 0, 0));
  CHECK(w2b::is_singular_label(3, 0, 1));
  CHECK(w2b::is_singular_label(3, 1, 0));
  CHECK(w2b::is_singular_label(3, 2, 0));
  CHECK_FALSE(w2b::is_singular_label(3, 1, 1));
  CHECK_FALSE(w2b::is_singular_label(3, 2, 1));
  CHECK_FALSE(w2b::is_singular_label(3, 2, 3));
  // One singular label per class: (0,0), (0,1) and (j,0) for 1 <= j < e.
  for (int e = 2; e <= 6; ++e) {
    int count = 0;
    for (int a = 0; a < e + 2; ++a)
      for (int b = 0; b < e + 2; ++b)
        if (w2b::is_valid_label(e, a, b) && w2b::is_singular_label(e, a, b)) ++count;
    CHECK(count == e + 1);
  }
}

TEST_CASE("label reflection map") {
  CHECK(w2b::mullineux_label_map(2, 1, 2) == std::pair(1, 2));
  CHECK(w2b::mullineux_label_map(2, 1, 1) == std::pair(1, 1));
  CHECK(w2b::mullineux_label_map(3, 1, 2) == std::pair(2, 3));
  CHECK(w2b::mullineux_label_map(3, 2, 1) == std::pair(2, 1));
  CHECK(w2b::mullineux_label_map(3, 2, 2) == std::pair(1, 1));
  CHECK(w2b::mullineux_label_map(3, 1, 1) == std::pair(2, 2));
  for (int e = 2; e <= 6; ++e)
    for (int a = 0; a < e + 2; ++a)
      for (int b = 0; b < e + 2; ++b) {
        if (!w2b::is_valid_label(e, a, b)) continue;
        if (w2b::is_singular_label(e, a, b)) {
          CHECK_THROWS_AS(w2b::mullineux_label_map(e, a, b), w2b::error);
          continue;
        }
        auto [ma, mb] = w2b::mullineux_label_map(e, a, b);
        CHECK(w2b::is_valid_label(e, ma, mb));
        CHECK_FALSE(w2b::is_singular_label(e, ma, mb));
        CHECK(w2b::mullineux_label_map(e, ma, mb) == std::pair(a, b));
      }
  CHECK_THROWS_AS(w2b::mullineux_label_map(3, 0, 2), w2b::error);  // not even valid
}

TEST_CASE("label rendering") {
  BlockId b{2, P({}), 2};
  CHECK(w2b::classify(P({4}), b).str() == "[1,2]");
  CHECK(w2b::classify(P({2, 1, 1}), b).str() == "[1,0]");
}
