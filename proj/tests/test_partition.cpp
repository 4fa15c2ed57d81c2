#include <doctest.h>

#include "error.hpp"
#include "partition.hpp"

using namespace w2b;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
}  // namespace

TEST_CASE("conjugate") {
  CHECK(P({3, 1}).conjugate() == P({2, 1, 1}));
  CHECK(P({4}).conjugate() == P({1, 1, 1, 1}));
  CHECK(P({2, 2}).conjugate() == P({2, 2}));
  CHECK(Partition().conjugate() == Partition());
  for (const auto& la : partitions_of(7)) CHECK(la.conjugate().conjugate() == la);
}

TEST_CASE("parts and access") {
  Partition la({3, 1});
  CHECK(la.size() == 4);
  CHECK(la.length() == 2);
  CHECK(la.part(1) == 3);
  CHECK(la.part(2) == 1);
  CHECK(la.part(3) == 0);
  CHECK(la.str() == "(3,1)");
  CHECK(Partition().str() == "()");
  CHECK(Partition().empty());
}

TEST_CASE("dominance within n = 4 is the full chain") {
  auto ps = partitions_of(4);
  REQUIRE(ps.size() == 5);
  for (size_t i = 0; i < ps.size(); ++i)
    for (size_t j = 0; j < ps.size(); ++j) {
      CHECK(dominates(ps[i], ps[j]) == (i <= j));
      CHECK(strictly_dominates(ps[i], ps[j]) == (i < j));
    }
}

TEST_CASE("dominance is partial for n = 6") {
  // (3,3) and (4,1,1) are incomparable.
  CHECK_FALSE(dominates(P({3, 3}), P({4, 1, 1})));
  CHECK_FALSE(dominates(P({4, 1, 1}), P({3, 3})));
  CHECK(dominates(P({4, 2}), P({3, 3})));
  CHECK(dominates(P({4, 2}), P({4, 1, 1})));
}

TEST_CASE("dominance rejects different sizes") {
  CHECK_THROWS_AS(dominates(P({3}), P({3, 1})), error);
  try {
    dominates(P({3}), P({3, 1}));
  } catch (const error& e) {
    CHECK(e.code() == errc::invalid_argument);
  }
}

TEST_CASE("partitions_of is descending lexicographic") {
  auto ps = partitions_of(4);
  CHECK(ps == std::vector<Partition>{P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}),
                                     P({1, 1, 1, 1})});
  CHECK(partitions_of(0) == std::vector<Partition>{Partition()});
  CHECK(partitions_of(10).size() == 42);
  auto p8 = partitions_of(8);
  for (size_t i = 1; i < p8.size(); ++i) CHECK(p8[i - 1] > p8[i]);
}

TEST_CASE("lexicographic comparison") {
  CHECK(P({3, 1}) > P({2, 2}));
  CHECK(P({2, 2}) > P({2, 1, 1}));
  CHECK(P({1, 1}) < P({2}));
}
