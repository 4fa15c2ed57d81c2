#include <doctest.h>

#include <string>
#include <utility>
#include <vector>

#include "alvis.hpp"
#include "block.hpp"
#include "decomp.hpp"
#include "pairs.hpp"
#include "partition.hpp"
#include "serialize.hpp"
#include "vpoly.hpp"
#include "weight2.hpp"

using w2b::BlockId;
using w2b::Partition;
using w2b::VPoly;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_CASE("partition tokens") {
  CHECK(w2b::partition_token(P({3, 1})) == "3,1");
  CHECK(w2b::partition_token(P({})) == "");
  CHECK(w2b::bracket_str(P({3, 1})) == "[3,1]");
  CHECK(w2b::bracket_str(P({})) == "[]");
  CHECK(w2b::json_partition(P({3, 1})).dump() == "[3,1]");
  CHECK(w2b::json_partition(P({})).dump() == "[]");
}

TEST_CASE("block ids and displays as json") {
  CHECK(w2b::json_block_id(BlockId{2, P({1}), 2}).dump() ==
        R"({"e":2,"core":[1],"weight":2})");
  CHECK(w2b::json_display(w2b::display(P({2, 2}), 2, 4)).dump() ==
        R"({"e":2,"beads":[0,1,4,5]})");
}

TEST_CASE("labels as json") {
  BlockId b{2, P({}), 2};
  CHECK(w2b::json_label(w2b::classify(P({4}), b)).dump() ==
        R"({"a":1,"b":2,"partial":0,"eps":1,"colour":"black"})");
  CHECK(w2b::json_label(w2b::classify(P({2, 2}), b)).dump() ==
        R"({"a":0,"b":1,"partial":0,"eps":1,"colour":"white"})");
  CHECK(w2b::json_label(w2b::classify(P({3, 1}), b)).dump() ==
        R"({"a":1,"b":1,"partial":1,"eps":1})");
}

TEST_CASE("polynomials as ascending coefficient arrays") {
  CHECK(w2b::json_vpoly(VPoly(std::vector<long long>{1, 0, 1})).dump() == "[1,0,1]");
  CHECK(w2b::json_vpoly(VPoly::v()).dump() == "[0,1]");
  CHECK(w2b::json_vpoly(VPoly{}).dump() == "[]");
}

TEST_CASE("classes of the principal block as json") {
  auto bd = w2b::analyze_block(BlockId{2, P({}), 2});
  CHECK(w2b::json_classes(*bd).dump() ==
        R"({"d0b":[[4],[1,1,1,1]],"d0w":[[2,2]],"d1":[[3,1],[2,1,1]]})");
}

TEST_CASE("integer matrices as json") {
  auto bd = w2b::analyze_block(BlockId{2, P({}), 2});
  std::string labels = R"([[4],[3,1],[2,2],[2,1,1],[1,1,1,1]])";
  std::string want = std::string(R"({"rows":)") + labels + R"(,"cols":)" + labels +
                     R"(,"kind":"int","entries":)" +
                     R"([[1,0,0,0,0],[1,1,0,0,0],[0,1,1,0,0],[1,1,1,1,0],[1,0,0,1,1]]})";
  CHECK(w2b::json_matrix(bd->d).dump() == want);
}

TEST_CASE("polynomial matrices as json") {
  auto bd = w2b::analyze_block(BlockId{2, P({}), 2});
  auto j = w2b::json_matrix(bd->dv);
  CHECK(j["kind"] == "vpoly");
  CHECK(j["entries"][1].dump() == "[[0,1],[1],[],[],[]]");
  CHECK(j["entries"][4].dump() == "[[0,0,1],[],[],[0,1],[1]]");
}

TEST_CASE("duality matrices carry both block ids") {
  auto bd = w2b::analyze_block(BlockId{2, P({}), 2});
  auto cj = w2b::analyze_block(bd->id.conjugate());
  auto j = w2b::json_ac_matrix(w2b::ac_matrix(*bd, *cj), bd->id, cj->id);
  CHECK(j.begin().key() == "rows_block");
  CHECK(j["rows_block"].dump() == R"({"e":2,"core":[],"weight":2})");
  CHECK(j["cols_block"].dump() == R"({"e":2,"core":[],"weight":2})");
  CHECK(j["entries"][0].dump() == "[1,0,0,1,1]");
  CHECK(j["entries"][4].dump() == "[0,0,1,0,0]");
}

TEST_CASE("csv rendering of the decomposition matrix") {
  auto bd = w2b::analyze_block(BlockId{2, P({}), 2});
  std::string want =
      "\"\",\"4\",\"3,1\",\"2,2\",\"2,1,1\",\"1,1,1,1\"\n"
      "\"4\",1,0,0,0,0\n"
      "\"3,1\",1,1,0,0,0\n"
      "\"2,2\",0,1,1,0,0\n"
      "\"2,1,1\",1,1,1,1,0\n"
      "\"1,1,1,1\",1,0,0,1,1\n";
  CHECK(w2b::csv_matrix(bd->d) == want);
  std::string row211 = "\"2,1,1\",v,v^2,v,1,0\n";
  CHECK(w2b::csv_matrix(bd->dv).find(row211) != std::string::npos);
}

TEST_CASE("text rendering aligns columns") {
  w2b::LabeledMatrix<long long> m({P({2}), P({1, 1})}, {P({2}), P({1, 1})});
  m.at(0, 0) = 1;
  m.at(0, 1) = 0;
  m.at(1, 0) = -1;
  m.at(1, 1) = 12;
  std::string want =
      "       [2]  [1,1]\n"
      "[2]      1      0\n"
      "[1,1]   -1     12\n";
  CHECK(w2b::text_matrix(m) == want);
}

TEST_CASE("dot rendering of the Ext quiver") {
  auto bd = w2b::analyze_block(BlockId{2, P({}), 2});
  std::string want =
      "graph ext_quiver {\n"
      "  \"4\";\n"
      "  \"3,1\";\n"
      "  \"2,2\";\n"
      "  \"2,1,1\";\n"
      "  \"1,1,1,1\";\n"
      "  \"4\" -- \"3,1\";\n"
      "  \"4\" -- \"2,1,1\";\n"
      "  \"3,1\" -- \"2,2\";\n"
      "  \"2,2\" -- \"2,1,1\";\n"
      "  \"2,1,1\" -- \"1,1,1,1\";\n"
      "}\n";
  CHECK(w2b::dot_quiver(bd->partitions, w2b::ext_quiver(*bd)) == want);
}

TEST_CASE("quiver and layers as json") {
  auto bd = w2b::analyze_block(BlockId{2, P({}), 2});
  auto q = w2b::json_quiver(bd->partitions, w2b::ext_quiver(*bd));
  CHECK(q["edges"][0].dump() == "[[4],[3,1]]");
  CHECK(q["vertices"].size() == 5);
  auto l = w2b::json_layers(P({2, 1, 1}), w2b::weyl_layers(*bd, P({2, 1, 1})));
  CHECK(l.dump() == R"({"partition":[2,1,1],"layers":[[[2,1,1]],[[4],[2,2]],[[3,1]]]})");
}

TEST_CASE("pairs as json") {
  std::vector<w2b::PairInfo> pairs = w2b::find_pairs(BlockId{2, P({1}), 2});
  const w2b::PairInfo* pr = nullptr;
  for (const auto& p : pairs)
    if (p.c.core == P({}) && p.k == 1) pr = &p;
  REQUIRE(pr != nullptr);
  auto j = w2b::json_pair(*pr);
  CHECK(j["b"].dump() == R"({"e":2,"core":[1],"weight":2})");
  CHECK(j["c"].dump() == R"({"e":2,"core":[],"weight":2})");
  CHECK(j["i"] == 1);
  CHECK(j["k"] == 1);
  CHECK(j["exceptional"]["b"].dump() == "[[3,2],[3,1,1],[2,2,1]]");
  CHECK(j["exceptional"]["c"].dump() == "[[3,1],[2,2],[2,1,1]]");
}
