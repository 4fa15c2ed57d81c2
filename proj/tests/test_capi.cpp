#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "w2blocks/w2blocks.h"

namespace {

// Grabs the C string result and frees it.
std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  w2b_string_free(s);
  return out;
}

struct Handle {
  w2b_block* b = nullptr;
  ~Handle() { w2b_block_close(b); }
};

}  // namespace

TEST_CASE("status names") {
  CHECK(std::string(w2b_status_name(W2B_OK)) == "ok");
  CHECK(std::string(w2b_status_name(W2B_ERR_INVALID_ARGUMENT)) == "invalid_argument");
  CHECK(std::string(w2b_status_name(W2B_ERR_NOT_FOUND)) == "not_found");
  CHECK(std::string(w2b_status_name(W2B_ERR_UNSUPPORTED)) == "unsupported");
  CHECK(std::string(w2b_status_name(W2B_ERR_VERIFICATION)) == "verification_failure");
  CHECK(std::string(w2b_status_name(W2B_ERR_INTERNAL)) == "internal");
}

TEST_CASE("partition helpers") {
  char* s = nullptr;
  REQUIRE(w2b_partition_core("2,2", 2, nullptr, &s) == W2B_OK);
  CHECK(take(s) == "[] weight 2");
  REQUIRE(w2b_partition_core("3,2", 2, "text", &s) == W2B_OK);
  CHECK(take(s) == "[1] weight 2");
  REQUIRE(w2b_partition_core("2,2", 2, "json", &s) == W2B_OK);
  CHECK(take(s) == R"({"core":[],"weight":2})");
  CHECK(w2b_partition_core("2,2", 2, "dot", &s) == W2B_ERR_INVALID_ARGUMENT);

  int weight = -1;
  REQUIRE(w2b_partition_weight("4", 2, &weight) == W2B_OK);
  CHECK(weight == 2);
  REQUIRE(w2b_partition_weight("2,1", 2, &weight) == W2B_OK);
  CHECK(weight == 0);

  int sign = 0;
  REQUIRE(w2b_partition_sign("3,1", 2, &sign) == W2B_OK);
  CHECK(sign == -1);
  REQUIRE(w2b_partition_sign("2,2", 2, &sign) == W2B_OK);
  CHECK(sign == 1);

  REQUIRE(w2b_partition_conjugate("3,1", &s) == W2B_OK);
  CHECK(take(s) == "[2,1,1]");
  REQUIRE(w2b_partition_conjugate("", &s) == W2B_OK);
  CHECK(take(s) == "[]");
}

TEST_CASE("partition literals are validated") {
  char* s = nullptr;
  CHECK(w2b_partition_conjugate("3,,1", &s) == W2B_ERR_INVALID_ARGUMENT);
  CHECK(std::string(w2b_last_error()).find("empty part") != std::string::npos);
  CHECK(w2b_partition_conjugate("a", &s) == W2B_ERR_INVALID_ARGUMENT);
  CHECK(w2b_partition_conjugate("1,3", &s) == W2B_ERR_INVALID_ARGUMENT);
  CHECK(w2b_partition_conjugate("-2", &s) == W2B_ERR_INVALID_ARGUMENT);
  CHECK(w2b_partition_conjugate("0", &s) == W2B_ERR_INVALID_ARGUMENT);
  CHECK(w2b_partition_conjugate(nullptr, &s) == W2B_ERR_INVALID_ARGUMENT);
  CHECK(w2b_partition_conjugate("3, 1", &s) == W2B_OK);  // spaces are fine
  CHECK(take(s) == "[2,1,1]");
}

TEST_CASE("block handles") {
  Handle h;
  REQUIRE(w2b_block_open(2, "", &h.b) == W2B_OK);
  char* s = nullptr;
  REQUIRE(w2b_block_info(h.b, &s) == W2B_OK);
  CHECK(take(s) == R"({"e":2,"core":[],"weight":2})");

  w2b_block* bad = nullptr;
  CHECK(w2b_block_open(2, "2", &bad) == W2B_ERR_INVALID_ARGUMENT);  // not a 2-core
  CHECK(bad == nullptr);
  CHECK(w2b_block_open(1, "", &bad) == W2B_ERR_INVALID_ARGUMENT);

  Handle of;
  REQUIRE(w2b_block_open_of("4", 2, &of.b) == W2B_OK);
  REQUIRE(w2b_block_info(of.b, &s) == W2B_OK);
  CHECK(take(s) == R"({"e":2,"core":[],"weight":2})");
  CHECK(w2b_block_open_of("2,1", 2, &bad) == W2B_ERR_UNSUPPORTED);  // weight 0

  w2b_block_close(nullptr);  // must be a no-op
  CHECK(w2b_block_info(nullptr, &s) == W2B_ERR_INVALID_ARGUMENT);
}

TEST_CASE("block members and labels") {
  Handle h;
  REQUIRE(w2b_block_open(2, "", &h.b) == W2B_OK);
  char* s = nullptr;
  REQUIRE(w2b_block_partitions(h.b, "text", &s) == W2B_OK);
  CHECK(take(s) == "[4]\n[3,1]\n[2,2]\n[2,1,1]\n[1,1,1,1]\n");
  REQUIRE(w2b_block_partitions(h.b, "json", &s) == W2B_OK);
  CHECK(take(s) ==
        R"({"block":{"e":2,"core":[],"weight":2},)"
        R"("partitions":[[4],[3,1],[2,2],[2,1,1],[1,1,1,1]]})");

  REQUIRE(w2b_block_label(h.b, "3,1", &s) == W2B_OK);
  CHECK(take(s) == R"({"a":1,"b":1,"partial":1,"eps":1})");
  REQUIRE(w2b_block_label(h.b, "4", &s) == W2B_OK);
  CHECK(take(s) == R"({"a":1,"b":2,"partial":0,"eps":1,"colour":"black"})");
  CHECK(w2b_block_label(h.b, "5", &s) == W2B_ERR_NOT_FOUND);

  REQUIRE(w2b_block_mullineux(h.b, "3,1", &s) == W2B_OK);
  CHECK(take(s) == "[3,1]");
  REQUIRE(w2b_block_mullineux(h.b, "4", &s) == W2B_OK);
  CHECK(take(s) == "[4]");
  CHECK(w2b_block_mullineux(h.b, "2,2", &s) == W2B_ERR_INVALID_ARGUMENT);  // singular
}

TEST_CASE("block matrices") {
  Handle h;
  REQUIRE(w2b_block_open(2, "", &h.b) == W2B_OK);
  char* s = nullptr;

  REQUIRE(w2b_block_matrix(h.b, "d", -1, "csv", &s) == W2B_OK);
  std::string csv = take(s);
  CHECK(csv.find("\"1,1,1,1\",1,0,0,1,1\n") != std::string::npos);
  CHECK(csv.rfind("\"\",\"4\",", 0) == 0);

  REQUIRE(w2b_block_matrix(h.b, "d", 0, "csv", &s) == W2B_OK);
  CHECK(take(s) == csv);  // the reconstruction agrees with the closed formula
  REQUIRE(w2b_block_matrix(h.b, "d", 3, "csv", &s) == W2B_OK);
  CHECK(take(s) == csv);

  REQUIRE(w2b_block_matrix(h.b, "dv", -1, "json", &s) == W2B_OK);
  std::string dv = take(s);
  CHECK(dv.find(R"("kind":"vpoly")") != std::string::npos);
  CHECK(dv.find("[[0,1],[1],[],[],[]]") != std::string::npos);

  REQUIRE(w2b_block_matrix(h.b, "inverse", -1, "json", &s) == W2B_OK);
  CHECK(take(s).find("[-1,1,0,0,0]") != std::string::npos);
  REQUIRE(w2b_block_matrix(h.b, "cartan", -1, "json", &s) == W2B_OK);
  CHECK(take(s).find("[4,2,1,2,1]") != std::string::npos);

  REQUIRE(w2b_block_matrix(h.b, "ac", -1, "json", &s) == W2B_OK);
  std::string ac = take(s);
  CHECK(ac.rfind(R"({"rows_block":)", 0) == 0);
  CHECK(ac.find("[1,0,0,1,1]") != std::string::npos);
  CHECK(ac.find("[0,0,1,0,0]") != std::string::npos);

  CHECK(w2b_block_matrix(h.b, "d", 2, "csv", &s) == W2B_ERR_UNSUPPORTED);
  CHECK(w2b_block_matrix(h.b, "cartan", 3, "csv", &s) == W2B_ERR_INVALID_ARGUMENT);
  CHECK(w2b_block_matrix(h.b, "frobenius", -1, "csv", &s) == W2B_ERR_INVALID_ARGUMENT);
  CHECK(w2b_block_matrix(h.b, "d", -1, "dot", &s) == W2B_ERR_INVALID_ARGUMENT);
}

TEST_CASE("quiver, layers, classes") {
  Handle h;
  REQUIRE(w2b_block_open(2, "", &h.b) == W2B_OK);
  char* s = nullptr;

  REQUIRE(w2b_block_ext_quiver(h.b, "dot", &s) == W2B_OK);
  std::string dot = take(s);
  CHECK(dot.rfind("graph ext_quiver {\n", 0) == 0);
  CHECK(dot.find("\"4\" -- \"3,1\";") != std::string::npos);
  REQUIRE(w2b_block_ext_quiver(h.b, "text", &s) == W2B_OK);
  CHECK(take(s).find("[4] -- [3,1]\n") != std::string::npos);

  REQUIRE(w2b_block_layers(h.b, "2,1,1", "json", &s) == W2B_OK);
  CHECK(take(s) == R"({"partition":[2,1,1],"layers":[[[2,1,1]],[[4],[2,2]],[[3,1]]]})");
  REQUIRE(w2b_block_layers(h.b, "2,1,1", "text", &s) == W2B_OK);
  CHECK(take(s) == "0: [2,1,1]\n1: [4] [2,2]\n2: [3,1]\n");

  REQUIRE(w2b_block_richards(h.b, "text", &s) == W2B_OK);
  CHECK(take(s) == "d0b: [4] [1,1,1,1]\nd0w: [2,2]\nd1: [3,1] [2,1,1]\n");
  REQUIRE(w2b_block_richards(h.b, "json", &s) == W2B_OK);
  CHECK(take(s) == R"({"d0b":[[4],[1,1,1,1]],"d0w":[[2,2]],"d1":[[3,1],[2,1,1]]})");
}

TEST_CASE("pairs and chains") {
  Handle h;
  REQUIRE(w2b_block_open(2, "1", &h.b) == W2B_OK);
  char* s = nullptr;
  REQUIRE(w2b_block_pairs(h.b, "text", &s) == W2B_OK);
  std::string text = take(s);
  CHECK(text.find("[1] <- []") != std::string::npos);
  CHECK(text.find("exceptional: [3,2] [3,1,1] [2,2,1] <-> [3,1] [2,2] [2,1,1]") !=
        std::string::npos);
  REQUIRE(w2b_block_pairs(h.b, "json", &s) == W2B_OK);
  std::string js = take(s);
  CHECK(js.find(R"("exceptional":{"b":[[3,2],[3,1,1],[2,2,1]])") != std::string::npos);

  Handle p;
  REQUIRE(w2b_block_open(2, "", &p.b) == W2B_OK);
  REQUIRE(w2b_block_chain(p.b, "text", &s) == W2B_OK);
  CHECK(take(s).find("[1] <- []") != std::string::npos);
  REQUIRE(w2b_block_chain(h.b, "text", &s) == W2B_OK);
  CHECK(take(s).empty());  // already Rouquier
}

TEST_CASE("verification through the C interface") {
  char* report = nullptr;
  int ok = 0;
  const char* cfg = R"({"e_range":[2],"max_core_size":2,"checks":["block-structure"]})";
  REQUIRE(w2b_verify(cfg, "text", &report, &ok) == W2B_OK);
  CHECK(ok == 1);
  CHECK(take(report).find("result: PASS") != std::string::npos);

  REQUIRE(w2b_verify(cfg, "json", &report, &ok) == W2B_OK);
  CHECK(take(report).find(R"("all_passed":true)") != std::string::npos);

  CHECK(w2b_verify(R"({"p_values":[2]})", "text", &report, &ok) ==
        W2B_ERR_INVALID_ARGUMENT);
  CHECK(w2b_verify("{not json", "text", &report, &ok) == W2B_ERR_INVALID_ARGUMENT);
  CHECK(w2b_verify(R"({"max_core":2})", "text", &report, &ok) ==
        W2B_ERR_INVALID_ARGUMENT);  // unknown key
}

TEST_CASE("string free tolerates null") { w2b_string_free(nullptr); }
