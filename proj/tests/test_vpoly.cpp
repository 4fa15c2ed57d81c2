#include <doctest.h>

#include "error.hpp"
#include "vpoly.hpp"

using namespace w2b;

TEST_CASE("construction and normal form") {
  CHECK(VPoly().is_zero());
  CHECK(VPoly(0).is_zero());
  CHECK(VPoly(std::vector<long long>{0, 0}).is_zero());
  CHECK(VPoly(std::vector<long long>{1, 0, 0}) == VPoly(1));
  CHECK(VPoly::v().degree() == 1);
  CHECK(VPoly::v(2).coeff(2) == 1);
  CHECK(VPoly::v(2).coeff(1) == 0);
}

TEST_CASE("arithmetic") {
  VPoly a(std::vector<long long>{1, 2});   // 1 + 2v
  VPoly b(std::vector<long long>{0, 1, 1});  // v + v^2
  CHECK(a + b == VPoly(std::vector<long long>{1, 3, 1}));
  CHECK(a - a == VPoly());
  CHECK(a * b == VPoly(std::vector<long long>{0, 1, 3, 2}));
  CHECK(-b == VPoly(std::vector<long long>{0, -1, -1}));
  CHECK((VPoly::v() * VPoly::v()) == VPoly::v(2));
}

TEST_CASE("evaluation and derivative") {
  VPoly p(std::vector<long long>{1, 2, 3});  // 1 + 2v + 3v^2
  CHECK(p.eval(1) == 6);
  CHECK(p.eval(-1) == 2);
  CHECK(p.eval(2) == 17);
  CHECK(p.derivative_at_one() == 8);
  CHECK(VPoly(5).derivative_at_one() == 0);
}

TEST_CASE("variable substitutions") {
  VPoly p(std::vector<long long>{1, 2, 3});
  CHECK(p.negate_variable() == VPoly(std::vector<long long>{1, -2, 3}));
  CHECK(p.negate_variable().negate_variable() == p);
  // v^2 * p(1/v) reverses the coefficients up to degree 2.
  CHECK(p.reciprocal_shift(2) == VPoly(std::vector<long long>{3, 2, 1}));
  CHECK(VPoly::v().reciprocal_shift(2) == VPoly::v());
  CHECK(VPoly(1).reciprocal_shift(2) == VPoly::v(2));
  CHECK(VPoly::v(2).reciprocal_shift(2) == VPoly(1));
  CHECK_THROWS_AS(VPoly::v(3).reciprocal_shift(2), error);
}

TEST_CASE("printing") {
  CHECK(VPoly().str() == "0");
  CHECK(VPoly(1).str() == "1");
  CHECK(VPoly(-2).str() == "-2");
  CHECK(VPoly::v().str() == "v");
  CHECK(VPoly::v(2).str() == "v^2");
  CHECK(VPoly(std::vector<long long>{1, 1}).str() == "1+v");
  CHECK(VPoly(std::vector<long long>{0, 1, 1}).str() == "v+v^2");
  CHECK(VPoly(std::vector<long long>{0, -1}).str() == "-v");
  CHECK(VPoly(std::vector<long long>{0, 0, 2}).str() == "2v^2");
  CHECK(VPoly(std::vector<long long>{1, 0, -3}).str() == "1-3v^2");
}
