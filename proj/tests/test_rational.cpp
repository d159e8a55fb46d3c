#include <doctest.h>

#include "symspace/rational.hpp"

using namespace symspace;

TEST_CASE("rational parsing and formatting") {
  CHECK(rat_to_string(rat_from_string("6/8")) == "3/4");
  CHECK(rat_to_string(rat_from_string("-6/8")) == "-3/4");
  CHECK(rat_to_string(rat_from_string("42")) == "42");
  CHECK(rat_from_string("0/5") == 0);
  CHECK_THROWS_AS(rat_from_string("1/0"), Error);
  CHECK_THROWS_AS(rat_from_string("1.5"), Error);
  CHECK_THROWS_AS(rat_from_string(""), Error);
  CHECK_THROWS_AS(rat_from_string("2/"), Error);
  CHECK(ext_to_string(ExtRat::infinity()) == "inf");
  CHECK(ext_from_string("inf").is_infinite());
  CHECK(ext_from_string("7/2") == ExtRat(Rat(7, 2)));
}

TEST_CASE("doubles convert exactly") {
  CHECK(rat_from_double(0.5) == Rat(1, 2));
  CHECK(rat_from_double(-3.25) == Rat(-13, 4));
  CHECK(rat_from_double(1.0 / 3.0) != Rat(1, 3));  // dyadic, not a third
  CHECK(to_double(rat_from_double(0.1)) == 0.1);
}

TEST_CASE("integer roots") {
  CHECK(*iroot_exact(Int(27), 3) == 3);
  CHECK(*iroot_exact(Int(-27), 3) == -3);
  CHECK(!iroot_exact(Int(2), 2).has_value());
  CHECK(!iroot_exact(Int(-4), 2).has_value());
  CHECK(*rroot_exact(Rat(4, 9), 2) == Rat(2, 3));
  CHECK(!rroot_exact(Rat(1, 2), 2).has_value());
  CHECK(*rroot_exact(Rat(0), 5) == 0);
}

TEST_CASE("three-term radical comparisons") {
  // sign of B^(1/b) + C^(1/b) - A^(1/b)
  SUBCASE("square roots") {
    CHECK(root_sum_gap_sign(Rat(4), Rat(1), Rat(1), 2) == 0);   // 1+1 = 2 = sqrt(4)
    CHECK(root_sum_gap_sign(Rat(9), Rat(1), Rat(1), 2) == -1);  // 2 < 3
    CHECK(root_sum_gap_sign(Rat(2), Rat(1), Rat(1), 2) == 1);   // 2 > sqrt(2)
    CHECK(root_sum_gap_sign(Rat(2), Rat(2), Rat(0), 2) == 0);
    CHECK(root_sum_gap_sign(Rat(8), Rat(2), Rat(2), 2) == 0);  // 2*sqrt(2) = sqrt(8)
  }
  SUBCASE("cube roots") {
    CHECK(root_sum_gap_sign(Rat(8), Rat(1), Rat(1), 3) == 0);    // 1+1 = cbrt(8)
    CHECK(root_sum_gap_sign(Rat(27), Rat(1), Rat(1), 3) == -1);  // 2 < 3
    CHECK(root_sum_gap_sign(Rat(2), Rat(1), Rat(1), 3) == 1);
    CHECK(root_sum_gap_sign(Rat(0), Rat(0), Rat(0), 3) == 0);
    // cbrt(2) + cbrt(16) = 3*cbrt(2) = cbrt(54)
    CHECK(root_sum_gap_sign(Rat(54), Rat(2), Rat(16), 3) == 0);
    CHECK(root_sum_gap_sign(Rat(55), Rat(2), Rat(16), 3) == -1);
    CHECK(root_sum_gap_sign(Rat(53), Rat(2), Rat(16), 3) == 1);
  }
  SUBCASE("linear") {
    CHECK(root_sum_gap_sign(Rat(5), Rat(2), Rat(3), 1) == 0);
    CHECK(root_sum_gap_sign(Rat(6), Rat(2), Rat(3), 1) == -1);
  }
}
