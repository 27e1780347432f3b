#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "cycloseq/cyclotomy.hpp"

using namespace cycloseq;

TEST_CASE("order-6 classes of GF(31)", "[cyclotomy]") {
  const auto sys = build_cyclotomic_system(31, 6);
  CHECK(sys.generator() == 3);
  CHECK(sys.class_size() == 5);
  CHECK(sys.cyclotomic_class(0) == std::vector<u64>{1, 2, 4, 8, 16});
  CHECK(sys.cyclotomic_class(1) == std::vector<u64>{3, 6, 12, 17, 24});
  CHECK(sys.cyclotomic_class(2) == std::vector<u64>{5, 9, 10, 18, 20});
  CHECK(sys.cyclotomic_class(3) == std::vector<u64>{15, 23, 27, 29, 30});
  CHECK(sys.cyclotomic_class(4) == std::vector<u64>{7, 14, 19, 25, 28});
  CHECK(sys.cyclotomic_class(5) == std::vector<u64>{11, 13, 21, 22, 26});
}

TEST_CASE("order-2 classes are the quadratic residues and non-residues", "[cyclotomy]") {
  const auto sys = build_cyclotomic_system(19, 2);
  CHECK(sys.cyclotomic_class(0) == std::vector<u64>{1, 4, 5, 6, 7, 9, 11, 16, 17});
  CHECK(sys.cyclotomic_class(1) == std::vector<u64>{2, 3, 8, 10, 12, 13, 14, 15, 18});
}

TEST_CASE("f = 1 gives singleton classes", "[cyclotomy]") {
  const auto sys = build_cyclotomic_system(7, 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(sys.cyclotomic_class(i).size() == 1);
  CHECK(sys.cyclotomic_class(0) == std::vector<u64>{1});
}

TEST_CASE("system construction errors", "[cyclotomy]") {
  CHECK_THROWS_AS(build_cyclotomic_system(8, 2), NotPrimeError);
  CHECK_THROWS_AS(build_cyclotomic_system(19, 4), OrderDoesNotDivideError);
  CHECK_THROWS_AS(build_cyclotomic_system(31, 6, 2), NotPrimitiveRootError);  // ord(2) = 5
  CHECK_NOTHROW(build_cyclotomic_system(31, 6, 3));
}

TEST_CASE("class_of", "[cyclotomy]") {
  const auto sys = build_cyclotomic_system(31, 6);
  CHECK(sys.class_of(16) == 0);
  CHECK(sys.class_of(1) == 0);  // 1 always lies in the base class
  CHECK(sys.class_of(26) == 5);
  CHECK_THROWS_AS(sys.class_of(0), ZeroResidueError);
  CHECK_THROWS_AS(sys.class_of(62), ZeroResidueError);  // 0 mod 31
}

TEST_CASE("brute-force cyclotomic numbers", "[cyclotomy]") {
  const auto s19 = build_cyclotomic_system(19, 2);
  CHECK(cyclotomic_number_bruteforce(s19, 0, 1) == 5);  // (f+1)/2 with f = 9
  const auto s13 = build_cyclotomic_system(13, 2);
  CHECK(cyclotomic_number_bruteforce(s13, 0, 0) == 2);  // (f-2)/2 with f = 6
  const auto s31 = build_cyclotomic_system(31, 6);
  CHECK(cyclotomic_number_bruteforce(s31, 0, 0) == 1);  // (q-11-8x)/36 at x = -2
}

TEST_CASE("order-2 closed forms", "[cyclotomy]") {
  CHECK(cyclotomic_number_closed_form(19, 2, 0, 1) == 5);
  CHECK(cyclotomic_number_closed_form(13, 2, 0, 0) == 2);
  CHECK_THROWS_AS(cyclotomic_number_closed_form(19, 4, 0, 0), UnsupportedOrderError);
  CHECK_THROWS_AS(cyclotomic_number_closed_form(31, 6, 0, 0), MissingHallParameterError);
}

TEST_CASE("order-6 closed form at q = 31", "[cyclotomy]") {
  const HallParameter x{-2};
  CHECK(cyclotomic_number_closed_form(31, 6, 0, 3, x) == 0);  // (q+1+16x)/36
  CHECK(cyclotomic_number_closed_form(31, 6, 0, 0, x) == 1);
  CHECK(cyclotomic_number_closed_form(31, 6, 0, 1, x) == 2);
  CHECK_THROWS_AS(cyclotomic_number_closed_form(31, 6, 0, 0, HallParameter{5}),
                  NotHallPrimeError);  // 5^2 + 27 != 31
}

TEST_CASE("derive_hall_x", "[cyclotomy]") {
  CHECK(derive_hall_x(build_cyclotomic_system(31, 6)).x == -2);
  const auto x43 = derive_hall_x(build_cyclotomic_system(43, 6));
  CHECK(x43.x * x43.x == 16);
  CHECK(x43.x == 4);  // brute-force (0,0) fixes the sign
  CHECK_THROWS_AS(derive_hall_x(build_cyclotomic_system(37, 6)), NotHallPrimeError);
  CHECK_THROWS_AS(derive_hall_x(build_cyclotomic_system(13, 6)), NotHallPrimeError);
  CHECK_THROWS_AS(derive_hall_x(build_cyclotomic_system(19, 2)), UnsupportedOrderError);
}

TEST_CASE("a relabelled system is rejected by the table validation", "[cyclotomy]") {
  // 11 is a primitive root of 31 whose class labelling swaps classes 1<->5
  // and 2<->4 relative to alpha = 3; the order-6 table cannot hold for both.
  const auto swapped = build_cyclotomic_system(31, 6, 11);
  CHECK_THROWS_AS(derive_hall_x(swapped), TableMismatchError);
}

TEST_CASE("closed forms equal brute force for order 2, q <= 500", "[cyclotomy]") {
  for (u64 q = 3; q <= 500; ++q) {
    if (!is_prime(q)) continue;
    const auto sys = build_cyclotomic_system(q, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        CHECK(cyclotomic_number_bruteforce(sys, i, j) ==
              cyclotomic_number_closed_form(q, 2, i, j));
  }
}

TEST_CASE("class sizes and totals", "[cyclotomy]") {
  // Each nonzero z with z + 1 != 0 lies in exactly one (C_i + 1) ∩ C_j,
  // so the 36 (or 4) cyclotomic numbers sum to q - 2.
  for (auto [q, d] : {std::pair<u64, u64>{19, 2}, {31, 6}, {43, 6}, {29, 2}}) {
    const auto sys = build_cyclotomic_system(q, d);
    u64 total = 0;
    for (std::size_t i = 0; i < d; ++i) {
      CHECK(sys.cyclotomic_class(i).size() == sys.class_size());
      for (std::size_t j = 0; j < d; ++j) total += cyclotomic_number_bruteforce(sys, i, j);
    }
    CHECK(total == q - 2);
  }
}

TEST_CASE("classes multiply coherently", "[cyclotomy]") {
  std::mt19937_64 rng(23);
  for (auto [q, d] : {std::pair<u64, u64>{31, 6}, {43, 6}, {103, 2}}) {
    const auto sys = build_cyclotomic_system(q, d);
    for (int trial = 0; trial < 200; ++trial) {
      const u64 z = rng() % (q - 1) + 1;
      const u64 y = rng() % (q - 1) + 1;
      const auto expected = (sys.class_of(z) + sys.class_of(y)) % d;
      CHECK(sys.class_of(mul_mod(z, y, q)) == expected);
    }
  }
}
