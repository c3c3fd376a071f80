#include <doctest.h>

#include "regtri/generator.hpp"

using namespace regtri;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> xs) {
  return std::vector<BigInt>(xs.begin(), xs.end());
}

}  // namespace

TEST_CASE("layer count recurrence reproduces the published rows") {
  CHECK(layer_counts_recurrence(7, 6) == big({1, 7, 21, 56, 147, 385, 1008}));
  CHECK(layer_counts_recurrence(8, 6) == big({1, 8, 32, 120, 448, 1672, 6240}));
  CHECK(layer_counts_recurrence(6, 5) == big({1, 6, 12, 18, 24, 30}));
  CHECK(layer_counts_recurrence(9, 3) == big({1, 9, 45, 216}));
  CHECK_THROWS_AS(layer_counts_recurrence(5, 3), Error);
}

TEST_CASE("closed form agrees with the recurrence after rounding") {
  CHECK(layer_counts_closed_form(7, 4).back() == 147);
  CHECK(layer_counts_closed_form(7, 1).back() == 7);
  CHECK(layer_counts_closed_form(9, 3).back() == 216);
  for (int d = 7; d <= 20; ++d)
    CHECK(layer_counts_closed_form(d, 30) == layer_counts_recurrence(d, 30));

  try {
    layer_counts_closed_form(6, 3);
    FAIL("expected DegreeTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeTooSmall);
  }
}

TEST_CASE("closed form stays exact far beyond 64-bit range") {
  const auto n = layer_counts_recurrence(12, 60);
  CHECK(n.back() > BigInt("100000000000000000000000000000000000000000000000000"));
  CHECK(layer_counts_closed_form(12, 60) == n);
}

TEST_CASE("forbidden-disk Euler characteristic is an exact rational") {
  CHECK(forbidden_disk_chi({7, 2, 2, 2, 1, 0, 0}) == Rational(5, 6));
  CHECK(forbidden_disk_chi({7, 2, 2, 2, 0, 0, 0}) == Rational(1));
  CHECK(forbidden_disk_chi({8, 2, 2, 3, 0, 1, 0}) == Rational(1, 3));

  CHECK_THROWS_AS(forbidden_disk_chi({6, 2, 2, 2, 1, 0, 0}), Error);
  CHECK_THROWS_AS(forbidden_disk_chi({7, 1, 2, 2, 1, 0, 0}), Error);
}

TEST_CASE("forbidden-disk bound: at least one extra vertex forces chi below 1") {
  for (int d = 7; d <= 12; ++d) {
    const Rational bound = Rational(1) - Rational(d - 6, 6);
    for (int sum = 6; sum <= 20; ++sum)
      for (int m0 = 0; m0 <= 4; ++m0)
        for (int m1 = 0; m1 <= 4; ++m1)
          for (int m2 = 0; m2 <= 4; ++m2) {
            if (m0 + m1 + m2 < 1) continue;
            const auto chi = forbidden_disk_chi({d, 2, 2, sum - 4, m0, m1, m2});
            CHECK(chi < 1);
            CHECK(chi <= bound);
          }
  }
}
