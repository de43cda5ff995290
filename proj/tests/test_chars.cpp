#include <doctest.h>

#include "wronski/chars.hpp"

using namespace wronski;

TEST_CASE("chi: worked values") {
  CHECK(chi(Partition({2, 1}), Composition({2, 1})) == 0);
  CHECK(chi(Partition({2, 1}), Composition({1, 1, 1})) == 2);
  CHECK(chi(Partition({2, 1}), Composition({3})) == -1);
  CHECK(chi(Partition({6, 1}), Composition({2, 2, 1, 1, 1})) == 2);
  CHECK(chi(Partition({3, 3, 3, 3, 3, 3}), two_one(6, 6)) == 0);
  CHECK(chi(Partition({3, 3, 3, 3, 3, 3}), two_one(7, 4)) == 0);
  CHECK_THROWS(chi(Partition({2, 1}), Composition({2})));
}

TEST_CASE("chi_oracle: worked values and guard") {
  CHECK(chi_oracle(Partition({2, 1}), Composition({1, 1, 1})) == 2);
  CHECK(chi_oracle(Partition({2, 1}), Composition({3})) == -1);
  CHECK_THROWS(chi_oracle(Partition({3, 3, 3}), Composition::ones(9)));
}

TEST_CASE("chi agrees with the Frobenius expansion for n <= 7") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& l : partitions_of(n))
      for (const auto& mu : partitions_of(n))
        CHECK(chi(l, mu) == chi_oracle(l, Composition(mu.parts())));
}

TEST_CASE("chi: hook values, dimension and duality") {
  for (int n = 2; n <= 12; ++n)
    for (int n2 = 0; 2 * n2 <= n; ++n2) {
      int n1 = n - 2 * n2;
      CHECK(chi(Partition({n - 1, 1}), two_one(n2, n1)) == n1 - 1);
    }
  for (int n = 1; n <= 8; ++n)
    for (const auto& l : partitions_of(n)) {
      CHECK(chi(l, Composition::ones(n)) == syt_count(l));
      for (const auto& mu : compositions_12(n)) {
        std::int64_t sign = mu.n2() % 2 == 0 ? 1 : -1;
        CHECK(chi(l.conjugate(), mu) == sign * chi(l, mu));
      }
    }
}

TEST_CASE("chi does not depend on the order of parts") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& l : partitions_of(n))
      for (const auto& mu : compositions_12(n)) CHECK(chi(l, mu) == chi(l, mu.sorted()));
}

TEST_CASE("chi equals the signed MN tableau count") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& l : partitions_of(n))
      for (const auto& mu : partitions_of(n)) {
        std::int64_t s = 0;
        for (const auto& t : mn_filter(l, Composition(mu.parts()))) s += t.sign;
        CHECK(s == chi(l, mu));
      }
}

TEST_CASE("3^5 character minimum") {
  Partition l({3, 3, 3, 3, 3});
  std::int64_t best = -1;
  int at = -1;
  for (int n2 = 0; 2 * n2 <= 15; ++n2) {
    std::int64_t v = chi_oracle(l, two_one(n2, 15 - 2 * n2), 15);
    CHECK(v == chi(l, two_one(n2, 15 - 2 * n2)));
    if (best < 0 || std::llabs(v) < best) {
      best = std::llabs(v);
      at = n2;
    }
  }
  CHECK(best == 6);
  CHECK(at == 4);
}
