#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "wronski/combi.hpp"

using namespace wronski;

namespace {

// Partition counts by the standard part-bounded recurrence.
long partition_count(int n) {
  std::vector<long> p(static_cast<std::size_t>(n + 1), 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
  return p[static_cast<std::size_t>(n)];
}

// Standard fillings by brute force over permutations of 1..n in reading order.
long brute_syt(const Partition& lambda) {
  const auto cells = lambda.cells();
  std::vector<int> perm(cells.size());
  std::iota(perm.begin(), perm.end(), 1);
  long count = 0;
  do {
    std::map<Cell, int> v;
    for (std::size_t k = 0; k < cells.size(); ++k) v[cells[k]] = perm[k];
    bool ok = true;
    for (Cell c : cells) {
      if (lambda.contains(Cell{c.row, c.col + 1}) && v[{c.row, c.col + 1}] < v[c]) ok = false;
      if (lambda.contains(Cell{c.row + 1, c.col}) && v[{c.row + 1, c.col}] < v[c]) ok = false;
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

Partition transpose_by_cells(const Partition& lambda) {
  std::map<int, int> cols;
  for (Cell c : lambda.cells()) ++cols[c.col];
  std::vector<int> parts;
  for (auto& [j, len] : cols) parts.push_back(len);
  return Partition(parts);
}

}  // namespace

TEST_CASE("partitions_of: small cases and counts") {
  auto p0 = partitions_of(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].empty());
  auto p3 = partitions_of(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0] == Partition({3}));
  CHECK(p3[1] == Partition({2, 1}));
  CHECK(p3[2] == Partition({1, 1, 1}));
  CHECK(partitions_of(8).size() == 22);
  for (int n = 0; n <= 12; ++n) {
    auto ps = partitions_of(n);
    CHECK(static_cast<long>(ps.size()) == partition_count(n));
    CHECK(std::is_sorted(ps.begin(), ps.end(), std::greater<>()));
    CHECK(std::set<Partition>(ps.begin(), ps.end()).size() == ps.size());
  }
}

TEST_CASE("partition parsing and validation") {
  CHECK(Partition::parse("3,2,1") == Partition({3, 2, 1}));
  CHECK(Partition::parse("").empty());
  CHECK(Partition::parse("0").empty());
  CHECK(Partition::parse("3,2,1").str() == "3,2,1");
  CHECK_THROWS(Partition({1, 2}));
  CHECK_THROWS(Partition::parse("3,,1"));
  CHECK_THROWS(Partition::parse("3,x"));
  CHECK_THROWS(Partition({2, -1}));
}

TEST_CASE("conjugate") {
  CHECK(Partition({2, 1}).conjugate() == Partition({2, 1}));
  CHECK(Partition({3}).conjugate() == Partition({1, 1, 1}));
  CHECK(Partition({5, 3, 2}).conjugate() == Partition({3, 3, 2, 1, 1}));
  for (int n = 0; n <= 9; ++n)
    for (const auto& l : partitions_of(n)) {
      CHECK(l.conjugate().conjugate() == l);
      CHECK(l.conjugate() == transpose_by_cells(l));
    }
}

TEST_CASE("containment is a partial order") {
  auto ps = partitions_of(0);
  for (int n = 1; n <= 5; ++n) {
    auto more = partitions_of(n);
    ps.insert(ps.end(), more.begin(), more.end());
  }
  for (const auto& a : ps) {
    CHECK(a.contains(a));
    for (const auto& b : ps) {
      if (a.contains(b) && b.contains(a)) CHECK(a == b);
      for (const auto& c : ps)
        if (a.contains(b) && b.contains(c)) CHECK(a.contains(c));
    }
  }
}

TEST_CASE("syt_count: hook formula against brute force") {
  CHECK(syt_count(Partition({5})) == 1);
  CHECK(syt_count(Partition({2, 1})) == 2);
  CHECK(syt_count(Partition({3, 2, 1})) == 16);
  CHECK(brute_syt(Partition({3, 2, 1})) == 16);
  for (int n = 0; n <= 7; ++n)
    for (const auto& l : partitions_of(n)) {
      CHECK(syt_count(l) == brute_syt(l));
      CHECK(syt_count(l) == syt_count(l.conjugate()));
    }
  for (int n = 0; n <= 8; ++n)
    for (const auto& l : partitions_of(n))
      CHECK(static_cast<std::int64_t>(standard_tableaux(l).size()) == syt_count(l));
}

TEST_CASE("enumerate_tab: small shapes") {
  CHECK(enumerate_tab(Partition({2, 1}), Composition::ones(3)).size() == 2);
  auto skew = enumerate_tab(Partition({2, 1}), Composition({1, 2}));
  REQUIRE(skew.size() == 1);
  CHECK(skew[0].str() == "[[1,2],[2]]");
  CHECK(domino_stats(skew[0]) == DominoStats{1, 0, 0, 1});
  auto sq = enumerate_tab(Partition({2, 2}), Composition({2, 2}));
  long total = 0;
  for (const auto& t : sq) total += 1L << domino_stats(t).twoskews;
  CHECK(total == 2);
  CHECK_THROWS(enumerate_tab(Partition({2}), Composition({1, 1, 1})));
}

TEST_CASE("enumerate_tab: every filling is valid and canonical order holds") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& l : partitions_of(n))
      for (const auto& mu : compositions_12(n)) {
        auto ts = enumerate_tab(l, mu);
        CHECK(std::is_sorted(ts.begin(), ts.end()));
        CHECK(std::adjacent_find(ts.begin(), ts.end()) == ts.end());
        for (const auto& t : ts) {
          CHECK(t.content() == mu.parts());
          int total = 0;
          for (int b = 1; b <= mu.length(); ++b) {
            CHECK(l.contains(t.shape_upto(b)));
            total += static_cast<int>(t.level(b).size());
          }
          CHECK(total == n);
        }
      }
}

TEST_CASE("domino statistics of the worked example") {
  Tableau t(Partition({5, 4, 3}), {{1, 2, 4, 6, 7}, {3, 3, 4, 9}, {5, 8, 8}});
  CHECK(t.content() == std::vector<int>{1, 1, 2, 2, 1, 1, 1, 2, 1});
  CHECK(domino_stats(t) == DominoStats{6, 2, 1, 0});
  CHECK(is_mn(t));
  CHECK(mn_sign(t) == -1);
  auto mn = mn_filter(Partition({5, 4, 3}), Composition({1, 1, 2, 2, 1, 1, 1, 2, 1}));
  CHECK(std::any_of(mn.begin(), mn.end(), [&](const SignedTableau& s) { return s.tableau == t && s.sign == -1; }));
  for (const auto& s : standard_tableaux(Partition({3, 2})))
    CHECK(domino_stats(s) == DominoStats{5, 0, 0, 0});
  CHECK_THROWS(domino_stats(Tableau(Partition({3}), {{1, 1, 1}})));
}

TEST_CASE("easy identity: sum of 2^twoskew equals f^lambda") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& l : partitions_of(n))
      for (const auto& mu : compositions_12(n)) {
        std::int64_t total = 0;
        for (const auto& t : enumerate_tab(l, mu)) total += std::int64_t{1} << domino_stats(t).twoskews;
        CHECK(total == syt_count(l));
      }
}

TEST_CASE("mn_filter") {
  auto a = mn_filter(Partition({2, 1}), Composition({2, 1}));
  REQUIRE(a.size() == 2);
  CHECK(a[0].tableau.str() == "[[1,1],[2]]");
  CHECK(a[0].sign == 1);
  CHECK(a[1].tableau.str() == "[[1,2],[1]]");
  CHECK(a[1].sign == -1);
  CHECK(mn_filter(Partition({2, 1}), Composition({1, 2})).empty());
  auto c = mn_filter(Partition({2, 1}), Composition({3}));
  REQUIRE(c.size() == 1);
  CHECK(c[0].sign == -1);
}

TEST_CASE("mn_filter equals the twoskew-free part of enumerate_tab") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& l : partitions_of(n))
      for (const auto& mu : compositions_12(n)) {
        std::vector<Tableau> expected;
        for (const auto& t : enumerate_tab(l, mu))
          if (domino_stats(t).twoskews == 0) expected.push_back(t);
        auto got = mn_filter(l, mu);
        REQUIRE(got.size() == expected.size());
        for (std::size_t k = 0; k < got.size(); ++k) {
          CHECK(got[k].tableau == expected[k]);
          int sign = domino_stats(expected[k]).vdominoes % 2 == 0 ? 1 : -1;
          CHECK(got[k].sign == sign);
        }
      }
}

TEST_CASE("inversions and I_lambda") {
  CHECK(iota(Partition({3, 3, 3, 3, 3})) == 0);
  CHECK(iota(Partition({3, 3, 3, 3, 3, 3})) == 12);
  CHECK(iota(Partition({2, 1})) == 0);
  auto syt = standard_tableaux(Partition({2, 1}));
  CHECK(inv_stat(syt[0]) == 0);
  CHECK(inv_stat(syt[1]) == 1);
  for (int n = 1; n <= 7; ++n)
    for (const auto& l : partitions_of(n)) {
      Integer brute = 0;
      for (const auto& t : standard_tableaux(l)) brute += (inv_stat(t) % 2 == 0) ? 1 : -1;
      CHECK(iota(l) == brute);
    }
  for (int n = 2; n <= 12; ++n) CHECK(iota(Partition({n - 1, 1})) == (n % 2 == 0 ? 1 : 0));
}

TEST_CASE("t_zero") {
  CHECK(t_zero(Partition({2, 1})).str() == "[[1,2],[3]]");
  CHECK(t_zero(Partition({4})).str() == "[[1,2,3,4]]");
  CHECK(t_zero(Partition({2, 2})).str() == "[[1,2],[3,4]]");
  CHECK(inv_stat(t_zero(Partition({4, 3, 1}))) == 0);
}

TEST_CASE("swap_graph") {
  auto g21 = swap_graph(Partition({2, 1}));
  REQUIRE(g21.vertices.size() == 2);
  REQUIRE(g21.edges.size() == 1);
  CHECK(g21.edges[0].b == 2);
  auto g4 = swap_graph(Partition({4}));
  CHECK(g4.vertices.size() == 1);
  CHECK(g4.edges.empty());
  CHECK(swap_graph(Partition({2, 2})).connected());
  for (int n = 1; n <= 8; ++n)
    for (const auto& l : partitions_of(n)) {
      auto g = swap_graph(l);
      CHECK(g.connected());
      CHECK(g.vertices[static_cast<std::size_t>(g.root)] == t_zero(l));
      for (const auto& e : g.edges) {
        const auto& t = g.vertices[static_cast<std::size_t>(e.from)];
        CHECK(std::abs(inv_stat(t) - inv_stat(g.vertices[static_cast<std::size_t>(e.to)])) == 1);
      }
      auto alt = swap_graph(l, 99);
      CHECK(alt.connected());
    }
}

TEST_CASE("compositions") {
  Composition mu({1, 1, 2, 2, 1, 1, 1, 2, 1});
  CHECK(mu.size() == 12);
  CHECK(mu.n1() == 6);
  CHECK(mu.n2() == 3);
  CHECK(mu.restricted());
  CHECK(mu.bar(1) == 12);
  CHECK(mu.bar(mu.length()) == 1);
  CHECK(mu.sorted() == Partition({2, 2, 2, 1, 1, 1, 1, 1, 1}));
  CHECK(compositions_12(4).size() == 5);
  CHECK_FALSE(Composition({3, 1}).restricted());
}
