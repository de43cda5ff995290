#include <doctest.h>

#include <cmath>
#include <set>

#include "wronski/chars.hpp"
#include "wronski/degen.hpp"

using namespace wronski;

namespace {

QPoly from_roots(const std::vector<Rational>& a) { return QPoly::from_negated_roots(std::span<const Rational>(a)); }

Tableau tab(const char* shape, std::vector<std::vector<int>> rows) { return Tableau(Partition::parse(shape), std::move(rows)); }

double coeff_gap(const CPoly& a, const CPoly& b) {
  double d = 0;
  for (int k = 0; k <= std::max(a.degree(), b.degree()); ++k) d = std::max(d, std::abs(a.coeff(k) - b.coeff(k)));
  return d;
}

}  // namespace

TEST_CASE("h_mu worked examples") {
  const Rational half(1, 2);
  CHECK(h_mu(Composition::parse("1,1,1"), half) == from_roots({Rational(1, 8), Rational(1, 4), Rational(1, 2)}));
  QPoly quad = QPoly::monomial(Rational(1), 2) + QPoly::constant(Rational(9, 256));
  CHECK(h_mu(Composition::parse("2,1"), half) == quad * from_roots({half}));
  // Bars 7, 6, 4, 2, 1 for mu = (2,1,2,2,1).
  const Composition mu = Composition::parse("2,1,2,2,1");
  CHECK(mu.bar(1) == 7);
  CHECK(mu.bar(2) == 6);
  CHECK(mu.bar(3) == 4);
  CHECK(mu.bar(4) == 2);
  CHECK(mu.bar(5) == 1);
  const Rational e(1, 3);
  auto pair = [&](int bar) {
    Rational r = (pow(e, static_cast<unsigned>(bar)) + pow(e, static_cast<unsigned>(bar + 1))) / 2;
    return QPoly::monomial(Rational(1), 2) + QPoly::constant(r * r);
  };
  auto single = [&](int bar) { return from_roots({pow(e, static_cast<unsigned>(bar))}); };
  CHECK(h_mu(mu, e) == pair(7) * single(6) * pair(4) * pair(2) * single(1));
  CHECK_THROWS_AS(h_mu(mu, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(h_mu(mu, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(h_mu(Composition::parse("3"), half), std::invalid_argument);
}

TEST_CASE("h_mu lies in the stratum of mu and matches its marked points") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& mu : compositions_12(n))
      for (const Rational& e : {Rational(1, 2), Rational(1, 5), Rational(2, 3)}) {
        QPoly h = h_mu(mu, e);
        RootPattern pat = classify_pattern(h);
        CHECK_FALSE(pat.boundary);
        CHECK(pat.n1 == mu.n1());
        CHECK(pat.n2 == mu.n2());
        auto a = h_mu_marked_points(mu, e.get_d());
        CPoly g = CPoly::from_negated_roots(std::span<const Complex>(a));
        CHECK(coeff_gap(g, to_complex(h)) < 1e-14);
      }
}

TEST_CASE("coalescence path") {
  const Rational e(1, 2);
  const Composition mp = Composition::parse("1,1,1");
  BasePath p = coalescence_path(mp, 1, e);
  CHECK(merged(mp, 1) == Composition::parse("2,1"));
  CHECK(coeff_gap(p.at(0), to_complex(h_mu(mp, e))) < 1e-15);
  CHECK(coeff_gap(p.at(1), to_complex(h_mu(Composition::parse("2,1"), e))) < 1e-15);
  REQUIRE(p.crossings.size() == 1);
  CHECK(p.crossings[0] == 0.5);
  // c = bar'(b+1) = 2 for b = 1: the merge point is (u^2 + u^3)/2.
  CHECK(std::abs(p.crossing_points[0] - Complex(3.0 / 16, 0)) < 1e-15);
  auto mid = p.marked_points(0.5);
  CHECK(std::abs(mid[0] - mid[1]) < 1e-15);
  CHECK(std::abs(mid[0] - p.crossing_points[0]) < 1e-15);
  // g_t is C^1 at the merge.
  const double h = 1e-6;
  CPoly left = Complex(1 / h) * (p.at(0.5) - p.at(0.5 - h));
  CPoly right = Complex(1 / h) * (p.at(0.5 + h) - p.at(0.5));
  CHECK(coeff_gap(left, right) < 1e-4);
  // Other marked points stay put.
  for (double t : {0.1, 0.7, 1.0}) CHECK(p.marked_points(t)[2] == Complex(0.5, 0));
  CHECK_THROWS_AS(coalescence_path(Composition::parse("2,1"), 1, e), std::invalid_argument);
  CHECK_THROWS_AS(coalescence_path(mp, 3, e), std::invalid_argument);
  CHECK_THROWS_AS(merged(Composition::parse("1,2"), 1), std::invalid_argument);
}

TEST_CASE("estimate_valuation") {
  for (double v : {0.0, 1.0, 3.0, 7.0}) {
    std::vector<double> m;
    for (int k = 0; k < 3; ++k) {
      double u = 0.5 / std::pow(2.0, k);
      m.push_back(2.5 * std::pow(u, v) * (1 + 0.7 * u));
    }
    CHECK(std::abs(estimate_valuation(m) - v) < 0.05);
  }
  CHECK(std::isinf(estimate_valuation({1.0, 0.0, 0.0})));
  CHECK_THROWS_AS(estimate_valuation({1.0}), std::invalid_argument);
}

TEST_CASE("labels of the worked special fibres") {
  const Partition l({2, 1});
  const Rational e(1, 2);
  SUBCASE("all ones") {
    LabeledFibre f = label_fibre(l, Composition::parse("1,1,1"), e);
    REQUIRE(f.report.solutions.size() == 2);
    const int i0 = f.index_of(tab("2,1", {{1, 2}, {3}}));
    const int i1 = f.index_of(tab("2,1", {{1, 3}, {2}}));
    REQUIRE(i0 >= 0);
    REQUIRE(i1 >= 0);
    CHECK(i0 != i1);
    // <z^3 + A z^2 + B z, z + c> with A ~ u^2, B ~ u^5, c ~ u.
    std::vector<double> a;
    std::vector<double> b;
    std::vector<double> c;
    for (const auto& x : f.samples[static_cast<std::size_t>(i0)]) {
      auto fs = basis_polys(x);
      CPoly f1 = Complex(6) * fs[0];
      Complex cc = fs[1].coeff(0);
      a.push_back(std::abs(f1.coeff(2)));
      b.push_back(std::abs(f1.coeff(0) / cc));
      c.push_back(std::abs(cc));
    }
    CHECK(std::abs(estimate_valuation(a) - 2) < 0.2);
    CHECK(std::abs(estimate_valuation(b) - 5) < 0.2);
    CHECK(std::abs(estimate_valuation(c) - 1) < 0.2);
  }
  SUBCASE("(2,1)") {
    LabeledFibre f = label_fibre(l, Composition::parse("2,1"), e);
    REQUIRE(f.report.solutions.size() == 2);
    CHECK(f.report.real_count == 2);
    std::set<Tableau> labels;
    for (const auto& s : f.report.solutions) labels.insert(*s.tableau);
    CHECK(labels == std::set<Tableau>{tab("2,1", {{1, 1}, {2}}), tab("2,1", {{1, 2}, {1}})});
  }
  SUBCASE("(1,2)") {
    LabeledFibre f = label_fibre(l, Composition::parse("1,2"), e);
    REQUIRE(f.report.solutions.size() == 2);
    CHECK(f.report.real_count == 0);
    for (const auto& s : f.report.solutions) CHECK(*s.tableau == tab("2,1", {{1, 2}, {2}}));
  }
  CHECK_THROWS_AS(label_fibre(l, Composition::parse("1,1"), e), std::invalid_argument);
}

TEST_CASE("special fibres: real counts, MN labels and cluster sizes for n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& l : partitions_of(n))
      for (const auto& mu : compositions_12(n)) {
        CAPTURE(l.str());
        CAPTURE(mu.str());
        LabeledFibre f = label_fibre(l, mu, choose_epsilon(l, mu));
        CHECK(f.report.reduced());
        CHECK(f.report.real_count == static_cast<int>(mn_filter(l, mu).size()));
        std::map<Tableau, int> count;
        for (const auto& s : f.report.solutions) {
          REQUIRE(s.tableau);
          CHECK(s.real == is_mn(*s.tableau));
          ++count[*s.tableau];
        }
        for (const auto& t : enumerate_tab(l, mu)) CHECK(count[t] == (1 << domino_stats(t).twoskews));
      }
}

TEST_CASE("choose_epsilon") {
  for (const auto& mu : compositions_12(3)) CHECK(choose_epsilon(Partition({2, 1}), mu) == Rational(1, 2));
  CHECK(choose_epsilon(Partition({1}), Composition::parse("1")) == Rational(1, 2));
  const Rational a = choose_epsilon(Partition({3, 2}), Composition::parse("1,1,1,1,1"));
  CHECK(a == choose_epsilon(Partition({3, 2}), Composition::parse("1,1,1,1,1")));
}

TEST_CASE("character signs of the worked examples") {
  CharacterSigns cs = character_signs(Partition({2, 1}), Composition::parse("2,1"));
  CHECK(cs.signs.at(tab("2,1", {{1, 1}, {2}})) == 1);
  CHECK(cs.signs.at(tab("2,1", {{1, 2}, {1}})) == -1);
  CHECK(cs.degree == 0);
  // Hook shapes: n1 - 1.
  for (int n = 2; n <= 5; ++n) {
    const Partition hook({n - 1, 1});
    for (const auto& mu : compositions_12(n)) {
      CAPTURE(mu.str());
      CHECK(character_signs(hook, mu).degree == mu.n1() - 1);
    }
  }
  // All-ones content: every sign is +1.
  for (int n = 1; n <= 5; ++n)
    for (const auto& l : partitions_of(n)) {
      std::vector<int> ones(static_cast<std::size_t>(n), 1);
      CharacterSigns c = character_signs(l, Composition(ones));
      CHECK(c.degree == syt_count(l));
      for (const auto& [t, s] : c.signs) CHECK(s == 1);
    }
}

TEST_CASE("ledger signs equal MN signs and sum to the character, n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& l : partitions_of(n))
      for (const auto& mu : compositions_12(n)) {
        CAPTURE(l.str());
        CAPTURE(mu.str());
        CharacterSigns cs = character_signs(l, mu);
        for (const auto& st : mn_filter(l, mu)) CHECK(cs.signs.at(st.tableau) == st.sign);
        CHECK(cs.degree == chi(l, mu));
        for (const auto& sw : cs.swaps) {
          CHECK(sw.ledger.count(CrossingKind::Ramification) == 1);
          CHECK(sw.ledger.count(CrossingKind::Horizontal) == 1);
          CHECK(sw.ledger.count(CrossingKind::Vertical) == 1);
          CHECK(sw.fold_converged);
        }
        for (const auto& co : cs.coalescences) {
          CHECK(co.ledger.count(CrossingKind::Ramification) == 0);
          CHECK(co.ledger.events.size() == 1);
          CHECK(co.ledger.events[0].t == 0.5);
        }
      }
}

TEST_CASE("dual signs") {
  DualCheck a = dual_signs_check(Partition({2, 1}), Composition::parse("2,1"));
  CHECK(a.pass);
  CHECK(a.expected_product == -1);
  for (const auto& [t, p] : a.products) CHECK(p == -1);
  DualCheck b = dual_signs_check(Partition({2, 2}), Composition::parse("2,2"));
  CHECK(b.pass);
  for (const auto& [t, p] : b.products) CHECK(p == 1);
  CharacterSigns c = character_signs(Partition({3, 1}), Composition::parse("1,1,1,1"));
  for (const auto& [t, s] : c.signs) CHECK(c.dual_signs.at(t) == s);
}

TEST_CASE("signs do not depend on the spanning tree or the coalescence order") {
  for (const auto& [ls, ms] : std::vector<std::pair<const char*, const char*>>{{"2,2", "2,2"}, {"3,1", "2,1,1"}, {"2,1,1", "2,2"}}) {
    const Partition l = Partition::parse(ls);
    const Composition mu = Composition::parse(ms);
    CharacterSigns base = character_signs(l, mu);
    for (std::uint64_t seed : {1u, 7u}) {
      CharacterOptions o;
      o.tree_seed = seed;
      std::vector<int> twos;
      for (int p = 1; p <= mu.length(); ++p)
        if (mu.part(p) == 2) twos.push_back(p);
      o.order = twos;
      CharacterSigns other = character_signs(l, mu, o);
      CHECK(other.signs == base.signs);
      CHECK(other.dual_signs == base.dual_signs);
    }
  }
}

TEST_CASE("real solutions carry ambient signs") {
  CharacterSigns cs = character_signs(Partition({2, 1}), Composition::parse("1,1,1"));
  for (const auto& s : cs.fibre.report.solutions) {
    REQUIRE(s.asgn);
    CHECK((*s.asgn == 1 || *s.asgn == -1));
  }
  const int t0 = cs.fibre.index_of(t_zero(Partition({2, 1})));
  CHECK(*cs.fibre.report.solutions[static_cast<std::size_t>(t0)].asgn == 1);
}
