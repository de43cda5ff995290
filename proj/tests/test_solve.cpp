#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "wronski/solve.hpp"

using namespace wronski;

namespace {

QPoly from_roots(const std::vector<Rational>& a) { return QPoly::from_negated_roots(std::span<const Rational>(a)); }

std::vector<Rational> random_distinct(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(-40, 40);
  std::vector<Rational> out;
  while (static_cast<int>(out.size()) < n) {
    Rational r(num(rng), 8);
    r.canonicalize();
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  return out;
}

double dist(const CPoint& a, const CPoint& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) d = std::max(d, std::abs(a.coords[i] - b.coords[i]));
  return d;
}

double nearest(const FibreReport& r, const CPoint& x) {
  double best = INFINITY;
  for (const auto& s : r.solutions) best = std::min(best, dist(s.point, x));
  return best;
}

}  // namespace

TEST_CASE("solve_hook on z^3 - 3z") {
  auto rep = solve_hook(3, QPoly({Rational(0), Rational(-3), Rational(0), Rational(1)}));
  REQUIRE(rep.solutions.size() == 2);
  CHECK(rep.real_count == 2);
  std::vector<double> cs;
  for (const auto& s : rep.solutions) {
    CHECK(s.residual < 1e-12);
    cs.push_back(-s.point.at(Cell{2, 1}).real());
  }
  std::sort(cs.begin(), cs.end());
  CHECK(cs[0] == doctest::Approx(-1));
  CHECK(cs[1] == doctest::Approx(1));
}

TEST_CASE("solve_hook on the special polynomials of (2,1)") {
  QPoly h111 = from_roots({Rational(1, 8), Rational(1, 4), Rational(1, 2)});
  QPoly h12 = QPoly({Rational(1, 8), Rational(1)}) * QPoly({Rational(9, 64), Rational(0), Rational(1)});
  CHECK(solve_hook(3, h111).real_count == 2);
  auto rep = solve_hook(3, h12);
  CHECK(rep.solutions.size() == 2);
  CHECK(rep.real_count == 0);
  CHECK(rep.certified);
}

TEST_CASE("exact_solve worked fibres") {
  QPoly h111 = from_roots({Rational(1, 8), Rational(1, 4), Rational(1, 2)});
  QPoly h12 = QPoly({Rational(1, 8), Rational(1)}) * QPoly({Rational(9, 64), Rational(0), Rational(1)});
  auto a = exact_solve(Partition({2, 1}), h111);
  CHECK(a.total_multiplicity() == 2);
  CHECK(a.real_count == 2);
  auto b = exact_solve(Partition({2, 1}), h12);
  CHECK(b.total_multiplicity() == 2);
  CHECK(b.real_count == 0);
  auto c = exact_solve(Partition({2, 2}), from_roots({Rational(-1), Rational(1, 3), Rational(2), Rational(5)}));
  CHECK(c.total_multiplicity() == 2);
  CHECK(c.real_count == 2);
  for (const auto* r : {&a, &b, &c})
    for (const auto& s : r->solutions) CHECK(s.residual < 1e-9);
}

TEST_CASE("exact_solve multiplicities and guards") {
  // Wr^{-1}(z^3) on (2,1) is the origin with multiplicity 2.
  auto r = exact_solve(Partition({2, 1}), QPoly::monomial(Rational(1), 3));
  REQUIRE(r.solutions.size() == 1);
  CHECK(r.solutions[0].multiplicity == 2);
  CHECK(r.solutions[0].real);
  CHECK(r.real_count == 2);
  CHECK_FALSE(r.reduced());
  QPoly g6 = from_roots({Rational(1), Rational(2), Rational(3), Rational(4), Rational(5), Rational(6)});
  CHECK_THROWS_AS(exact_solve(Partition({3, 2, 1}), g6), std::invalid_argument);
  CHECK_THROWS_AS(exact_solve(Partition({4, 3}), g6 * QPoly({Rational(7), Rational(1)})), std::invalid_argument);
  CHECK_THROWS_AS(exact_solve(Partition({2, 1}), QPoly::monomial(Rational(2), 3)), std::invalid_argument);
}

TEST_CASE("exact_solve totals, conjugation symmetry and agreement with the hook solver") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(-30, 30);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& l : partitions_of(n)) {
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<Rational> c(static_cast<std::size_t>(n + 1));
        for (auto& x : c) {
          x = Rational(num(rng), 7);
          x.canonicalize();
        }
        c.back() = 1;
        QPoly g(c);
        auto rep = exact_solve(l, g);
        CHECK(rep.total_multiplicity() == syt_count(l));
        CHECK(rep.real_count <= syt_count(l));
        for (const auto& s : rep.solutions) {
          CHECK(s.residual < 1e-9);
          if (s.real) continue;
          CPoint conj = s.point;
          for (auto& v : conj.coords) v = std::conj(v);
          CHECK(nearest(rep, conj) < 1e-8 * (1 + dist(conj, CPoint(l))));
        }
        if (l.length() == 2 && l.row(2) == 1 && n >= 2) {
          auto hook = solve_hook(n, g);
          CHECK(hook.solutions.size() == rep.solutions.size());
          CHECK(hook.real_count == rep.real_count);
          for (const auto& s : hook.solutions) CHECK(nearest(rep, s.point) < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("newton_polish") {
  auto rep = solve_hook(4, from_roots({Rational(-2), Rational(-1), Rational(1), Rational(3)}));
  const Partition l({3, 1});
  for (const auto& s : rep.solutions) {
    CPoint y = newton_polish(l, s.point, rep.g);
    CHECK(dist(y, s.point) < 1e-12 * (1 + dist(s.point, CPoint(l))));
  }
  // Perturb the critical point by 1e-3 and recover it.
  Complex c = -rep.solutions[0].point.at(Cell{2, 1});
  QPoly g = *rep.g_exact;
  CPoly gc = to_complex(g);
  CPoint x0 = solve_hook(4, gc).solutions[0].point;
  x0.at(Cell{2, 1}) -= 1e-3;
  CPoint y = newton_polish(l, x0, gc);
  CHECK(std::abs(-y.at(Cell{2, 1}) - c) < 1e-12);
  CHECK(residual(y, gc) <= 1e-12);
  // Near the double solution over z^3 the Jacobian vanishes.
  CPoint z0(Partition({2, 1}), {Complex(1e-9), Complex(-1e-9), Complex(1e-9)});
  CHECK_THROWS_AS(newton_polish(Partition({2, 1}), z0, to_complex(QPoly::monomial(Rational(1), 3))), NumericalError);
}

TEST_CASE("solve_slice1") {
  QPoint x = solve_slice1(Partition({2, 1}), Partition({1, 1}), Rational(3));
  CHECK(x.at(Cell{1, 2}) == 2);
  CHECK(x.at(Cell{1, 1}) == 0);
  CHECK(solve_slice1(Partition({2, 1}), Partition({1, 1}), Rational(0)).coords == QPoint(Partition({2, 1})).coords);
  CHECK(solve_slice1(Partition({3}), Partition({2}), Rational(1)).at(Cell{1, 3}) == Rational(1, 3));
  CHECK_THROWS(solve_slice1(Partition({3}), Partition({1}), Rational(1)));
  for (int n = 1; n <= 7; ++n)
    for (const auto& l : partitions_of(n))
      for (Cell c : l.removable()) {
        Rational a(-5, 3);
        QPoly expect = QPoly::monomial(Rational(1), n - 1) * QPoly({a, Rational(1)});
        CHECK(wronski_affine(solve_slice1(l, l.without(c), a)) == expect);
      }
}

TEST_CASE("solve_slice2 worked cases and hook identity") {
  auto r = solve_slice2(Partition({2, 1}), Partition({1}), Complex(0, 1), Complex(0, -1));
  CHECK(r.distance == 2);
  CHECK(r.discriminant.real() == doctest::Approx(-3));
  REQUIRE(r.points.size() == 2);
  CHECK_FALSE(r.points[0].real);
  auto s = solve_slice2(Partition({2, 1}), Partition({1}), Complex(1), Complex(2));
  CHECK(s.discriminant.real() > 0);
  CHECK(s.points[0].real);
  CHECK(s.points[1].real);
  for (int n = 2; n <= 8; ++n)
    for (const auto& l : partitions_of(n))
      for (const auto& k : subpartitions(l)) {
        if (k.size() != n - 2) continue;
        std::vector<Cell> boxes;
        for (Cell c : l.cells())
          if (!k.contains(c)) boxes.push_back(c);
        int L = distance(boxes[0], boxes[1]);
        if (L > 1) CHECK(slice2_hook_ratio(l, k) == 1 - Rational(1, L * L));
      }
}

TEST_CASE("solve_slice2 points solve the slice equations") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int n = 2; n <= 6; ++n)
    for (const auto& l : partitions_of(n))
      for (const auto& k : subpartitions(l)) {
        if (k.size() != n - 2) continue;
        for (int trial = 0; trial < 3; ++trial) {
          Complex a1, a2;
          if (trial == 2) {
            a1 = Complex(u(rng), u(rng));
            a2 = std::conj(a1);
          } else {
            a1 = u(rng);
            a2 = u(rng);
          }
          auto res = solve_slice2(l, k, a1, a2);
          CPoly g = CPoly::monomial(Complex(1), n - 2) * CPoly({a1, Complex(1)}) * CPoly({a2, Complex(1)});
          int mult = 0;
          for (const auto& p : res.points) {
            mult += p.multiplicity;
            CHECK(residual(p.point, g) < 1e-12);
            for (Cell c : k.cells()) CHECK(p.point.at(c) == Complex(0));
          }
          CHECK(mult == (res.distance == 1 ? 1 : 2));
          if (res.distance > 1) {
            bool real = res.discriminant.real() > 0;
            for (const auto& p : res.points) CHECK(p.real == real);
          }
        }
      }
}

TEST_CASE("constant path and closed loops") {
  QPoly g = from_roots({Rational(-3), Rational(-1), Rational(1, 2), Rational(2), Rational(4)});
  for (const auto& l : partitions_of(5)) {
    auto rep = exact_solve(l, g);
    auto same = track(rep, constant_path(rep.g));
    for (std::size_t i = 0; i < rep.solutions.size(); ++i) {
      CHECK(dist(same.tracks[i].point, rep.solutions[i].point) < 1e-10 * (1 + dist(rep.solutions[i].point, CPoint(l))));
      CHECK(same.tracks[i].ledger.events.empty());
    }
    // Translate all marked points around a circle.
    BasePath loop;
    loop.n = 5;
    auto base = roots(rep.g);
    loop.marked_points = [base](double t) {
      std::vector<Complex> a;
      Complex shift = 0.3 * (std::exp(Complex(0, 2 * std::numbers::pi * t)) - 1.0);
      for (auto r : base) a.push_back(-r + shift);
      return a;
    };
    auto back = track(rep, loop);
    for (std::size_t i = 0; i < rep.solutions.size(); ++i) {
      CHECK(back.tracks[i].completed);
      CHECK(dist(back.tracks[i].point, rep.solutions[i].point) < 1e-8 * (1 + dist(rep.solutions[i].point, CPoint(l))));
    }
  }
}

TEST_CASE("hook ambient signs alternate and match the Jacobian up to one calibration") {
  for (int n = 3; n <= 5; ++n) {
    std::vector<Rational> rs;
    for (int k = 0; k < n; ++k) rs.push_back(Rational(k * k + 1, 3));
    QPoly g = from_roots(rs);
    auto rep = solve_hook(n, g);
    std::vector<std::pair<double, int>> signs;
    int cal = 0;
    for (const auto& s : rep.solutions) {
      Complex c = -s.point.at(Cell{2, 1});
      int h = hook_ambient_sign(rep.g, c);
      int j = jacobian_sign(s.point);
      if (cal == 0) cal = h * j;
      CHECK(h * j == cal);
      signs.emplace_back(c.real(), h);
    }
    std::sort(signs.begin(), signs.end());
    CHECK(signs.front().second == 1);
    for (std::size_t k = 1; k < signs.size(); ++k) CHECK(signs[k].second == -signs[k - 1].second);
  }
}
