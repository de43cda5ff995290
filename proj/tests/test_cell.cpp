#include <doctest.h>

#include <random>

#include "wronski/cell.hpp"

using namespace wronski;

namespace {

Rational rq(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 4);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

QPoint random_point(const Partition& l, std::mt19937_64& rng) {
  QPoint x(l);
  for (auto& c : x.coords) c = rq(rng);
  return x;
}

QPoly shift(const QPoly& f, const Rational& c) {
  QPoly out;
  QPoly lin({c, Rational(1)});
  QPoly pw = QPoly::constant(Rational(1));
  for (int k = 0; k <= f.degree(); ++k) {
    out += f.coeff(k) * pw;
    pw = pw * lin;
  }
  return out;
}

}  // namespace

TEST_CASE("basis_polys follows the affine chart") {
  QPoint x1(Partition({1}), {Rational(5)});
  auto b1 = basis_polys(x1);
  REQUIRE(b1.size() == 1);
  CHECK(b1[0] == QPoly({Rational(5), Rational(1)}));
  QPoint x2(Partition({2}), {Rational(3), Rational(7)});
  CHECK(basis_polys(x2)[0] == QPoly({Rational(3), Rational(7), Rational(1, 2)}));
  CHECK(basis_polys(QPoint(Partition({2, 1})))[0] == QPoly::monomial(Rational(1, 6), 3));

  // lambda = 532 with coordinate x_ij = 10 i + j.
  Partition l({5, 3, 2});
  QPoint x(l);
  for (Cell c : l.cells()) x.at(c) = 10 * c.row + c.col;
  auto b = basis_polys(x);
  CHECK(b[0].coeff(0) == 11);
  CHECK(b[0].coeff(1) == 12);
  CHECK(b[0].coeff(2) == 0);
  CHECK(b[0].coeff(3) == Rational(-13, 6));
  CHECK(b[0].coeff(5) == Rational(7, 60));
  CHECK(b[0].coeff(6) == Rational(1, 48));
  CHECK(b[0].coeff(7) == Rational(1, 5040));
  CHECK(b[1].coeff(0) == -21);
  CHECK(b[1].coeff(1) == -22);
  CHECK(b[1].coeff(3) == Rational(23, 6));
  CHECK(b[1].coeff(4) == Rational(1, 24));
  CHECK(b[2].coeff(0) == 31);
  CHECK(b[2].coeff(1) == 32);
  CHECK(b[2].coeff(2) == Rational(1, 2));
}

TEST_CASE("wronski_affine worked cases") {
  CHECK(wronski_affine(QPoint(Partition({1}), {Rational(4)})) == QPoly({Rational(4), Rational(1)}));
  QPoint x2(Partition({2}), {Rational(3), Rational(7)});
  CHECK(wronski_affine(x2) == QPoly({Rational(6), Rational(14), Rational(1)}));
  CHECK(wronski_affine(QPoint(Partition({2, 1}))) == QPoly::monomial(Rational(1), 3));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    QPoint x = random_point(Partition({2, 1}), rng);
    Rational x11 = x.at({1, 1}), x12 = x.at({1, 2}), x21 = x.at({2, 1});
    QPoly expected({3 * x11, 3 * x12 * x21, Rational(3, 2) * (x12 + x21), Rational(1)});
    CHECK(wronski_affine(x) == expected);
  }
}

TEST_CASE("pluecker coordinates") {
  auto p0 = pluecker(QPoint(Partition({3, 1})));
  for (std::size_t k = 0; k < p0.keys.size(); ++k) CHECK(p0.values[k] == (p0.keys[k] == Partition({3, 1}) ? 1 : 0));
  QPoint x2(Partition({2}), {Rational(3), Rational(7)});
  auto p2 = pluecker(x2);
  CHECK(p2.value(Partition{}) == 3);
  CHECK(p2.value(Partition({1})) == 7);
  CHECK(p2.value(Partition({2})) == 1);
  CHECK(wronski_pluecker(x2) == wronski_affine(x2));
  CHECK(wronski_pluecker(QPoint(Partition({2, 2, 1}))) == QPoly::monomial(Rational(1), 5));
}

TEST_CASE("wronski_affine equals wronski_pluecker and is invariant under duality") {
  std::mt19937_64 rng(2024);
  for (int n = 1; n <= 5; ++n)
    for (const auto& l : partitions_of(n))
      for (int t = 0; t < 10; ++t) {
        QPoint x = random_point(l, rng);
        QPoly w = wronski_affine(x);
        CHECK(w.degree() == n);
        CHECK(w == wronski_pluecker(x));
        CHECK(wronski_affine(dualize(x)) == w);
        CHECK(dualize(dualize(x)).coords == x.coords);
      }
}

TEST_CASE("dualize on a self-conjugate shape") {
  QPoint x(Partition({2, 1}), {Rational(1), Rational(2), Rational(3)});
  auto y = dualize(x);
  CHECK(y.lambda == Partition({2, 1}));
  CHECK(y.coords == std::vector<Rational>{1, 3, 2});
}

TEST_CASE("symbolic system matches direct evaluation") {
  std::mt19937_64 rng(8);
  for (const auto& l : {Partition({2, 1}), Partition({3, 2}), Partition({2, 2, 1}), Partition({4, 1})}) {
    auto sys = WronskiSystem::get(l);
    for (int t = 0; t < 5; ++t) {
      QPoint x = random_point(l, rng);
      QPoly w = wronski_affine(x);
      for (int k = 0; k < l.size(); ++k) CHECK(sys->coefficients()[static_cast<std::size_t>(k)].eval(std::span<const Rational>(x.coords)) == w.coeff(k));
      auto cx = to_complex(x);
      Eigen::Map<const Eigen::VectorXcd> v(cx.coords.data(), l.size());
      auto val = sys->evaluate(v);
      for (int k = 0; k < l.size(); ++k) CHECK(std::abs(val(k) - w.coeff(k).get_d()) < 1e-9 * (1 + std::abs(w.coeff(k).get_d())));
      CHECK(jacobian_det(cx).real() == doctest::Approx(jacobian_det(x).get_d()).epsilon(1e-9));
    }
  }
  CHECK(jacobian_det(QPoint(Partition({1}), {Rational(9)})) == 1);
}

TEST_CASE("cell_point_from_basis inverts basis_polys under basis change and translation") {
  std::mt19937_64 rng(77);
  for (const auto& l : {Partition({2, 1}), Partition({3, 1, 1}), Partition({2, 2}), Partition({4})}) {
    QPoint x = random_point(l, rng);
    auto b = basis_polys(x);
    const int d = l.length();
    std::vector<QPoly> mixed;
    for (int i = 0; i < d; ++i) {
      QPoly s = b[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < d; ++j) s += rq(rng) * b[static_cast<std::size_t>(j)];
      mixed.push_back(Rational(i + 2) * s);
    }
    CHECK(cell_point_from_basis(l, mixed).coords == x.coords);
    // Translating the span translates the Wronskian.
    Rational c = rq(rng);
    std::vector<QPoly> shifted;
    for (const auto& f : b) shifted.push_back(shift(f, c));
    QPoint y = cell_point_from_basis(l, shifted);
    CHECK(wronski_affine(y) == shift(wronski_affine(x), c));
  }
  CHECK_THROWS(cell_point_from_basis(Partition({2}), {QPoly({Rational(0), Rational(1)})}));
}

TEST_CASE("vanishing_partition") {
  QPoly one({Rational(1)}), z({Rational(0), Rational(1)});
  QPoly z2 = z * z, z3 = z2 * z;
  CHECK(vanishing_partition(std::vector<QPoly>{one, z}, Rational(0)).kappa == Partition{});
  CHECK(vanishing_partition(std::vector<QPoly>{one, z2}, Rational(0)).kappa == Partition({1}));
  CHECK(vanishing_partition(std::vector<QPoly>{z2, z3}, Rational(0)).kappa == Partition({2, 2}));
  CHECK(vanishing_partition(std::vector<CPoly>{to_complex(z2), to_complex(z3)}, Complex(0)).kappa == Partition({2, 2}));
  // Size equals the multiplicity of -a as a root of the Wronskian.
  std::mt19937_64 rng(4);
  for (const auto& l : {Partition({2, 1}), Partition({3, 2}), Partition({2, 2, 1})}) {
    QPoint x = random_point(l, rng);
    for (Cell c : l.cells())
      if (c.row > 1 || c.col > 1) x.at(c) = 0;
    QPoly w = wronski_affine(x);
    int mult = 0;
    while (w.coeff(mult) == 0) ++mult;
    CHECK(vanishing_partition(x, Rational(0)).kappa.size() == mult);
  }
}

TEST_CASE("classify_two on Wronskians with a double root") {
  // lambda = (2): basis z^2/2 + x12 z + x11, double root iff it is a square: always horizontal.
  QPoint x(Partition({2}), {Rational(1, 2), Rational(1)});
  CHECK(wronski_affine(x) == QPoly({Rational(1), Rational(2), Rational(1)}));
  CHECK(classify_two(x, Rational(1)) == CrossingKind::Horizontal);
  CHECK(classify_two(to_complex(x), Complex(1)).kind == CrossingKind::Horizontal);
  // lambda = (1,1): span{z^2/2 + x11, z + x21}; Wronskian z^2/2 + x21 z - x11 up to scale, double
  // root at -a when x21 = a and x11 = -a^2/2; then both basis elements vanish at -a only to order 0.
  Partition col({1, 1});
  QPoint y(col);
  Rational a(3);
  y.at({2, 1}) = a;
  auto w = wronski_affine(y);
  Rational c0 = w.coeff(0), c1 = w.coeff(1);
  // Solve for x11 so that w = (z + a)^2.
  Rational x11_unit = wronski_affine(QPoint(col, {Rational(1), Rational(0)})).coeff(0);
  y.at({1, 1}) = (a * a - c0) / x11_unit;
  REQUIRE(wronski_affine(y) == QPoly({a * a, 2 * a, Rational(1)}));
  (void)c1;
  CHECK(classify_two(y, a) == CrossingKind::Vertical);
  CHECK(classify_two(to_complex(y), Complex(3)).kind == CrossingKind::Vertical);
  CHECK_THROWS(classify_two(QPoint(Partition({2, 1})), Rational(0)));
}
