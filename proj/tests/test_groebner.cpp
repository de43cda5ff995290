#include <doctest.h>

#include <random>

#include "wronski/cell.hpp"
#include "wronski/groebner.hpp"

using namespace wronski;

namespace {

GPoly gp(const MPoly& p, int nv) { return to_gpoly(p, nv); }

std::vector<GPoly> fibre_ideal(const Partition& l, const QPoly& g) {
  auto sys = WronskiSystem::get(l);
  std::vector<GPoly> gens;
  for (int k = 0; k < l.size(); ++k) gens.push_back(gp(sys->coefficients()[static_cast<std::size_t>(k)] - MPoly(g.coeff(k)), l.size()));
  return gens;
}

}  // namespace

TEST_CASE("grevlex order") {
  auto x = Monomial::var(0), y = Monomial::var(1), z = Monomial::var(2);
  CHECK(grevlex_greater(x * x, x * y, 3));
  CHECK(grevlex_greater(x * y, y * y, 3));
  CHECK(grevlex_greater(y * y, x * z, 3));
  CHECK(grevlex_greater(x, y, 3));
  CHECK(grevlex_greater(x * z, y, 3));
  CHECK_FALSE(grevlex_greater(x, x, 3));
}

TEST_CASE("groebner basis of a two-variable system") {
  // x^2 - 2, y - x: quotient of dimension 2 with minimal polynomial t^2 - 2.
  MPoly x = MPoly::var(0), y = MPoly::var(1);
  GroebnerStats stats;
  auto gb = groebner_basis({gp(x * x - MPoly(2), 2), gp(y - x, 2)}, 2, &stats);
  QuotientAlgebra qa(gb, 2);
  CHECK(qa.dimension() == 2);
  auto sl = shape_lemma(qa, 1);
  CHECK(sl.eliminant == QPoly({Rational(-2), Rational(0), Rational(1)}));
  CHECK(sl.coordinates[0] == QPoly::z());
  CHECK(sl.coordinates[1] == QPoly::z());
  CHECK(normal_form(gp(x * x * y - MPoly(2) * y, 2), gb, 2).empty());
  CHECK_THROWS(QuotientAlgebra(groebner_basis({gp(x * y, 2)}, 2), 2));
  CHECK_THROWS(QuotientAlgebra(groebner_basis({gp(x - MPoly(1), 2), gp(x, 2)}, 2), 2));
}

TEST_CASE("non-cyclic quotient is rejected") {
  // (x^2, y^2, xy) has no cyclic linear form.
  MPoly x = MPoly::var(0), y = MPoly::var(1);
  auto gb = groebner_basis({gp(x * x, 2), gp(y * y, 2), gp(x * y, 2)}, 2);
  QuotientAlgebra qa(gb, 2);
  CHECK(qa.dimension() == 3);
  CHECK_THROWS(shape_lemma(qa, 3, 4));
}

TEST_CASE("Wronski fibres through a planted rational point") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& l : partitions_of(n)) {
      for (int trial = 0; trial < 2; ++trial) {
        QPoint x(l);
        for (auto& c : x.coords) {
          c = Rational(num(rng), den(rng));
          c.canonicalize();
        }
        QPoly g = wronski_affine(x);
        auto gb = groebner_basis(fibre_ideal(l, g), n);
        QuotientAlgebra qa(gb, n);
        CHECK(qa.dimension() == syt_count(l));
        for (const auto& gen : fibre_ideal(l, g)) CHECK(normal_form(gen, gb, n).empty());
        ShapeLemma sl = shape_lemma(qa, 5);
        Rational t = 0;
        for (int v = 0; v < n; ++v) t += sl.weights[static_cast<std::size_t>(v)] * x.coords[static_cast<std::size_t>(v)];
        CHECK(sl.eliminant(t) == 0);
        CHECK(sl.eliminant.degree() == qa.dimension());
        bool simple = discriminant(sl.eliminant) != 0;
        if (simple)
          for (int v = 0; v < n; ++v) CHECK(sl.coordinates[static_cast<std::size_t>(v)](t) == x.coords[static_cast<std::size_t>(v)]);
      }
    }
  }
}
