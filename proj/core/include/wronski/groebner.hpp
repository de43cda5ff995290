#pragma once

#include <cstdint>
#include <vector>

#include "wronski/mpoly.hpp"
#include "wronski/poly.hpp"

namespace wronski {

struct GTerm {
  Monomial m;
  Rational c;
};

// Terms sorted by decreasing graded reverse lexicographic order.
using GPoly = std::vector<GTerm>;

bool grevlex_greater(const Monomial& a, const Monomial& b, int nvars);
GPoly to_gpoly(const MPoly& p, int nvars);

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

// Reduced grevlex basis (monic).
std::vector<GPoly> groebner_basis(std::vector<GPoly> generators, int nvars, GroebnerStats* stats = nullptr);
GPoly normal_form(GPoly p, const std::vector<GPoly>& basis, int nvars);

// Finite-dimensional quotient algebra Q[x]/I for a zero-dimensional ideal.
class QuotientAlgebra {
 public:
  QuotientAlgebra(std::vector<GPoly> basis, int nvars);

  int nvars() const noexcept { return nvars_; }
  int dimension() const noexcept { return static_cast<int>(normal_set_.size()); }
  const std::vector<Monomial>& normal_set() const noexcept { return normal_set_; }
  // Coordinates of NF(p) in the normal set.
  std::vector<Rational> coordinates(const GPoly& p) const;
  // Column j holds NF(x_var * b_j).
  const std::vector<std::vector<Rational>>& multiplication(int var) const { return mult_.at(static_cast<std::size_t>(var)); }

 private:
  std::vector<GPoly> basis_;
  int nvars_;
  std::vector<Monomial> normal_set_;
  std::vector<std::vector<std::vector<Rational>>> mult_;
};

// Shape-position data for a linear form t = sum w_i x_i: the minimal polynomial P of t
// (degree = dimension) and x_i = r_i(t) modulo P.
struct ShapeLemma {
  std::vector<Rational> weights;
  QPoly eliminant;
  std::vector<QPoly> coordinates;
};

// Tries the last variable, then seeded random forms; throws when no cyclic form is found.
ShapeLemma shape_lemma(const QuotientAlgebra& algebra, std::uint64_t seed, int attempts = 12);

}  // namespace wronski
