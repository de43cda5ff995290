#pragma once

#include <Eigen/Dense>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wronski/combi.hpp"
#include "wronski/mpoly.hpp"
#include "wronski/poly.hpp"

namespace wronski {

// A point of the Schubert cell X^lambda: one coordinate per cell, stored in row-reading order.
template <class S>
struct CellPoint {
  Partition lambda;
  std::vector<S> coords;

  CellPoint() = default;
  explicit CellPoint(Partition l) : lambda(std::move(l)), coords(static_cast<std::size_t>(lambda.size()), S(0)) {}
  CellPoint(Partition l, std::vector<S> c) : lambda(std::move(l)), coords(std::move(c)) {
    if (static_cast<int>(coords.size()) != lambda.size()) throw std::invalid_argument("one coordinate per cell required");
  }

  S& at(Cell c) { return coords.at(static_cast<std::size_t>(lambda.cell_index(c))); }
  const S& at(Cell c) const { return coords.at(static_cast<std::size_t>(lambda.cell_index(c))); }
};

using QPoint = CellPoint<Rational>;
using CPoint = CellPoint<Complex>;

CPoint to_complex(const QPoint& x);

// Degree of the i-th basis polynomial, lambda_i + d - i.
int basis_degree(const Partition& lambda, int i);
// Exponent attached to coordinate x_ij, j - lambda'_j + d - 1.
int coord_exponent(const Partition& lambda, Cell c);
// Sign (-1)^{i + lambda'_j} attached to x_ij.
int coord_sign(const Partition& lambda, Cell c);

template <class S>
std::vector<UniPoly<S>> basis_polys(const CellPoint<S>& x) {
  const Partition& l = x.lambda;
  const int d = l.length();
  std::vector<UniPoly<S>> fs;
  for (int i = 1; i <= d; ++i) {
    int deg = basis_degree(l, i);
    UniPoly<S> f = UniPoly<S>::monomial(from_rational<S>(Rational(1) / Rational(factorial(static_cast<unsigned>(deg)))), deg);
    for (int j = 1; j <= l.row(i); ++j) {
      Cell c{i, j};
      int e = coord_exponent(l, c);
      Rational w = Rational(coord_sign(l, c)) / Rational(factorial(static_cast<unsigned>(e)));
      f += UniPoly<S>::monomial(from_rational<S>(w) * x.at(c), e);
    }
    fs.push_back(std::move(f));
  }
  return fs;
}

// Reads affine coordinates off any basis of a space in the cell. Throws if the span is not in X^lambda.
QPoint cell_point_from_basis(const Partition& lambda, std::vector<QPoly> basis);
CPoint cell_point_from_basis(const Partition& lambda, std::vector<CPoly> basis);

template <class S>
struct PlueckerVector {
  Partition lambda;
  // Indexed like subpartitions(lambda).
  std::vector<Partition> keys;
  std::vector<S> values;

  S value(const Partition& kappa) const {
    for (std::size_t k = 0; k < keys.size(); ++k)
      if (keys[k] == kappa) return values[k];
    return S(0);
  }
};

PlueckerVector<Rational> pluecker(const QPoint& x);
PlueckerVector<Complex> pluecker(const CPoint& x);

// Monic Wronskian of basis_polys(x).
QPoly wronski_affine(const QPoint& x);
CPoly wronski_affine(const CPoint& x);
// Monic Wronskian assembled from Pluecker coordinates and SYT counts.
QPoly wronski_pluecker(const QPoint& x);
CPoly wronski_pluecker(const CPoint& x);

// Symbolic Wronski map on X^lambda: coefficient l of the monic Wronskian as a polynomial in the
// coordinates (row-reading variable order), with all first partials.
class WronskiSystem {
 public:
  static std::shared_ptr<const WronskiSystem> get(const Partition& lambda);
  explicit WronskiSystem(const Partition& lambda);

  const Partition& lambda() const noexcept { return lambda_; }
  int n() const noexcept { return lambda_.size(); }
  const std::vector<MPoly>& coefficients() const noexcept { return coeffs_; }
  const MPoly& partial(int l, int var) const { return partials_.at(static_cast<std::size_t>(l * n() + var)); }

  // Non-leading coefficients of the monic Wronskian.
  Eigen::VectorXcd evaluate(const Eigen::VectorXcd& x) const;
  Eigen::MatrixXcd jacobian(const Eigen::VectorXcd& x) const;
  void evaluate_with_jacobian(const Eigen::VectorXcd& x, Eigen::VectorXcd& values, Eigen::MatrixXcd& jac) const;
  std::vector<std::vector<Rational>> jacobian(const QPoint& x) const;
  // Per coefficient, the sum of absolute monomial values at |x|.
  Eigen::VectorXd magnitudes(const Eigen::VectorXcd& x) const;

 private:
  Partition lambda_;
  std::vector<MPoly> coeffs_;
  std::vector<MPoly> partials_;
  std::vector<CompiledPoly> compiled_coeffs_;
  std::vector<CompiledPoly> compiled_partials_;
};

Rational jacobian_det(const QPoint& x);
Complex jacobian_det(const CPoint& x);

struct VanishingResult {
  Partition kappa;
  std::vector<int> orders;
  bool ambiguous = false;
};

// Vanishing orders of span(basis_polys(x)) at z = -a.
VanishingResult vanishing_partition(const QPoint& x, const Rational& a);
VanishingResult vanishing_partition(const CPoint& x, Complex a, double tol = 1e-8);
// Same, for an arbitrary spanning family.
VanishingResult vanishing_partition(const std::vector<QPoly>& basis, const Rational& a);
VanishingResult vanishing_partition(const std::vector<CPoly>& basis, Complex a, double tol = 1e-8);

enum class CrossingKind { Horizontal, Vertical, Ramification };
std::string to_string(CrossingKind k);

struct TwoClassification {
  CrossingKind kind = CrossingKind::Horizontal;
  // Ratio of the two competing rank-deficiency singular values; near zero when the call is clear.
  double margin = 0;
  bool ambiguous = false;
};

// Horizontal for vanishing partition (2), Vertical for (1,1).
CrossingKind classify_two(const QPoint& x, const Rational& a);
TwoClassification classify_two(const CPoint& x, Complex a, double tol = 1e-6);

template <class S>
CellPoint<S> dualize(const CellPoint<S>& x) {
  CellPoint<S> y(x.lambda.conjugate());
  for (Cell c : x.lambda.cells()) y.at(Cell{c.col, c.row}) = x.at(c);
  return y;
}

}  // namespace wronski
