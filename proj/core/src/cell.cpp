#include "wronski/cell.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <map>
#include <mutex>

namespace wronski {

CPoint to_complex(const QPoint& x) {
  CPoint y(x.lambda);
  for (std::size_t k = 0; k < x.coords.size(); ++k) y.coords[k] = Complex(x.coords[k].get_d(), 0.0);
  return y;
}

int basis_degree(const Partition& lambda, int i) { return lambda.row(i) + lambda.length() - i; }

int coord_exponent(const Partition& lambda, Cell c) { return c.col - lambda.col(c.col) + lambda.length() - 1; }

int coord_sign(const Partition& lambda, Cell c) { return (c.row + lambda.col(c.col)) % 2 == 0 ? 1 : -1; }

namespace {

double magnitude(const Rational& q) { return std::abs(q.get_d()); }
double magnitude(const Complex& c) { return std::abs(c); }

template <class S>
std::vector<std::vector<S>> coefficient_rows(const std::vector<UniPoly<S>>& basis, int width) {
  std::vector<std::vector<S>> rows;
  for (const auto& f : basis) {
    std::vector<S> r(static_cast<std::size_t>(width), S(0));
    for (int k = 0; k <= f.degree() && k < width; ++k) r[static_cast<std::size_t>(k)] = f.coeff(k);
    rows.push_back(std::move(r));
  }
  return rows;
}

// Reduced echelon form keyed on leading degrees; returns affine coordinates.
template <class S, class Negligible>
CellPoint<S> echelon_to_point(const Partition& lambda, const std::vector<UniPoly<S>>& basis, Negligible negligible) {
  const int d = lambda.length();
  if (static_cast<int>(basis.size()) != d) throw std::invalid_argument("basis size must equal the number of rows");
  if (d == 0) return CellPoint<S>(lambda);
  int width = 0;
  for (const auto& f : basis) width = std::max(width, f.degree() + 1);
  width = std::max(width, basis_degree(lambda, 1) + 1);
  auto rows = coefficient_rows(basis, width);
  std::vector<int> pivot(static_cast<std::size_t>(d), -1);
  std::vector<bool> used(static_cast<std::size_t>(d), false);
  for (int step = 0; step < d; ++step) {
    // Highest nonnegligible column among unused rows, largest entry wins.
    int best_row = -1;
    int best_col = -1;
    double best_mag = 0;
    for (int r = 0; r < d; ++r) {
      if (used[static_cast<std::size_t>(r)]) continue;
      const auto& row = rows[static_cast<std::size_t>(r)];
      double scale = 0;
      for (const auto& v : row) scale = std::max(scale, magnitude(v));
      for (int k = width - 1; k >= 0; --k) {
        if (negligible(row[static_cast<std::size_t>(k)], scale)) continue;
        double mag = magnitude(row[static_cast<std::size_t>(k)]) / scale;
        if (k > best_col || (k == best_col && mag > best_mag)) {
          best_row = r;
          best_col = k;
          best_mag = mag;
        }
        break;
      }
    }
    if (best_row < 0) throw std::invalid_argument("basis is linearly dependent");
    used[static_cast<std::size_t>(best_row)] = true;
    pivot[static_cast<std::size_t>(best_row)] = best_col;
    auto& prow = rows[static_cast<std::size_t>(best_row)];
    S lead = prow[static_cast<std::size_t>(best_col)];
    for (auto& v : prow) v = v / lead;
    for (int r = 0; r < d; ++r) {
      if (r == best_row) continue;
      auto& row = rows[static_cast<std::size_t>(r)];
      S f = row[static_cast<std::size_t>(best_col)];
      if (is_zero(f)) continue;
      for (int k = 0; k < width; ++k) row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k)] - f * prow[static_cast<std::size_t>(k)];
      row[static_cast<std::size_t>(best_col)] = S(0);
    }
  }
  CellPoint<S> x(lambda);
  for (int i = 1; i <= d; ++i) {
    int deg = basis_degree(lambda, i);
    auto it = std::find(pivot.begin(), pivot.end(), deg);
    if (it == pivot.end()) throw std::invalid_argument("span does not lie in the Schubert cell");
    const auto& row = rows[static_cast<std::size_t>(it - pivot.begin())];
    Rational scale = Rational(1) / Rational(factorial(static_cast<unsigned>(deg)));
    for (int j = 1; j <= lambda.row(i); ++j) {
      Cell c{i, j};
      int e = coord_exponent(lambda, c);
      Rational w = Rational(factorial(static_cast<unsigned>(e))) * coord_sign(lambda, c) * scale;
      x.at(c) = from_rational<S>(w) * row[static_cast<std::size_t>(e)];
    }
  }
  return x;
}

}  // namespace

QPoint cell_point_from_basis(const Partition& lambda, std::vector<QPoly> basis) {
  return echelon_to_point<Rational>(lambda, basis, [](const Rational& v, double) { return sgn(v) == 0; });
}

CPoint cell_point_from_basis(const Partition& lambda, std::vector<CPoly> basis) {
  return echelon_to_point<Complex>(lambda, basis, [](const Complex& v, double scale) { return std::abs(v) <= 1e-13 * scale; });
}

namespace {

template <class S>
std::vector<std::vector<S>> pluecker_matrix(const CellPoint<S>& x) {
  const auto fs = basis_polys(x);
  const int d = x.lambda.length();
  const int m = x.lambda.row(1);
  std::vector<std::vector<S>> M(static_cast<std::size_t>(d), std::vector<S>(static_cast<std::size_t>(d + m), S(0)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d + m; ++j)
      M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          from_rational<S>(Rational(factorial(static_cast<unsigned>(j)))) * fs[static_cast<std::size_t>(i)].coeff(j);
  return M;
}

template <class S>
std::vector<std::vector<S>> minor_of(const std::vector<std::vector<S>>& M, const Partition& kappa, int d) {
  std::vector<std::vector<S>> sub(static_cast<std::size_t>(d), std::vector<S>(static_cast<std::size_t>(d)));
  for (int k = 1; k <= d; ++k) {
    int col = k + kappa.row(d + 1 - k) - 1;
    for (int i = 0; i < d; ++i) sub[static_cast<std::size_t>(i)][static_cast<std::size_t>(k - 1)] = M[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
  }
  return sub;
}

Rational det_of(std::vector<std::vector<Rational>> m) { return bareiss_det(std::move(m)); }
Complex det_of(const std::vector<std::vector<Complex>>& m) { return lu_det(m); }

template <class S>
PlueckerVector<S> pluecker_impl(const CellPoint<S>& x) {
  const int d = x.lambda.length();
  PlueckerVector<S> pv;
  pv.lambda = x.lambda;
  pv.keys = subpartitions(x.lambda);
  if (d == 0) {
    pv.values.assign(pv.keys.size(), S(1));
    return pv;
  }
  auto M = pluecker_matrix(x);
  S norm = det_of(minor_of(M, x.lambda, d));
  if (is_zero(norm)) throw std::logic_error("pluecker: vanishing normalizer");
  for (const auto& kappa : pv.keys) pv.values.push_back(S(det_of(minor_of(M, kappa, d)) / norm));
  return pv;
}

template <class S>
UniPoly<S> wronski_pluecker_impl(const CellPoint<S>& x) {
  const int n = x.lambda.size();
  auto pv = pluecker_impl(x);
  std::vector<S> c(static_cast<std::size_t>(n + 1), S(0));
  c[static_cast<std::size_t>(n)] = S(1);
  Rational scale = Rational(factorial(static_cast<unsigned>(n))) / Rational(syt_count(x.lambda));
  for (std::size_t k = 0; k < pv.keys.size(); ++k) {
    const Partition& kappa = pv.keys[k];
    int l = kappa.size();
    if (l >= n) continue;
    Rational w = scale * Rational(syt_count(kappa)) / Rational(factorial(static_cast<unsigned>(l)));
    c[static_cast<std::size_t>(l)] = c[static_cast<std::size_t>(l)] + from_rational<S>(w) * pv.values[k];
  }
  return UniPoly<S>(std::move(c));
}

template <class S>
UniPoly<S> wronski_affine_impl(const CellPoint<S>& x) {
  if (x.lambda.empty()) return UniPoly<S>::constant(S(1));
  auto w = wronskian(basis_polys(x));
  if (w.degree() != x.lambda.size()) throw std::logic_error("wronski_affine: unexpected degree");
  return w.monic();
}

}  // namespace

PlueckerVector<Rational> pluecker(const QPoint& x) { return pluecker_impl(x); }
PlueckerVector<Complex> pluecker(const CPoint& x) { return pluecker_impl(x); }
QPoly wronski_affine(const QPoint& x) { return wronski_affine_impl(x); }
CPoly wronski_affine(const CPoint& x) { return wronski_affine_impl(x); }
QPoly wronski_pluecker(const QPoint& x) { return wronski_pluecker_impl(x); }
CPoly wronski_pluecker(const CPoint& x) { return wronski_pluecker_impl(x); }

// ---- WronskiSystem ----

WronskiSystem::WronskiSystem(const Partition& lambda) : lambda_(lambda) {
  const int nv = lambda.size();
  if (nv > kMaxVars) throw std::invalid_argument("WronskiSystem: too many coordinates");
  CellPoint<MPoly> x(lambda);
  for (int k = 0; k < nv; ++k) x.coords[static_cast<std::size_t>(k)] = MPoly::var(k);
  UniPoly<MPoly> w = lambda.empty() ? UniPoly<MPoly>::constant(MPoly(1)) : wronskian(basis_polys(x));
  if (w.degree() != nv || !w.leading().constant()) throw std::logic_error("WronskiSystem: unexpected leading term");
  MPoly lead = w.leading();
  for (int l = 0; l < nv; ++l) coeffs_.push_back(w.coeff(l) / lead);
  for (int l = 0; l < nv; ++l)
    for (int v = 0; v < nv; ++v) partials_.push_back(coeffs_[static_cast<std::size_t>(l)].partial(v));
  for (const auto& c : coeffs_) compiled_coeffs_.emplace_back(c);
  for (const auto& p : partials_) compiled_partials_.emplace_back(p);
}

std::shared_ptr<const WronskiSystem> WronskiSystem::get(const Partition& lambda) {
  static std::mutex mutex;
  static std::map<Partition, std::shared_ptr<const WronskiSystem>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(lambda); it != cache.end()) return it->second;
  }
  auto sys = std::make_shared<const WronskiSystem>(lambda);
  std::lock_guard lock(mutex);
  return cache.emplace(lambda, sys).first->second;
}

namespace {

std::vector<std::vector<Complex>> power_table(const Eigen::VectorXcd& x, int maxdeg) {
  std::vector<std::vector<Complex>> p(static_cast<std::size_t>(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    auto& row = p[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(maxdeg + 1));
    row[0] = 1;
    for (int k = 1; k <= maxdeg; ++k) row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k - 1)] * x(i);
  }
  return p;
}

}  // namespace

Eigen::VectorXcd WronskiSystem::evaluate(const Eigen::VectorXcd& x) const {
  auto pw = power_table(x, n());
  Eigen::VectorXcd v(n());
  for (int l = 0; l < n(); ++l) v(l) = compiled_coeffs_[static_cast<std::size_t>(l)].eval(pw);
  return v;
}

Eigen::MatrixXcd WronskiSystem::jacobian(const Eigen::VectorXcd& x) const {
  auto pw = power_table(x, n());
  Eigen::MatrixXcd j(n(), n());
  for (int l = 0; l < n(); ++l)
    for (int v = 0; v < n(); ++v) j(l, v) = compiled_partials_[static_cast<std::size_t>(l * n() + v)].eval(pw);
  return j;
}

void WronskiSystem::evaluate_with_jacobian(const Eigen::VectorXcd& x, Eigen::VectorXcd& values, Eigen::MatrixXcd& jac) const {
  auto pw = power_table(x, n());
  values.resize(n());
  jac.resize(n(), n());
  for (int l = 0; l < n(); ++l) {
    values(l) = compiled_coeffs_[static_cast<std::size_t>(l)].eval(pw);
    for (int v = 0; v < n(); ++v) jac(l, v) = compiled_partials_[static_cast<std::size_t>(l * n() + v)].eval(pw);
  }
}

Eigen::VectorXd WronskiSystem::magnitudes(const Eigen::VectorXcd& x) const {
  std::vector<std::vector<double>> pw(static_cast<std::size_t>(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    auto& row = pw[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(n() + 1));
    row[0] = 1;
    for (int k = 1; k <= n(); ++k) row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k - 1)] * std::abs(x(i));
  }
  Eigen::VectorXd v(n());
  for (int l = 0; l < n(); ++l) v(l) = compiled_coeffs_[static_cast<std::size_t>(l)].eval_abs(pw);
  return v;
}

std::vector<std::vector<Rational>> WronskiSystem::jacobian(const QPoint& x) const {
  std::vector<std::vector<Rational>> j(static_cast<std::size_t>(n()), std::vector<Rational>(static_cast<std::size_t>(n())));
  std::span<const Rational> xs(x.coords);
  for (int l = 0; l < n(); ++l)
    for (int v = 0; v < n(); ++v) j[static_cast<std::size_t>(l)][static_cast<std::size_t>(v)] = partial(l, v).eval(xs);
  return j;
}

Rational jacobian_det(const QPoint& x) {
  if (x.lambda.empty()) return 1;
  return bareiss_det(WronskiSystem::get(x.lambda)->jacobian(x));
}

Complex jacobian_det(const CPoint& x) {
  if (x.lambda.empty()) return 1;
  Eigen::Map<const Eigen::VectorXcd> v(x.coords.data(), static_cast<Eigen::Index>(x.coords.size()));
  return WronskiSystem::get(x.lambda)->jacobian(Eigen::VectorXcd(v)).determinant();
}

// ---- vanishing orders ----

namespace {

// Coefficients of f(w - a) in powers of w.
template <class S>
std::vector<S> taylor_at(const UniPoly<S>& f, const S& a) {
  std::vector<S> c = f.coeffs();
  const int n = static_cast<int>(c.size());
  S shift = S(0) - a;
  for (int i = 0; i < n; ++i)
    for (int k = n - 2; k >= i; --k) c[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k)] + shift * c[static_cast<std::size_t>(k + 1)];
  return c;
}

Partition partition_from_orders(const std::vector<int>& orders) {
  const int d = static_cast<int>(orders.size());
  std::vector<int> parts(static_cast<std::size_t>(d));
  for (int i = 1; i <= d; ++i) parts[static_cast<std::size_t>(d - i)] = orders[static_cast<std::size_t>(i - 1)] - (i - 1);
  return Partition(parts);
}

template <class S>
Eigen::MatrixXcd taylor_matrix(const std::vector<UniPoly<S>>& basis, const S& a, int width) {
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(basis.size()), width);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto c = taylor_at(basis[i], a);
    for (int k = 0; k < width && k < static_cast<int>(c.size()); ++k) {
      if constexpr (std::is_same_v<S, Complex>) t(static_cast<Eigen::Index>(i), k) = c[static_cast<std::size_t>(k)];
      else t(static_cast<Eigen::Index>(i), k) = Complex(c[static_cast<std::size_t>(k)].get_d(), 0.0);
    }
  }
  return t;
}

}  // namespace

VanishingResult vanishing_partition(const std::vector<QPoly>& basis, const Rational& a) {
  // Lowest-order echelon form: the set of orders of vanishing of the span.
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : basis) rows.push_back(taylor_at(f, a));
  std::vector<int> orders;
  std::vector<bool> used(rows.size(), false);
  for (std::size_t step = 0; step < rows.size(); ++step) {
    int best = -1;
    int best_order = 1 << 30;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r]) continue;
      for (std::size_t k = 0; k < rows[r].size(); ++k)
        if (sgn(rows[r][k]) != 0) {
          if (static_cast<int>(k) < best_order) {
            best_order = static_cast<int>(k);
            best = static_cast<int>(r);
          }
          break;
        }
    }
    if (best < 0) throw std::invalid_argument("vanishing_partition: dependent basis");
    used[static_cast<std::size_t>(best)] = true;
    orders.push_back(best_order);
    const auto& prow = rows[static_cast<std::size_t>(best)];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r] || static_cast<int>(rows[r].size()) <= best_order) continue;
      Rational f = rows[r][static_cast<std::size_t>(best_order)] / prow[static_cast<std::size_t>(best_order)];
      if (sgn(f) == 0) continue;
      rows[r].resize(std::max(rows[r].size(), prow.size()), Rational(0));
      for (std::size_t k = 0; k < prow.size(); ++k) rows[r][k] -= f * prow[k];
    }
  }
  std::sort(orders.begin(), orders.end());
  return {partition_from_orders(orders), orders, false};
}

VanishingResult vanishing_partition(const std::vector<CPoly>& basis, Complex a, double tol) {
  const int d = static_cast<int>(basis.size());
  int width = 0;
  for (const auto& f : basis) width = std::max(width, f.degree() + 1);
  Eigen::MatrixXcd t = taylor_matrix(basis, a, width);
  // Column-by-column rank increase via Gram-Schmidt on normalized columns.
  std::vector<Eigen::VectorXcd> q;
  VanishingResult res;
  for (int k = 0; k < width && static_cast<int>(q.size()) < d; ++k) {
    Eigen::VectorXcd col = t.col(k);
    double norm = col.norm();
    if (norm == 0) continue;
    col /= norm;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& v : q) col -= v * v.dot(col);
    double resid = col.norm();
    if (resid > tol * 1e-2 && resid < tol * 1e2) res.ambiguous = true;
    if (resid > tol) {
      q.push_back(col / resid);
      res.orders.push_back(k);
    }
  }
  if (static_cast<int>(res.orders.size()) != d) throw std::invalid_argument("vanishing_partition: dependent basis");
  res.kappa = partition_from_orders(res.orders);
  return res;
}

VanishingResult vanishing_partition(const QPoint& x, const Rational& a) { return vanishing_partition(basis_polys(x), a); }

VanishingResult vanishing_partition(const CPoint& x, Complex a, double tol) { return vanishing_partition(basis_polys(x), a, tol); }

std::string to_string(CrossingKind k) {
  switch (k) {
    case CrossingKind::Horizontal: return "horizontal";
    case CrossingKind::Vertical: return "vertical";
    case CrossingKind::Ramification: return "ramification";
  }
  return "?";
}

CrossingKind classify_two(const QPoint& x, const Rational& a) {
  auto v = vanishing_partition(x, a);
  if (v.kappa == Partition({2})) return CrossingKind::Horizontal;
  if (v.kappa == Partition({1, 1})) return CrossingKind::Vertical;
  throw std::invalid_argument("classify_two: vanishing partition " + v.kappa.str() + " has size != 2");
}

TwoClassification classify_two(const CPoint& x, Complex a, double tol) {
  const int d = x.lambda.length();
  TwoClassification out;
  if (d <= 1) {
    out.kind = CrossingKind::Horizontal;
    out.margin = 0;
    return out;
  }
  auto basis = basis_polys(x);
  // Local length scale: distance from -a to the nearest other root of the Wronskian.
  double scale = 0;
  for (Complex r : roots(wronski_affine(x))) {
    double dist = std::abs(r + a);
    if (dist > 1e-6 * std::max(std::abs(a), 1.0) && (scale == 0 || dist < scale)) scale = dist;
  }
  if (scale == 0) scale = std::max(std::abs(a), 1.0);
  int width = 0;
  for (const auto& f : basis) width = std::max(width, f.degree() + 1);
  Eigen::MatrixXcd t = taylor_matrix(basis, a, width);
  double pw = 1;
  for (int k = 0; k < width; ++k, pw *= scale) t.col(k) *= pw;
  // Orthonormal rows spanning the same space make the singular values basis independent.
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(t.adjoint());
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(width, d);
  Eigen::MatrixXcd rows = q.adjoint();
  Eigen::JacobiSVD<Eigen::MatrixXcd> low(rows.leftCols(d - 1));
  Eigen::JacobiSVD<Eigen::MatrixXcd> high(rows.leftCols(std::min(d + 1, width)));
  double sv_low = low.singularValues()(d - 2);
  double sv_high = high.singularValues().size() >= d ? high.singularValues()(d - 1) : 0.0;
  out.kind = sv_low < sv_high ? CrossingKind::Vertical : CrossingKind::Horizontal;
  double hi = std::max(sv_low, sv_high);
  out.margin = hi > 0 ? std::min(sv_low, sv_high) / hi : 1.0;
  out.ambiguous = out.margin > tol;
  return out;
}

}  // namespace wronski
