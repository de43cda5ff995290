#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wronski/combi.hpp"
#include "wronski/rational.hpp"

namespace wronski {

// Dense univariate polynomial, coefficient k multiplies z^k.
// S needs ring operations, construction from int, and is_zero(S).
template <class S>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(S c) { return UniPoly(std::vector<S>{std::move(c)}); }
  static UniPoly monomial(S c, int k) {
    std::vector<S> v(static_cast<std::size_t>(k + 1), S(0));
    v.back() = std::move(c);
    return UniPoly(std::move(v));
  }
  static UniPoly z() { return monomial(S(1), 1); }
  // Product of (z + a) over the given values.
  static UniPoly from_negated_roots(std::span<const S> a) {
    UniPoly p = constant(S(1));
    for (const S& x : a) p = p * UniPoly(std::vector<S>{x, S(1)});
    return p;
  }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool zero() const noexcept { return c_.empty(); }
  const std::vector<S>& coeffs() const noexcept { return c_; }
  S coeff(int k) const {
    if (k < 0 || k > degree()) return S(0);
    return c_[static_cast<std::size_t>(k)];
  }
  const S& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }

  template <class T>
  T eval(const T& x) const {
    T acc = T(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }
  S operator()(const S& x) const { return eval<S>(x); }

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<S> d(c_.size() - 1, S(0));
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = S(static_cast<int>(k)) * c_[k];
    return UniPoly(std::move(d));
  }
  UniPoly derivative(int times) const {
    UniPoly p = *this;
    for (int i = 0; i < times; ++i) p = p.derivative();
    return p;
  }

  UniPoly monic() const {
    S lc = leading();
    std::vector<S> v = c_;
    for (S& x : v) x = x / lc;
    return UniPoly(std::move(v));
  }

  // Euclidean division over a field.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    if (d.zero()) throw std::domain_error("polynomial division by zero");
    if (degree() < d.degree()) return {UniPoly{}, *this};
    std::vector<S> r = c_;
    std::vector<S> q(static_cast<std::size_t>(degree() - d.degree() + 1), S(0));
    const S& lc = d.leading();
    for (int k = degree() - d.degree(); k >= 0; --k) {
      S f = r[static_cast<std::size_t>(k + d.degree())] / lc;
      q[static_cast<std::size_t>(k)] = f;
      for (int j = 0; j <= d.degree(); ++j)
        r[static_cast<std::size_t>(k + j)] = r[static_cast<std::size_t>(k + j)] - f * d.c_[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(d.degree()));
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] + o.c_[k];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] - o.c_[k];
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(const UniPoly& a) { return UniPoly{} - a; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.zero() || b.zero()) return {};
    std::vector<S> r(a.c_.size() + b.c_.size() - 1, S(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const S& s, const UniPoly& a) {
    std::vector<S> r = a.c_;
    for (S& x : r) x = s * x;
    return UniPoly(std::move(r));
  }
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<S> c_;
};

using QPoly = UniPoly<Rational>;
using CPoly = UniPoly<Complex>;

CPoly to_complex(const QPoly& p);

// Determinant of the matrix whose row k holds the k-th derivatives, by cofactor expansion
// memoized over column subsets.
template <class S>
UniPoly<S> wronskian(std::span<const UniPoly<S>> fs) {
  const int d = static_cast<int>(fs.size());
  if (d == 0) throw std::invalid_argument("wronskian of an empty family");
  if (d > 20) throw std::invalid_argument("wronskian: too many polynomials");
  std::vector<std::vector<UniPoly<S>>> deriv(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    auto& col = deriv[static_cast<std::size_t>(i)];
    col.push_back(fs[static_cast<std::size_t>(i)]);
    for (int k = 1; k < d; ++k) col.push_back(col.back().derivative());
  }
  std::unordered_map<std::uint32_t, UniPoly<S>> memo;
  auto rec = [&](auto&& self, int k, std::uint32_t cols) -> UniPoly<S> {
    if (k == d) return UniPoly<S>::constant(S(1));
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    UniPoly<S> total;
    int pos = 0;
    for (int j = 0; j < d; ++j) {
      if (!(cols & (1U << j))) continue;
      const UniPoly<S>& entry = deriv[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      if (!entry.zero()) {
        UniPoly<S> term = entry * self(self, k + 1, cols & ~(1U << j));
        if (pos % 2 == 0) total += term;
        else total -= term;
      }
      ++pos;
    }
    memo.emplace(cols, total);
    return total;
  };
  return rec(rec, 0, (d == 32 ? 0U : (1U << d)) - 1U);
}

template <class S>
UniPoly<S> wronskian(const std::vector<UniPoly<S>>& fs) {
  return wronskian(std::span<const UniPoly<S>>(fs));
}

// Fraction-free Gaussian elimination.
Rational bareiss_det(std::vector<std::vector<Rational>> m);
Complex lu_det(const std::vector<std::vector<Complex>>& m);

// Sylvester resultant.
Rational resultant(const QPoly& f, const QPoly& g);
Rational discriminant(const QPoly& g);
Complex discriminant(const CPoly& g);

QPoly gcd(const QPoly& a, const QPoly& b);
// Yun's algorithm: pairs (monic square-free factor, multiplicity), trivial factors omitted.
std::vector<std::pair<QPoly, int>> squarefree_factorization(const QPoly& p);
// Number of distinct real roots by a Sturm sequence.
int count_real_roots(const QPoly& p);
// Distinct real roots in the half-open interval (a, b].
int count_real_roots(const QPoly& p, const Rational& a, const Rational& b);

struct RootOptions {
  double residual_tol = 1e-12;
  double realness_tol = 1e-8;
  int max_iterations = 500;
};

// All roots with multiplicity (Aberth-Ehrlich, then Newton polishing).
// Real-coefficient input yields conjugate-symmetric output, sorted by (re, im).
std::vector<Complex> roots(const CPoly& g, const RootOptions& opt = {});
std::vector<Complex> roots(const QPoly& g, const RootOptions& opt = {});

struct RootPattern {
  // 2^{n2} 1^{n1}, empty when boundary is set.
  Partition mu;
  int n1 = 0;
  int n2 = 0;
  std::vector<double> real_roots;
  // One representative (positive imaginary part) per conjugate pair.
  std::vector<Complex> pair_roots;
  bool boundary = false;
};

RootPattern classify_pattern(const CPoly& g, double tol = 1e-8);
// Exact classification: boundary iff the discriminant vanishes, n1 certified by Sturm.
RootPattern classify_pattern(const QPoly& g, double tol = 1e-8);

std::string to_string(const QPoly& p);

}  // namespace wronski
