#include "wronski/poly.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wronski {

CPoly to_complex(const QPoly& p) {
  std::vector<Complex> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.emplace_back(q.get_d(), 0.0);
  return CPoly(std::move(c));
}

Rational bareiss_det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Rational prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m[p][k]) == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  Rational d = m[n - 1][n - 1];
  return sign > 0 ? d : Rational(-d);
}

Complex lu_det(const std::vector<std::vector<Complex>>& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  if (n == 0) return {1.0, 0.0};
  Eigen::MatrixXcd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return a.partialPivLu().determinant();
}

namespace {

template <class S>
std::vector<std::vector<S>> sylvester(const UniPoly<S>& f, const UniPoly<S>& g) {
  const int m = f.degree();
  const int n = g.degree();
  const auto size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<S>> s(size, std::vector<S>(size, S(0)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] = f.coeff(m - k);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + k)] = g.coeff(n - k);
  return s;
}

template <class S>
S disc_sign(int n) {
  return ((n * (n - 1) / 2) % 2 == 0) ? S(1) : S(-1);
}

}  // namespace

Rational resultant(const QPoly& f, const QPoly& g) {
  if (f.zero() || g.zero()) return 0;
  if (f.degree() == 0 && g.degree() == 0) return 1;
  return bareiss_det(sylvester(f, g));
}

Rational discriminant(const QPoly& g) {
  if (g.zero()) throw std::domain_error("discriminant of the zero polynomial");
  if (g.degree() < 1) throw std::domain_error("discriminant needs degree >= 1");
  if (g.degree() == 1) return 1;
  Rational r = resultant(g, g.derivative());
  return disc_sign<Rational>(g.degree()) * r / g.leading();
}

Complex discriminant(const CPoly& g) {
  if (g.zero()) throw std::domain_error("discriminant of the zero polynomial");
  if (g.degree() < 1) throw std::domain_error("discriminant needs degree >= 1");
  if (g.degree() == 1) return {1.0, 0.0};
  Complex r = lu_det(sylvester(g, g.derivative()));
  return disc_sign<Complex>(g.degree()) * r / g.leading();
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a;
  QPoly y = b;
  while (!y.zero()) {
    QPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.zero() ? x : x.monic();
}

std::vector<std::pair<QPoly, int>> squarefree_factorization(const QPoly& p) {
  std::vector<std::pair<QPoly, int>> out;
  if (p.degree() < 1) return out;
  QPoly f = p.monic();
  QPoly fp = f.derivative();
  QPoly a = gcd(f, fp);
  QPoly b = f.divmod(a).first;
  QPoly c = fp.divmod(a).first;
  QPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    QPoly ai = gcd(b, d);
    QPoly nb = b.divmod(ai).first;
    QPoly nc = d.divmod(ai).first;
    if (ai.degree() > 0) out.emplace_back(ai, i);
    b = std::move(nb);
    d = nc - b.derivative();
    ++i;
  }
  return out;
}

namespace {

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain{p, p.derivative()};
  while (!chain.back().zero()) {
    QPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int changes_at(const std::vector<QPoly>& chain, const Rational& x) {
  std::vector<int> s;
  for (const auto& q : chain) s.push_back(sgn(q(x)));
  return sign_changes(s);
}

int changes_at_infinity(const std::vector<QPoly>& chain, bool positive) {
  std::vector<int> s;
  for (const auto& q : chain) {
    int lc = sgn(q.leading());
    if (!positive && q.degree() % 2 == 1) lc = -lc;
    s.push_back(lc);
  }
  return sign_changes(s);
}

}  // namespace

int count_real_roots(const QPoly& p) {
  if (p.zero()) throw std::domain_error("real roots of the zero polynomial");
  if (p.degree() == 0) return 0;
  auto chain = sturm_chain(p);
  return changes_at_infinity(chain, false) - changes_at_infinity(chain, true);
}

int count_real_roots(const QPoly& p, const Rational& a, const Rational& b) {
  if (p.zero()) throw std::domain_error("real roots of the zero polynomial");
  if (p.degree() == 0) return 0;
  auto chain = sturm_chain(p);
  return changes_at(chain, a) - changes_at(chain, b);
}

namespace {

// Starting radii from the upper convex hull of (k, log|c_k|).
std::vector<Complex> initial_guesses(const std::vector<Complex>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<int> idx;
  std::vector<double> lg;
  for (int k = 0; k <= n; ++k)
    if (std::abs(c[static_cast<std::size_t>(k)]) > 0) {
      idx.push_back(k);
      lg.push_back(std::log(std::abs(c[static_cast<std::size_t>(k)])));
    }
  std::vector<int> hull;
  for (std::size_t t = 0; t < idx.size(); ++t) {
    while (hull.size() >= 2) {
      auto h1 = static_cast<std::size_t>(hull[hull.size() - 2]);
      auto h2 = static_cast<std::size_t>(hull[hull.size() - 1]);
      double cross = (idx[h2] - idx[h1]) * (lg[t] - lg[h1]) - (lg[h2] - lg[h1]) * (idx[t] - idx[h1]);
      if (cross >= 0) hull.pop_back();
      else break;
    }
    hull.push_back(static_cast<int>(t));
  }
  std::vector<Complex> z;
  const double offset = 0.7;
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    auto a = static_cast<std::size_t>(hull[h]);
    auto b = static_cast<std::size_t>(hull[h + 1]);
    int count = idx[b] - idx[a];
    double radius = std::exp((lg[a] - lg[b]) / count);
    for (int j = 0; j < count; ++j) {
      double theta = 2.0 * std::numbers::pi * j / count + 2.0 * std::numbers::pi * static_cast<double>(h + 1) / n + offset;
      z.push_back(std::polar(radius, theta));
    }
  }
  return z;
}

double eval_scale(const std::vector<Complex>& c, Complex x) {
  double s = 0;
  double ax = std::abs(x);
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * ax + std::abs(*it);
  return s;
}

void eval_with_derivative(const std::vector<Complex>& c, Complex x, Complex& p, Complex& dp) {
  p = 0;
  dp = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * x + p;
    p = p * x + *it;
  }
}

}  // namespace

std::vector<Complex> roots(const CPoly& g, const RootOptions& opt) {
  if (g.degree() < 1) throw std::domain_error("roots need degree >= 1");
  std::vector<Complex> c = g.coeffs();
  std::vector<Complex> out;
  std::size_t zeros = 0;
  while (zeros < c.size() && c[zeros] == Complex{}) ++zeros;
  out.assign(zeros, Complex{});
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));
  const int n = static_cast<int>(c.size()) - 1;
  const bool real_input = std::all_of(g.coeffs().begin(), g.coeffs().end(), [](Complex x) { return x.imag() == 0.0; });

  if (n >= 1) {
    std::vector<Complex> z = initial_guesses(c);
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    bool converged = false;
    for (int iter = 0; iter < opt.max_iterations && !converged; ++iter) {
      converged = true;
      for (int k = 0; k < n; ++k) {
        auto uk = static_cast<std::size_t>(k);
        if (done[uk]) continue;
        Complex p, dp;
        eval_with_derivative(c, z[uk], p, dp);
        if (std::abs(p) <= 1e-16 * eval_scale(c, z[uk])) {
          done[uk] = true;
          continue;
        }
        Complex ratio = p / dp;
        Complex sum = 0;
        for (int j = 0; j < n; ++j)
          if (j != k) sum += 1.0 / (z[uk] - z[static_cast<std::size_t>(j)]);
        Complex w = ratio / (1.0 - ratio * sum);
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
        z[uk] -= w;
        if (std::abs(w) > 1e-15 * std::max(std::abs(z[uk]), 1e-300)) converged = false;
        else done[uk] = true;
      }
    }
    // Newton polishing, keeping a step only when it lowers the residual.
    for (auto& r : z) {
      for (int it = 0; it < 8; ++it) {
        Complex p, dp;
        eval_with_derivative(c, r, p, dp);
        if (dp == Complex{}) break;
        Complex cand = r - p / dp;
        Complex pc, dpc;
        eval_with_derivative(c, cand, pc, dpc);
        if (std::abs(pc) < std::abs(p)) r = cand;
        else break;
      }
      Complex p, dp;
      eval_with_derivative(c, r, p, dp);
      if (!(std::abs(p) <= opt.residual_tol * eval_scale(c, r) * 1e3) && !converged)
        throw std::runtime_error("roots: Aberth iteration did not converge");
    }
    out.insert(out.end(), z.begin(), z.end());
  }

  if (real_input) {
    std::vector<Complex> reals, upper, lower;
    for (Complex r : out) {
      if (std::abs(r.imag()) <= opt.realness_tol * std::max(std::abs(r), 1e-300)) reals.emplace_back(r.real(), 0.0);
      else if (r.imag() > 0) upper.push_back(r);
      else lower.push_back(r);
    }
    if (upper.size() == lower.size()) {
      std::vector<bool> used(lower.size(), false);
      out = reals;
      for (Complex u : upper) {
        std::size_t best = 0;
        double bd = INFINITY;
        for (std::size_t j = 0; j < lower.size(); ++j) {
          if (used[j]) continue;
          double dist = std::abs(u - std::conj(lower[j]));
          if (dist < bd) {
            bd = dist;
            best = j;
          }
        }
        used[best] = true;
        Complex avg = 0.5 * (u + std::conj(lower[best]));
        out.push_back(avg);
        out.push_back(std::conj(avg));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

std::vector<Complex> roots(const QPoly& g, const RootOptions& opt) { return roots(to_complex(g), opt); }

namespace {

std::vector<int> two_one_parts(int n2, int n1) {
  std::vector<int> p(static_cast<std::size_t>(n2), 2);
  p.insert(p.end(), static_cast<std::size_t>(n1), 1);
  return p;
}

RootPattern pattern_from_roots(const std::vector<Complex>& rs, int degree, double tol) {
  RootPattern pat;
  for (Complex r : rs) {
    if (r.imag() == 0.0) pat.real_roots.push_back(r.real());
    else if (r.imag() > 0) pat.pair_roots.push_back(r);
    if (r.imag() != 0.0 && std::abs(r.imag()) <= 10 * tol * std::abs(r)) pat.boundary = true;
  }
  std::sort(pat.real_roots.begin(), pat.real_roots.end());
  for (std::size_t k = 1; k < pat.real_roots.size(); ++k) {
    double a = pat.real_roots[k - 1];
    double b = pat.real_roots[k];
    if (std::abs(b - a) <= tol * std::max({std::abs(a), std::abs(b), 1e-300})) pat.boundary = true;
  }
  pat.n1 = static_cast<int>(pat.real_roots.size());
  pat.n2 = static_cast<int>(pat.pair_roots.size());
  if (pat.n1 + 2 * pat.n2 != degree) pat.boundary = true;
  if (!pat.boundary) pat.mu = Partition(two_one_parts(pat.n2, pat.n1));
  return pat;
}

}  // namespace

RootPattern classify_pattern(const CPoly& g, double tol) {
  for (Complex c : g.coeffs())
    if (c.imag() != 0.0) throw std::invalid_argument("classify_pattern needs real coefficients");
  RootOptions opt;
  opt.realness_tol = tol;
  return pattern_from_roots(roots(g, opt), g.degree(), tol);
}

RootPattern classify_pattern(const QPoly& g, double tol) {
  RootOptions opt;
  opt.realness_tol = tol;
  RootPattern pat = pattern_from_roots(roots(g, opt), g.degree(), tol);
  // Exact override of the numerical decision.
  bool boundary = false;
  int n1 = 0;
  for (const auto& [factor, mult] : squarefree_factorization(g)) {
    int real = count_real_roots(factor);
    n1 += real;
    if (mult >= 2 && real > 0) boundary = true;
  }
  pat.boundary = boundary;
  if (boundary) return pat;
  if ((g.degree() - n1) % 2 != 0) throw std::logic_error("classify_pattern: inconsistent real root count");
  pat.n1 = n1;
  pat.n2 = (g.degree() - n1) / 2;
  pat.mu = Partition(two_one_parts(pat.n2, pat.n1));
  return pat;
}

std::string to_string(const QPoly& p) {
  std::string s = "[";
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (k) s += ", ";
    s += p.coeffs()[k].get_str();
  }
  return s + "]";
}

}  // namespace wronski
