#include "wronski/solve.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <limits>
#include <numbers>
#include <cmath>
#include <complex>
#include <numeric>

#include "wronski/groebner.hpp"

namespace wronski {

namespace {

using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

Vec to_vec(const CPoint& x) {
  Vec v(static_cast<Eigen::Index>(x.coords.size()));
  for (std::size_t i = 0; i < x.coords.size(); ++i) v(static_cast<Eigen::Index>(i)) = x.coords[i];
  return v;
}

CPoint from_vec(const Partition& l, const Vec& v) {
  std::vector<Complex> c(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) c[static_cast<std::size_t>(i)] = v(i);
  return CPoint(l, std::move(c));
}

void require_monic(const CPoly& g, int n) {
  if (g.degree() != n || std::abs(g.leading() - Complex(1)) > 1e-14) throw std::invalid_argument("target must be monic of degree n");
}

// Row- and column-equilibrated linearization of Wr(x) - g.
struct Linearization {
  Vec f;   // row-scaled residual
  Mat a;   // row- and column-scaled Jacobian
  Eigen::VectorXd rw;
  Eigen::VectorXd cw;
  double resid = 0;
};

// Target polynomial with the coefficients of prod (z + |a_k|) as natural coefficient sizes.
struct Target {
  CPoly g;
  Eigen::VectorXd size;
};

Target target_from_points(const std::vector<Complex>& a) {
  Target tg;
  tg.g = CPoly::from_negated_roots(std::span<const Complex>(a));
  std::vector<Complex> mags;
  for (const auto& ak : a) mags.emplace_back(std::abs(ak), 0.0);
  CPoly bound = CPoly::from_negated_roots(std::span<const Complex>(mags));
  tg.size.resize(static_cast<Eigen::Index>(a.size()));
  for (std::size_t l = 0; l < a.size(); ++l) tg.size(static_cast<Eigen::Index>(l)) = bound.coeff(static_cast<int>(l)).real();
  return tg;
}

Target target_of(const CPoly& g) {
  Target tg;
  tg.g = g;
  const int n = g.degree();
  tg.size = Eigen::VectorXd::Zero(std::max(n, 0));
  if (n <= 0) return tg;
  std::vector<Complex> a = roots(g);
  for (auto& r : a) r = -r;
  tg.size = target_from_points(a).size;
  for (int l = 0; l < n; ++l) tg.size(l) = std::max(tg.size(l), std::abs(g.coeff(l)));
  return tg;
}

Target path_target(const BasePath& path, double t) {
  Target tg = target_from_points(path.marked_points(t));
  tg.g = path.at(t);
  return tg;
}

Linearization linearize(const WronskiSystem& sys, const Vec& x, const Target& tg) {
  const CPoly& g = tg.g;
  const int n = sys.n();
  Linearization lin;
  Vec vals;
  Mat jac;
  sys.evaluate_with_jacobian(x, vals, jac);
  Eigen::VectorXd mags = sys.magnitudes(x);
  lin.rw.resize(n);
  lin.f.resize(n);
  for (int l = 0; l < n; ++l) {
    double scale = std::abs(g.coeff(l)) + mags(l) + tg.size(l);
    lin.rw(l) = scale > 0 ? 1.0 / scale : 1.0;
    lin.f(l) = (vals(l) - g.coeff(l)) * lin.rw(l);
    lin.resid = std::max(lin.resid, std::abs(lin.f(l)));
  }
  Mat rj = lin.rw.asDiagonal() * jac;
  lin.cw.resize(n);
  for (int v = 0; v < n; ++v) {
    double m = rj.col(v).cwiseAbs().maxCoeff();
    lin.cw(v) = m > 0 ? 1.0 / m : 1.0;
  }
  lin.a = rj * lin.cw.asDiagonal();
  return lin;
}

Vec newton_step(const Linearization& lin) {
  Vec y = lin.a.fullPivLu().solve(-lin.f);
  return lin.cw.cast<Complex>().cwiseProduct(y);
}

double rcond(const Mat& a) {
  if (a.size() == 0) return 1;
  Eigen::JacobiSVD<Mat> svd(a);
  const auto& s = svd.singularValues();
  return s(0) > 0 ? s(s.size() - 1) / s(0) : 0;
}

double coord_scale(const Vec& x) { return x.size() ? x.cwiseAbs().maxCoeff() : 0.0; }

bool is_real_point(const CPoint& x) {
  double scale = 0;
  for (const auto& c : x.coords) scale = std::max(scale, std::abs(c));
  for (const auto& c : x.coords)
    if (std::abs(c.imag()) > 1e-8 * std::abs(c) + 1e-13 * scale) return false;
  return true;
}

CPoint snap_real(CPoint x) {
  for (auto& c : x.coords) c = Complex(c.real(), 0);
  return x;
}

constexpr mp_bitcnt_t kMpBits = 1024;

struct MpComplex {
  mpf_class re{0, kMpBits};
  mpf_class im{0, kMpBits};
};

MpComplex mp_mul(const MpComplex& a, const MpComplex& b) {
  MpComplex c;
  c.re = a.re * b.re - a.im * b.im;
  c.im = a.re * b.im + a.im * b.re;
  return c;
}

// p(t) and p'(t) by Horner in multiprecision.
std::pair<MpComplex, MpComplex> mp_eval(const QPoly& p, const MpComplex& t) {
  MpComplex v;
  MpComplex d;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    d = mp_mul(d, t);
    d.re += v.re;
    d.im += v.im;
    v = mp_mul(v, t);
    v.re += mpf_class(*it, kMpBits);
  }
  return {v, d};
}

MpComplex mp_div(const MpComplex& a, const MpComplex& b) {
  mpf_class den = b.re * b.re + b.im * b.im;
  MpComplex c;
  c.re = (a.re * b.re + a.im * b.im) / den;
  c.im = (a.im * b.re - a.re * b.im) / den;
  return c;
}

// All roots of a squarefree polynomial by Aberth iteration in multiprecision, seeded with double roots.
std::vector<MpComplex> mp_roots(const QPoly& factor, const std::vector<Complex>& guesses) {
  const std::size_t d = guesses.size();
  std::vector<MpComplex> z(d);
  double scale = 1e-300;
  for (const auto& g : guesses) scale = std::max(scale, std::abs(g));
  for (std::size_t k = 0; k < d; ++k) {
    // Distinct seeds even when the double roots coincide.
    const double angle = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.25) / static_cast<double>(d);
    Complex seed = guesses[k] + 1e-10 * scale * Complex(std::cos(angle), std::sin(angle));
    z[k].re = seed.real();
    z[k].im = seed.imag();
  }
  const mpf_class tiny("1e-280", kMpBits);
  for (int it = 0; it < 500; ++it) {
    mpf_class worst(0, kMpBits);
    for (std::size_t k = 0; k < d; ++k) {
      auto [v, dv] = mp_eval(factor, z[k]);
      MpComplex ratio = mp_div(v, dv);
      MpComplex sum;
      for (std::size_t j = 0; j < d; ++j) {
        if (j == k) continue;
        MpComplex diff;
        diff.re = z[k].re - z[j].re;
        diff.im = z[k].im - z[j].im;
        MpComplex one;
        one.re = 1;
        MpComplex inv = mp_div(one, diff);
        sum.re += inv.re;
        sum.im += inv.im;
      }
      MpComplex den = mp_mul(ratio, sum);
      den.re = 1 - den.re;
      den.im = -den.im;
      MpComplex step = mp_div(ratio, den);
      z[k].re -= step.re;
      z[k].im -= step.im;
      mpf_class rel = (abs(step.re) + abs(step.im)) / (abs(z[k].re) + abs(z[k].im) + mpf_class(1e-300, kMpBits));
      if (rel > worst) worst = rel;
    }
    if (worst < tiny) break;
  }
  return z;
}

struct RootCluster {
  Complex value;
  int multiplicity = 1;
  bool real = false;
  // Multiprecision value, when the root comes from an exact factor.
  std::optional<MpComplex> precise;
};

// Roots of an exact polynomial with multiplicities from Yun's factorization and realness from Sturm counts.
std::vector<RootCluster> exact_root_clusters(const QPoly& p) {
  std::vector<RootCluster> out;
  for (const auto& [factor, mult] : squarefree_factorization(p)) {
    if (factor.degree() < 1) continue;
    int real_count = count_real_roots(factor);
    auto zs = mp_roots(factor, roots(factor));
    std::vector<Complex> rs;
    for (const auto& z : zs) rs.emplace_back(z.re.get_d(), z.im.get_d());
    std::vector<std::size_t> order(rs.size());
    std::iota(order.begin(), order.end(), 0);
    auto imag_ratio = [&](std::size_t k) {
      mpf_class m = abs(zs[k].re) + abs(zs[k].im) + mpf_class(1e-300, kMpBits);
      return mpf_class(abs(zs[k].im) / m, kMpBits);
    };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return imag_ratio(a) < imag_ratio(b); });
    for (std::size_t k = 0; k < order.size(); ++k) {
      RootCluster c;
      MpComplex z = zs[order[k]];
      c.multiplicity = mult;
      c.real = static_cast<int>(k) < real_count;
      if (c.real) z.im = 0;
      c.value = Complex(z.re.get_d(), z.im.get_d());
      c.precise = z;
      out.push_back(c);
    }
  }
  return out;
}

// Floating roots clustered within a relative tolerance.
std::vector<RootCluster> float_root_clusters(const CPoly& p, double tol = 1e-6) {
  auto rs = roots(p);
  std::vector<RootCluster> out;
  std::vector<bool> used(rs.size(), false);
  double scale = 0;
  for (auto r : rs) scale = std::max(scale, std::abs(r));
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (used[i]) continue;
    RootCluster c;
    Complex sum = rs[i];
    c.multiplicity = 1;
    used[i] = true;
    for (std::size_t j = i + 1; j < rs.size(); ++j) {
      if (!used[j] && std::abs(rs[j] - rs[i]) <= tol * (1 + scale)) {
        used[j] = true;
        sum += rs[j];
        ++c.multiplicity;
      }
    }
    c.value = sum / static_cast<double>(c.multiplicity);
    c.real = std::abs(c.value.imag()) <= 1e-8 * (1 + std::abs(c.value));
    if (c.real) c.value = Complex(c.value.real(), 0);
    out.push_back(c);
  }
  return out;
}

Complex mp_eval_value(const QPoly& p, const MpComplex& t) {
  MpComplex v = mp_eval(p, t).first;
  return {v.re.get_d(), v.im.get_d()};
}

// Lexicographic on coordinates; parts equal up to rounding count as ties.
bool lex_less(const CPoint& a, const CPoint& b) {
  auto differ = [](double x, double y) { return std::abs(x - y) > 1e-9 * std::max({1e-300, std::abs(x), std::abs(y)}); };
  for (std::size_t i = 0; i < a.coords.size() && i < b.coords.size(); ++i) {
    if (differ(a.coords[i].real(), b.coords[i].real())) return a.coords[i].real() < b.coords[i].real();
    if (differ(a.coords[i].imag(), b.coords[i].imag())) return a.coords[i].imag() < b.coords[i].imag();
  }
  return false;
}

}  // namespace

int FibreReport::total_multiplicity() const {
  int s = 0;
  for (const auto& sol : solutions) s += sol.multiplicity;
  return s;
}

bool FibreReport::reduced() const {
  return std::all_of(solutions.begin(), solutions.end(), [](const Solution& s) { return s.multiplicity == 1; });
}

void finalize(FibreReport& report) {
  std::stable_sort(report.solutions.begin(), report.solutions.end(), [](const Solution& a, const Solution& b) {
    if (a.real != b.real) return a.real;
    return lex_less(a.point, b.point);
  });
  report.complex_count = static_cast<int>(report.solutions.size());
  report.real_count = 0;
  for (const auto& s : report.solutions)
    if (s.real) report.real_count += s.multiplicity;
}

double residual(const CPoint& x, const CPoly& g) {
  if (x.lambda.empty()) return 0;
  auto sys = WronskiSystem::get(x.lambda);
  return linearize(*sys, to_vec(x), target_of(g)).resid;
}

CPoint newton_polish(const Partition& lambda, const CPoint& x0, const CPoly& g, const NewtonOptions& opt) {
  if (lambda.empty()) return x0;
  require_monic(g, lambda.size());
  auto sys = WronskiSystem::get(lambda);
  Vec x = to_vec(x0);
  const Target tg = target_of(g);
  double last = INFINITY;
  for (int it = 0; it <= opt.max_iterations; ++it) {
    Linearization lin = linearize(*sys, x, tg);
    if (rcond(lin.a) < opt.singular_rcond) throw NumericalError("newton_polish: singular Jacobian");
    if (lin.resid <= opt.tol) {
      // One extra step only if it strictly helps.
      Vec x2 = x + newton_step(lin);
      if (linearize(*sys, x2, tg).resid < lin.resid) x = x2;
      return from_vec(lambda, x);
    }
    if (it == opt.max_iterations) break;
    if (it > 8 && lin.resid > 0.9 * last) break;
    last = lin.resid;
    x += newton_step(lin);
  }
  throw NumericalError("newton_polish: no convergence");
}

// ---- hook ----

namespace {

CPoint hook_point(int n, const CPoly& g, Complex c) {
  CPoly gp = g.derivative();
  CPoly lin({-c, Complex(1)});
  auto [q, r] = gp.divmod(lin);
  (void)r;
  CPoly f2dd = -q;  // f1'' = -g'/(z - c)
  std::vector<Complex> f(static_cast<std::size_t>(f2dd.degree() + 3), Complex(0));
  for (int k = 0; k <= f2dd.degree(); ++k) f[static_cast<std::size_t>(k + 2)] = f2dd.coeff(k) / static_cast<double>((k + 1) * (k + 2));
  CPoly f1(f);
  f1 += CPoly::constant(g.eval(c) - f1.eval(c));
  return cell_point_from_basis(Partition({n - 1, 1}), std::vector<CPoly>{f1, lin});
}

FibreReport hook_report(int n, const CPoly& g, const std::vector<RootCluster>& crit, bool certified) {
  FibreReport rep;
  rep.lambda = Partition({n - 1, 1});
  rep.g = g;
  rep.certified = certified;
  for (const auto& c : crit) {
    Solution s;
    s.point = hook_point(n, g, c.value);
    s.multiplicity = c.multiplicity;
    s.real = c.real;
    if (s.real) s.point = snap_real(s.point);
    s.residual = residual(s.point, g);
    rep.solutions.push_back(std::move(s));
  }
  finalize(rep);
  return rep;
}

}  // namespace

FibreReport solve_hook(int n, const QPoly& g) {
  if (n < 2) throw std::invalid_argument("solve_hook needs n >= 2");
  if (g.degree() != n || g.leading() != 1) throw std::invalid_argument("target must be monic of degree n");
  auto rep = hook_report(n, to_complex(g), exact_root_clusters(g.derivative()), true);
  rep.g_exact = g;
  return rep;
}

FibreReport solve_hook(int n, const CPoly& g) {
  if (n < 2) throw std::invalid_argument("solve_hook needs n >= 2");
  require_monic(g, n);
  return hook_report(n, g, float_root_clusters(g.derivative()), false);
}

int hook_ambient_sign(const CPoly& g, Complex c) {
  double v = g.derivative(2).eval(c).real();
  if (g.degree() % 2 == 1) v = -v;
  if (v == 0) throw NumericalError("hook_ambient_sign: degenerate critical point");
  return v > 0 ? 1 : -1;
}

// ---- slices ----

QPoint solve_slice1(const Partition& lambda, const Partition& kappa, const Rational& a) {
  if (!lambda.contains(kappa) || lambda.size() != kappa.size() + 1) throw std::invalid_argument("solve_slice1: need kappa in lambda with one box removed");
  Cell box{};
  for (Cell c : lambda.cells())
    if (!kappa.contains(c)) box = c;
  QPoint x(lambda);
  x.at(box) = a * Rational(syt_count(lambda)) / (Rational(lambda.size()) * Rational(syt_count(kappa)));
  return x;
}

namespace {

std::pair<Cell, Cell> two_boxes(const Partition& lambda, const Partition& kappa) {
  if (!lambda.contains(kappa) || lambda.size() != kappa.size() + 2) throw std::invalid_argument("solve_slice2: need kappa in lambda with two boxes removed");
  std::vector<Cell> boxes;
  for (Cell c : lambda.cells())
    if (!kappa.contains(c)) boxes.push_back(c);
  return {boxes[0], boxes[1]};
}

}  // namespace

Rational slice2_hook_ratio(const Partition& lambda, const Partition& kappa) {
  auto [c1, c2] = two_boxes(lambda, kappa);
  const int n = lambda.size();
  Rational fa1(syt_count(lambda.without(c1)));
  Rational fa2(syt_count(lambda.without(c2)));
  return Rational(n) / Rational(n - 1) * fa1 * fa2 / (Rational(syt_count(lambda)) * Rational(syt_count(kappa)));
}

Slice2Result solve_slice2(const Partition& lambda, const Partition& kappa, Complex a1, Complex a2) {
  auto [c1, c2] = two_boxes(lambda, kappa);
  const int n = lambda.size();
  Slice2Result res;
  res.distance = distance(c1, c2);
  CPoly g = CPoly::monomial(Complex(1), n - 2) * CPoly({a1, Complex(1)}) * CPoly({a2, Complex(1)});
  const double s = std::abs(a1) + std::abs(a2);
  const Complex sum = a1 + a2;
  const Complex prod = a1 * a2;
  auto make = [&](Complex x1, Complex x2, int mult, bool real) {
    CPoint p(lambda);
    p.at(c1) = x1;
    p.at(c2) = x2;
    if (real) p = snap_real(p);
    res.points.push_back({p, mult, real});
  };
  if (res.distance == 1) {
    // Adjacent boxes: the slice is cut out by two equations that are triangular in the coordinates.
    auto sys = WronskiSystem::get(lambda);
    const int i1 = lambda.cell_index(c1);
    const int i2 = lambda.cell_index(c2);
    auto restrict = [&](const MPoly& p) {
      MPoly out;
      for (const auto& [m, c] : p.terms()) {
        bool keep = true;
        for (int v = 0; v < n; ++v)
          if (v != i1 && v != i2 && m.e[static_cast<std::size_t>(v)] > 0) keep = false;
        if (keep) out += MPoly::term(m, c);
      }
      return out;
    };
    MPoly e1 = restrict(sys->coefficients()[static_cast<std::size_t>(n - 1)]);
    MPoly e2 = restrict(sys->coefficients()[static_cast<std::size_t>(n - 2)]);
    // e1 is linear in one of the coordinates, e2 is linear in the other once the first is known.
    auto coef = [&](const MPoly& p, const Monomial& m) {
      auto it = p.terms().find(m);
      return it == p.terms().end() ? Complex(0) : Complex(it->second.get_d(), 0);
    };
    Monomial m1 = Monomial::var(i1), m2 = Monomial::var(i2), m12 = m1 * m2;
    Complex p1 = coef(e1, m1), p2 = coef(e1, m2);
    Complex q1 = coef(e2, m1), q2 = coef(e2, m2), q12 = coef(e2, m12);
    Complex q11 = coef(e2, m1 * m1), q22 = coef(e2, m2 * m2);
    Complex x1, x2;
    if (std::abs(p2) == 0 && std::abs(p1) > 0) {
      x1 = sum / p1;
      x2 = (prod - q1 * x1 - q11 * x1 * x1) / (q2 + q12 * x1);
    } else if (std::abs(p1) == 0 && std::abs(p2) > 0) {
      x2 = sum / p2;
      x1 = (prod - q2 * x2 - q22 * x2 * x2) / (q1 + q12 * x2);
    } else {
      throw std::logic_error("solve_slice2: adjacent slice is not triangular");
    }
    bool real = std::abs(a1.imag() + a2.imag()) <= 1e-14 * (1 + s) && std::abs(prod.imag()) <= 1e-14 * (1 + s * s);
    make(x1, x2, 1, real);
    return res;
  }
  const Rational fl(syt_count(lambda));
  const Rational fk(syt_count(kappa));
  const Rational fa1(syt_count(lambda.without(c1)));
  const Rational fa2(syt_count(lambda.without(c2)));
  // A x^2 - (a1 + a2) x + (n-1)^{-1} (f^{alpha2} / f^kappa) a1 a2 = 0 for the first coordinate.
  const double A = Rational(n * fa1 / fl).get_d();
  const double ratio = slice2_hook_ratio(lambda, kappa).get_d();
  res.discriminant = sum * sum - 4.0 * ratio * prod;
  const Complex root = std::sqrt(res.discriminant);
  const double disc_re = res.discriminant.real();
  const bool zero = std::abs(res.discriminant) <= 1e-12 * (1 + s * s);
  const double back = Rational(fl / Rational(n)).get_d();
  auto second = [&](Complex x1) { return (sum * back - fa1.get_d() * x1) / fa2.get_d(); };
  if (zero) {
    Complex x1 = sum / (2 * A);
    make(x1, second(x1), 2, true);
    return res;
  }
  const bool real = disc_re > 0 && std::abs(res.discriminant.imag()) <= 1e-12 * (1 + s * s);
  for (int sgn : {1, -1}) {
    Complex x1 = (sum + static_cast<double>(sgn) * root) / (2 * A);
    make(x1, second(x1), 1, real);
  }
  return res;
}

// ---- exact solver ----

FibreReport exact_solve(const Partition& lambda, const QPoly& g, const ExactOptions& opt) {
  const int n = lambda.size();
  if (n > 6 || (n == 6 && !opt.allow_six)) throw std::invalid_argument("exact_solve: size guard (n <= 5, or 6 with allow_six)");
  if (g.degree() != n || g.leading() != 1) throw std::invalid_argument("target must be monic of degree n");
  FibreReport rep;
  rep.lambda = lambda;
  rep.g = to_complex(g);
  rep.g_exact = g;
  rep.certified = true;
  if (n == 0) {
    Solution s;
    s.point = CPoint(lambda);
    s.real = true;
    rep.solutions.push_back(s);
    finalize(rep);
    return rep;
  }
  auto sys = WronskiSystem::get(lambda);
  std::vector<GPoly> gens;
  for (int l = 0; l < n; ++l) gens.push_back(to_gpoly(sys->coefficients()[static_cast<std::size_t>(l)] - MPoly(g.coeff(l)), n));
  QuotientAlgebra qa(groebner_basis(std::move(gens), n), n);
  if (qa.dimension() != syt_count(lambda)) throw std::logic_error("exact_solve: quotient dimension differs from the number of standard tableaux");
  ShapeLemma sl = shape_lemma(qa, opt.seed);
  for (const auto& c : exact_root_clusters(sl.eliminant)) {
    Solution s;
    std::vector<Complex> coords;
    for (const auto& r : sl.coordinates) coords.push_back(mp_eval_value(r, *c.precise));
    s.point = CPoint(lambda, coords);
    s.multiplicity = c.multiplicity;
    s.real = c.real;
    if (s.multiplicity == 1) {
      try {
        s.point = newton_polish(lambda, s.point, rep.g);
      } catch (const NumericalError&) {
        // keep the eliminant value; the residual records the quality
      }
    }
    if (s.real) s.point = snap_real(s.point);
    s.residual = residual(s.point, rep.g);
    rep.solutions.push_back(std::move(s));
  }
  finalize(rep);
  return rep;
}

// ---- tracking ----

int PathLedger::count(CrossingKind k) const {
  return static_cast<int>(std::count_if(events.begin(), events.end(), [k](const PathEvent& e) { return e.kind == k; }));
}

CPoly BasePath::at(double t) const {
  auto a = marked_points(t);
  CPoly g = CPoly::from_negated_roots(std::span<const Complex>(a));
  // Parts below the rounding error of the expansion are set to zero.
  std::vector<Complex> mags;
  for (const auto& ak : a) mags.emplace_back(std::abs(ak), 0.0);
  CPoly bound = CPoly::from_negated_roots(std::span<const Complex>(mags));
  std::vector<Complex> c = g.coeffs();
  const double unit = 8.0 * static_cast<double>(a.size() + 1) * std::numeric_limits<double>::epsilon();
  for (std::size_t l = 0; l < c.size(); ++l) {
    const double tol = unit * bound.coeff(static_cast<int>(l)).real();
    double re = std::abs(c[l].real()) <= tol ? 0.0 : c[l].real();
    double im = std::abs(c[l].imag()) <= tol ? 0.0 : c[l].imag();
    c[l] = Complex(re, im);
  }
  return CPoly(std::move(c));
}

BasePath constant_path(const CPoly& g) {
  BasePath p;
  p.n = g.degree();
  auto rs = roots(g);
  for (auto& r : rs) r = -r;
  p.marked_points = [rs](double) { return rs; };
  return p;
}

BasePath linear_path(std::vector<Complex> from, std::vector<Complex> to) {
  if (from.size() != to.size()) throw std::invalid_argument("linear_path: size mismatch");
  BasePath p;
  p.n = static_cast<int>(from.size());
  p.marked_points = [from, to](double t) {
    std::vector<Complex> a(from.size());
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = (1 - t) * from[k] + t * to[k];
    return a;
  };
  return p;
}

namespace {

// dg/dt by a one-sided difference in the direction of travel.
CPoly path_velocity(const BasePath& path, double t, double dir) {
  const double h = 1e-7 * dir;
  return Complex(1.0 / h) * (path.at(t + h) - path.at(t));
}

Vec scaled_solve(const Linearization& lin, const Vec& rhs_unscaled) {
  Vec rhs = lin.rw.cast<Complex>().cwiseProduct(rhs_unscaled);
  Vec y = lin.a.fullPivLu().solve(rhs);
  return lin.cw.cast<Complex>().cwiseProduct(y);
}

double median(std::vector<double> v) {
  auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  return *mid;
}

}  // namespace

TrackResult track_branch(const Partition& lambda, const BasePath& path, const CPoint& start, double t0, double t1,
                         const TrackOptions& opt) {
  TrackResult res;
  res.point = start;
  res.t = t0;
  const int n = lambda.size();
  if (n == 0 || t0 == t1) {
    res.completed = true;
    return res;
  }
  auto sys = WronskiSystem::get(lambda);
  const double dir = t1 > t0 ? 1.0 : -1.0;
  std::vector<std::pair<double, Complex>> crossings;
  for (std::size_t k = 0; k < path.crossings.size(); ++k) {
    double tc = path.crossings[k];
    if ((tc - t0) * dir > 0 && (t1 - tc) * dir >= 0) crossings.emplace_back(tc, path.crossing_points[k]);
  }
  std::sort(crossings.begin(), crossings.end(), [dir](const auto& a, const auto& b) { return (a.first - b.first) * dir < 0; });
  std::size_t next_cross = 0;

  Vec x = to_vec(start);
  double t = t0;
  double h = opt.initial_step;
  int successes = 0;
  std::vector<double> dets;
  {
    Linearization lin = linearize(*sys, x, path_target(path, t));
    dets.push_back(std::abs(lin.a.determinant()));
  }
  while ((t1 - t) * dir > 0) {
    double target = t + dir * h;
    if ((target - t1) * dir > 0) target = t1;
    bool at_crossing = false;
    if (next_cross < crossings.size() && (target - crossings[next_cross].first) * dir >= 0) {
      target = crossings[next_cross].first;
      at_crossing = true;
    }
    const double dt = target - t;
    // Euler predictor on Wr(x(t)) = g_t.
    Linearization lin0 = linearize(*sys, x, path_target(path, t));
    CPoly vel = path_velocity(path, t, dir);
    Vec dg(n);
    for (int l = 0; l < n; ++l) dg(l) = vel.coeff(l);
    Vec dx = scaled_solve(lin0, dg) * dt;
    Vec xp = x + dx;
    // Newton corrector at the target.
    const Target gt = path_target(path, target);
    Vec xc = xp;
    bool ok = false;
    double prev_step = INFINITY;
    double first_step = 0;
    double resid = INFINITY;
    Linearization lin;
    for (int it = 0; it < opt.corrector_iterations; ++it) {
      lin = linearize(*sys, xc, gt);
      resid = lin.resid;
      if (resid <= opt.corrector_tol) {
        ok = true;
        break;
      }
      Vec step = newton_step(lin);
      double sn = step.norm();
      if (it == 0) first_step = sn;
      if (!std::isfinite(sn) || sn > 0.5 * prev_step) break;
      prev_step = sn;
      xc += step;
    }
    const double scale = coord_scale(x) + 1e-300;
    const bool sane = ok && first_step <= 0.5 * dx.norm() + 1e-9 * scale;
    if (sane) {
      x = xc;
      t = target;
      ++res.steps;
      if (++successes >= opt.successes_to_grow) {
        h = std::min(2 * h, opt.max_step);
        successes = 0;
      }
      double det = std::abs(lin.a.determinant());
      if (dets.size() >= 5 && det < opt.collision_ratio * median(dets)) {
        res.collision = true;
        dets.push_back(det);
        break;
      }
      dets.push_back(det);
      if (at_crossing) {
        auto cls = classify_two(from_vec(lambda, x), crossings[next_cross].second, opt.classify_tol);
        res.ledger.events.push_back({t, cls.kind, cls.margin});
        ++next_cross;
      }
    } else {
      h /= 2;
      successes = 0;
      if (h < opt.min_step) {
        res.failure = "step underflow";
        break;
      }
    }
  }
  res.point = from_vec(lambda, x);
  res.t = t;
  res.completed = !res.collision && res.failure.empty();
  res.residual = linearize(*sys, x, path_target(path, t)).resid;
  return res;
}

TrackedFibre track(const FibreReport& start, const BasePath& path, const TrackOptions& opt) {
  TrackedFibre out;
  out.report.lambda = start.lambda;
  out.report.g = path.at(1.0);
  for (const auto& s : start.solutions) {
    TrackResult tr = track_branch(start.lambda, path, s.point, 0.0, 1.0, opt);
    if (!tr.completed) throw NumericalError("track: " + (tr.collision ? std::string("collision") : tr.failure) + " at t=" + std::to_string(tr.t));
    Solution ns;
    ns.point = tr.point;
    ns.multiplicity = s.multiplicity;
    ns.real = is_real_point(tr.point);
    if (ns.real) ns.point = snap_real(ns.point);
    ns.residual = residual(ns.point, out.report.g);
    out.report.solutions.push_back(std::move(ns));
    out.tracks.push_back(std::move(tr));
  }
  finalize(out.report);
  return out;
}

FoldPoint locate_fold(const Partition& lambda, const BasePath& path, const CPoint& near, double t_near) {
  const int n = lambda.size();
  auto sys = WronskiSystem::get(lambda);
  const Vec x0 = to_vec(snap_real(near));
  const Linearization lin0 = linearize(*sys, x0, path_target(path, t_near));
  const Eigen::VectorXd rw = lin0.rw;
  const Eigen::VectorXd cw = lin0.cw;
  Eigen::JacobiSVD<Mat> svd(lin0.a, Eigen::ComputeFullV);
  const Eigen::VectorXd c = svd.matrixV().col(n - 1).real().normalized();
  // Unknowns: scaled offset y (x = x0 + cw * y), null vector w, and t.
  const int m = 2 * n + 1;
  Eigen::VectorXd p = Eigen::VectorXd::Zero(m);
  p.segment(n, n) = c;
  p(2 * n) = t_near;
  auto point_of = [&](const Eigen::VectorXd& q) {
    Vec x = x0;
    for (int v = 0; v < n; ++v) x(v) += cw(v) * q(v);
    return x;
  };
  auto system = [&](const Eigen::VectorXd& q) {
    Vec x = point_of(q);
    CPoly g = path.at(q(2 * n));
    Vec vals;
    Mat jac;
    sys->evaluate_with_jacobian(x, vals, jac);
    Eigen::VectorXd out(m);
    Eigen::MatrixXd js = (rw.asDiagonal() * jac.real() * cw.asDiagonal());
    Eigen::VectorXd jw = js * q.segment(n, n);
    for (int l = 0; l < n; ++l) {
      out(l) = rw(l) * (vals(l).real() - g.coeff(l).real());
      out(n + l) = jw(l);
    }
    out(2 * n) = c.dot(q.segment(n, n)) - 1;
    return out;
  };
  FoldPoint fp;
  for (int it = 0; it < 60; ++it) {
    Eigen::VectorXd f = system(p);
    Eigen::MatrixXd jac(m, m);
    for (int k = 0; k < m; ++k) {
      double h = k == 2 * n ? 1e-7 : 1e-7 * std::max(1.0, std::abs(p(k)));
      Eigen::VectorXd qp = p, qm = p;
      qp(k) += h;
      qm(k) -= h;
      jac.col(k) = (system(qp) - system(qm)) / (2 * h);
    }
    Eigen::VectorXd dp = jac.fullPivLu().solve(-f);
    if (!dp.allFinite()) break;
    // Damp steps that would leave the neighbourhood of the starting point.
    double lim = 0.05;
    if (std::abs(dp(2 * n)) > lim) dp *= lim / std::abs(dp(2 * n));
    p += dp;
    if (dp.norm() < 1e-12 * (1 + p.norm())) {
      fp.converged = system(p).norm() < 1e-9;
      break;
    }
  }
  fp.t = p(2 * n);
  fp.point = from_vec(lambda, point_of(p));
  fp.rcond = rcond(linearize(*sys, to_vec(fp.point), path_target(path, fp.t)).a);
  return fp;
}

int jacobian_sign(const CPoint& x) {
  if (x.lambda.empty()) return 1;
  auto sys = WronskiSystem::get(x.lambda);
  Vec v = to_vec(x);
  // Equilibration uses positive weights only, so the target does not affect the sign.
  Linearization lin = linearize(*sys, v, target_of(CPoly::monomial(Complex(1), x.lambda.size())));
  Complex det = lin.a.determinant();
  if (std::abs(det) < 1e-12) throw NumericalError("jacobian_sign: Jacobian vanishes");
  return det.real() > 0 ? 1 : -1;
}

int ambient_sign(const CPoint& x, int calibration) { return calibration * jacobian_sign(x); }

}  // namespace wronski
