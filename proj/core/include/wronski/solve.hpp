#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wronski/cell.hpp"
#include "wronski/combi.hpp"
#include "wronski/poly.hpp"

namespace wronski {

// Raised when a floating computation cannot meet its tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Solution {
  CPoint point;
  int multiplicity = 1;
  bool real = false;
  std::optional<Tableau> tableau;
  std::optional<int> asgn;
  std::optional<int> sgn;
  std::optional<int> dual_sgn;
  double residual = 0;
};

struct FibreReport {
  Partition lambda;
  CPoly g;
  std::optional<QPoly> g_exact;
  std::vector<Solution> solutions;
  // Distinct solutions.
  int complex_count = 0;
  // Real solutions counted with multiplicity.
  int real_count = 0;
  // Real count certified by exact root counting.
  bool certified = false;

  int total_multiplicity() const;
  bool reduced() const;
};

// Recomputes complex_count and real_count and sorts solutions canonically.
void finalize(FibreReport& report);

// Backward error of Wr(x) = g: max over coefficients of |Wr_l(x) - g_l| / (|g_l| + sum of |terms| + s_l),
// where s_l is the matching coefficient of prod (z + |root|) over the roots of g.
double residual(const CPoint& x, const CPoly& g);

struct NewtonOptions {
  double tol = 1e-12;
  int max_iterations = 40;
  // Reciprocal condition number below which the Jacobian counts as singular.
  double singular_rcond = 1e-10;
};

// Newton iteration on Wr(x) = g. Throws NumericalError on divergence or a singular Jacobian.
CPoint newton_polish(const Partition& lambda, const CPoint& x0, const CPoly& g, const NewtonOptions& opt = {});

// lambda = (n-1,1): one solution per critical point of g.
FibreReport solve_hook(int n, const QPoly& g);
FibreReport solve_hook(int n, const CPoly& g);

// |lambda/kappa| = 1: the point on the slice with Wr = z^{n-1}(z+a).
QPoint solve_slice1(const Partition& lambda, const Partition& kappa, const Rational& a);

struct SliceSolution {
  CPoint point;
  int multiplicity = 1;
  bool real = false;
};
struct Slice2Result {
  std::vector<SliceSolution> points;
  // Distance between the two removed cells.
  int distance = 0;
  // (a1+a2)^2 - 4(1-L^-2) a1 a2; zero when the boxes are adjacent.
  Complex discriminant = 0;
};
// |lambda/kappa| = 2: the points on the slice with Wr = z^{n-2}(z+a1)(z+a2).
Slice2Result solve_slice2(const Partition& lambda, const Partition& kappa, Complex a1, Complex a2);
// n (n-1)^{-1} f^{alpha1} f^{alpha2} / (f^lambda f^kappa), exactly.
Rational slice2_hook_ratio(const Partition& lambda, const Partition& kappa);

struct ExactOptions {
  bool allow_six = false;
  std::uint64_t seed = 1;
};
// Certified fibre by Groebner elimination over Q.
FibreReport exact_solve(const Partition& lambda, const QPoly& g, const ExactOptions& opt = {});

// ---- path tracking ----

struct PathEvent {
  double t = 0;
  CrossingKind kind = CrossingKind::Horizontal;
  double margin = 0;
};

struct PathLedger {
  std::vector<PathEvent> events;
  std::string start_label;
  std::string end_label;

  int count(CrossingKind k) const;
};

// A path of monic polynomials given by its roots g_t = prod (z + a_k(t)).
struct BasePath {
  int n = 0;
  std::function<std::vector<Complex>(double)> marked_points;
  // Parameters where two marked points coincide, with the coincident value.
  std::vector<double> crossings;
  std::vector<Complex> crossing_points;

  CPoly at(double t) const;
};

BasePath constant_path(const CPoly& g);
// Straight-line motion of the marked points.
BasePath linear_path(std::vector<Complex> from, std::vector<Complex> to);

struct TrackOptions {
  double initial_step = 1e-2;
  double min_step = 1e-12;
  double max_step = 0.05;
  int successes_to_grow = 4;
  double corrector_tol = 1e-10;
  int corrector_iterations = 5;
  double collision_ratio = 1e-6;
  double classify_tol = 1e-6;
};

struct TrackResult {
  CPoint point;
  double t = 0;
  bool completed = false;
  bool collision = false;
  std::string failure;
  PathLedger ledger;
  double residual = 0;
  int steps = 0;
};

// Continues x from t0 to t1 along the base path. Stops early on a collision or step underflow.
TrackResult track_branch(const Partition& lambda, const BasePath& path, const CPoint& start, double t0, double t1,
                         const TrackOptions& opt = {});

// A real point of the ramification locus on the path: Wr(x) = g_t and J(x) singular.
struct FoldPoint {
  CPoint point;
  double t = 0;
  double rcond = 1;
  bool converged = false;
};
// Newton on the augmented real system {Wr(x) = g_t, J(x) v = 0, c.v = 1} started near a real branch.
FoldPoint locate_fold(const Partition& lambda, const BasePath& path, const CPoint& near, double t_near);

// Tracks every solution of the start fibre to t = 1.
struct TrackedFibre {
  FibreReport report;
  std::vector<TrackResult> tracks;
};
TrackedFibre track(const FibreReport& start, const BasePath& path, const TrackOptions& opt = {});

// Sign of the real Jacobian determinant; throws when it vanishes numerically.
int jacobian_sign(const CPoint& x);
int ambient_sign(const CPoint& x, int calibration);
// (-1)^n g''(c) for the hook solution with linear basis element z - c.
int hook_ambient_sign(const CPoly& g, Complex c);

}  // namespace wronski
