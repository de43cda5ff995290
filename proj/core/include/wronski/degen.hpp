#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wronski/combi.hpp"
#include "wronski/poly.hpp"
#include "wronski/solve.hpp"

namespace wronski {

// Raised when tableau labels cannot be read off a special fibre.
class LabelingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a path ledger contradicts the expected crossing pattern.
class LedgerAnomaly : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Marked points a of H_mu(u, z) = prod (z + a).
std::vector<Complex> h_mu_marked_points(const Composition& mu, double u);
// H_mu(eps, z), exactly.
QPoly h_mu(const Composition& mu, const Rational& eps);

struct LabelOptions {
  double integrality_tol = 0.2;
  // Samples at eps, eps/2, ..., eps/2^(samples-1); one more is added near half-integers.
  int samples = 3;
  int max_samples = 5;
  TrackOptions track;
  ExactOptions exact;
};

struct LabeledFibre {
  Partition lambda;
  Composition mu;
  Rational epsilon;
  FibreReport report;
  // Parameters u of the samples, starting at epsilon.
  std::vector<double> us;
  // samples[s][k]: solution s continued to us[k].
  std::vector<std::vector<CPoint>> samples;
  // Keys of the valuation vectors, as in subpartitions(lambda).
  std::vector<Partition> keys;
  // Estimated valuation per solution and key; infinity for coordinates that vanish identically.
  std::vector<std::vector<double>> valuations;

  // Index of the solution labeled t; -1 if none.
  int index_of(const Tableau& t) const;
};

// Richardson-extrapolated valuation from |x(u_0)|, |x(u_0/2)|, ...
double estimate_valuation(const std::vector<double>& magnitudes);

// Solves the fibre over h_mu(eps), follows it in u and assigns a tableau to every solution.
// Throws LabelingError when the fibre is not regular or labels are inconsistent.
LabeledFibre label_fibre(const Partition& lambda, const Composition& mu, const Rational& eps, const LabelOptions& opt = {});

struct EpsilonChoice {
  Rational epsilon;
  std::vector<LabeledFibre> fibres;
};
// Largest eps = 2^-k for which every listed fibre is regular and labels consistently at eps and eps/2.
EpsilonChoice choose_epsilon(const Partition& lambda, const std::vector<Composition>& mus, const LabelOptions& opt = {});
Rational choose_epsilon(const Partition& lambda, const Composition& mu);

// Marked points b and b+1 of mu' (both parts 1) merge at t = 1/2 and leave as a conjugate pair.
BasePath coalescence_path(const Composition& mu_prime, int b, const Rational& eps);
// mu' with parts b, b+1 replaced by one part 2.
Composition merged(const Composition& mu_prime, int b);

struct SwapRecord {
  Tableau from;
  Tableau to;
  int b = 0;
  PathLedger ledger;
  double t_collision = 0;
  // Ramification event confirmed by the fold locator.
  bool fold_converged = false;
  // Whether the first leg carried the horizontal crossing.
  bool first_leg_horizontal = false;
};

struct CoalescenceRecord {
  Composition from_mu;
  Composition to_mu;
  int b = 0;
  Tableau from;
  Tableau to;
  PathLedger ledger;
};

struct CharacterOptions {
  std::uint64_t tree_seed = 0;
  // Indices of the 2-parts of mu in processing order; empty means last to first.
  std::vector<int> order;
  std::optional<Rational> epsilon;
  LabelOptions label;
};

struct CharacterSigns {
  Partition lambda;
  Composition mu;
  Rational epsilon;
  // Per MN tableau of content mu.
  std::map<Tableau, int> signs;
  std::map<Tableau, int> dual_signs;
  int degree = 0;
  std::vector<SwapRecord> swaps;
  std::vector<CoalescenceRecord> coalescences;
  LabeledFibre fibre;
};

// Character signs of the real solutions over h_mu, transported from the fibre over h_{1^n}.
// Throws LedgerAnomaly when a path ledger breaks the expected pattern.
CharacterSigns character_signs(const Partition& lambda, const Composition& mu, const CharacterOptions& opt = {});

struct DualCheck {
  bool pass = true;
  int expected_product = 1;
  std::map<Tableau, int> products;
  std::string detail;
};
// sgn * sgn* = (-1)^{n2} on every labeled real solution.
DualCheck dual_signs_check(const CharacterSigns& cs);
DualCheck dual_signs_check(const Partition& lambda, const Composition& mu);

}  // namespace wronski
