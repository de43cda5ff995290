#include "wronski/degen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <set>

namespace wronski {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_restricted(const Composition& mu) {
  if (!mu.restricted()) throw std::invalid_argument("composition parts must lie in {1,2}");
}

// Relative coordinate-wise distance between two points.
double rel_dist(const CPoint& a, const CPoint& b) {
  double d = 0;
  double scale = 0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) scale = std::max({scale, std::abs(a.coords[i]), std::abs(b.coords[i])});
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    double m = std::max({std::abs(a.coords[i]), std::abs(b.coords[i]), 1e-6 * scale, 1e-300});
    d = std::max(d, std::abs(a.coords[i] - b.coords[i]) / m);
  }
  return d;
}

// Nearest solution to x; returns (index, distance, second distance).
std::tuple<int, double, double> nearest_solution(const FibreReport& rep, const CPoint& x) {
  int best = -1;
  double d1 = kInf;
  double d2 = kInf;
  for (std::size_t i = 0; i < rep.solutions.size(); ++i) {
    double d = rel_dist(rep.solutions[i].point, x);
    if (d < d1) {
      d2 = d1;
      d1 = d;
      best = static_cast<int>(i);
    } else if (d < d2) {
      d2 = d;
    }
  }
  return {best, d1, d2};
}

BasePath h_mu_u_path(const Composition& mu, double u0, double u1) {
  BasePath p;
  p.n = mu.size();
  p.marked_points = [mu, u0, u1](double t) { return h_mu_marked_points(mu, u0 * std::pow(u1 / u0, t)); };
  return p;
}

std::mutex cache_mutex;
std::map<std::string, LabeledFibre> label_cache;

std::string cache_key(const Partition& l, const Composition& mu, const Rational& eps, const LabelOptions& opt) {
  return l.str() + "|" + mu.str() + "|" + eps.get_str() + "|" + std::to_string(opt.samples) + "|" + std::to_string(opt.max_samples) + "|" +
         std::to_string(opt.integrality_tol) + "|" + std::to_string(opt.exact.seed);
}

LabeledFibre label_fibre_uncached(const Partition& lambda, const Composition& mu, const Rational& eps, const LabelOptions& opt) {
  LabeledFibre lf;
  lf.lambda = lambda;
  lf.mu = mu;
  lf.epsilon = eps;
  const QPoly g = h_mu(mu, eps);
  ExactOptions eopt = opt.exact;
  eopt.allow_six = eopt.allow_six || lambda.size() == 6;
  lf.report = exact_solve(lambda, g, eopt);
  if (!lf.report.reduced()) throw LabelingError("fibre over h_mu is not reduced");
  const std::size_t ns = lf.report.solutions.size();
  lf.keys = subpartitions(lambda);
  const std::size_t nk = lf.keys.size();

  // Continue every solution in u and collect samples.
  lf.samples.assign(ns, {});
  for (std::size_t s = 0; s < ns; ++s) lf.samples[s].push_back(lf.report.solutions[s].point);
  lf.us.push_back(eps.get_d());
  auto extend = [&]() {
    double u0 = lf.us.back();
    double u1 = u0 / 2;
    BasePath path = h_mu_u_path(mu, u0, u1);
    CPoly g1 = path.at(1.0);
    for (std::size_t s = 0; s < ns; ++s) {
      TrackResult tr = track_branch(lambda, path, lf.samples[s].back(), 0.0, 1.0, opt.track);
      if (!tr.completed) throw LabelingError("continuation in u failed (" + (tr.collision ? std::string("collision") : tr.failure) + ")");
      CPoint p = tr.point;
      try {
        p = newton_polish(lambda, p, g1);
      } catch (const NumericalError&) {
        throw LabelingError("continuation in u lost accuracy");
      }
      lf.samples[s].push_back(p);
    }
    lf.us.push_back(u1);
  };
  if (lambda.size() > 0)
    while (static_cast<int>(lf.us.size()) < opt.samples) extend();

  auto estimate_all = [&]() {
    lf.valuations.assign(ns, std::vector<double>(nk, kInf));
    for (std::size_t s = 0; s < ns; ++s) {
      std::vector<PlueckerVector<Complex>> pv;
      for (const auto& p : lf.samples[s]) pv.push_back(pluecker(p));
      for (std::size_t k = 0; k < nk; ++k) {
        std::vector<double> mags;
        bool all_zero = true;
        for (const auto& v : pv) {
          double m = std::abs(v.values[k]);
          mags.push_back(m);
          if (m > 1e-14) all_zero = false;
        }
        lf.valuations[s][k] = all_zero ? kInf : estimate_valuation(mags);
      }
    }
  };

  // Labels from rounded valuations; returns an error message on failure.
  auto assign = [&](std::vector<Tableau>& out) -> std::string {
    out.clear();
    const int parts = mu.length();
    for (std::size_t s = 0; s < ns; ++s) {
      const auto& val = lf.valuations[s];
      std::vector<double> rounded(nk, kInf);
      std::vector<bool> fuzzy(nk, false);
      for (std::size_t k = 0; k < nk; ++k) {
        if (!std::isfinite(val[k])) continue;
        rounded[k] = std::round(val[k]);
        fuzzy[k] = std::abs(val[k] - rounded[k]) > opt.integrality_tol;
      }
      std::vector<Partition> shapes;
      for (int b = 1; b <= parts; ++b) {
        const int bar = mu.bar(b);
        double best = kInf;
        for (std::size_t k = 0; k < nk; ++k) best = std::min(best, rounded[k] + bar * lf.keys[k].size());
        std::vector<std::size_t> arg;
        for (std::size_t k = 0; k < nk; ++k) {
          double score = rounded[k] + bar * lf.keys[k].size();
          if (score == best) arg.push_back(k);
          // A non-integral estimate is tolerated only when no rounding could bring it into the minimum.
          if (fuzzy[k] && val[k] - 1 + bar * lf.keys[k].size() <= best) return "non-integer valuations";
        }
        const Partition* top = nullptr;
        for (auto k : arg) {
          bool contains_all = true;
          for (auto j : arg)
            if (!lf.keys[k].contains(lf.keys[j])) contains_all = false;
          if (contains_all) top = &lf.keys[k];
        }
        if (!top) return "minimizing set without a unique maximal element";
        shapes.push_back(*top);
      }
      if (shapes.back() != lambda) return "final shape differs from lambda";
      std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.length()));
      for (int i = 1; i <= lambda.length(); ++i) rows[static_cast<std::size_t>(i - 1)].assign(static_cast<std::size_t>(lambda.row(i)), 0);
      Partition prev;
      for (int b = 1; b <= parts; ++b) {
        const Partition& cur = shapes[static_cast<std::size_t>(b - 1)];
        if (!cur.contains(prev) || cur.size() - prev.size() != mu.part(b)) return "shape chain does not match the content";
        for (Cell c : cur.cells())
          if (!prev.contains(c)) rows[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)] = b;
        prev = cur;
      }
      try {
        out.emplace_back(lambda, rows);
      } catch (const std::invalid_argument&) {
        return "labels do not form a tableau";
      }
    }
    return {};
  };

  std::vector<Tableau> labels;
  std::string err;
  if (lambda.size() == 0) {
    labels.emplace_back(lambda, std::vector<std::vector<int>>{});
  } else {
    while (true) {
      estimate_all();
      err = assign(labels);
      if (err.empty() || static_cast<int>(lf.us.size()) >= opt.max_samples) break;
      extend();
    }
    if (!err.empty()) throw LabelingError(err);
  }

  // Realness must match the MN property, and cluster sizes must be 2^{#twoskew}.
  std::map<Tableau, int> counts;
  for (std::size_t s = 0; s < ns; ++s) {
    const Tableau& t = labels[s];
    const bool mn = domino_stats(t).twoskews == 0;
    if (mn != lf.report.solutions[s].real) throw LabelingError("realness does not match the MN property for " + t.str());
    lf.report.solutions[s].tableau = t;
    ++counts[t];
  }
  for (const auto& t : enumerate_tab(lambda, mu)) {
    int expect = 1 << domino_stats(t).twoskews;
    if (counts[t] != expect) throw LabelingError("tableau " + t.str() + " labels " + std::to_string(counts[t]) + " solutions");
  }
  return lf;
}

}  // namespace

std::vector<Complex> h_mu_marked_points(const Composition& mu, double u) {
  require_restricted(mu);
  std::vector<Complex> a;
  for (int b = 1; b <= mu.length(); ++b) {
    const int bar = mu.bar(b);
    if (mu.part(b) == 1) {
      a.emplace_back(std::pow(u, bar), 0);
    } else {
      double r = 0.5 * (std::pow(u, bar) + std::pow(u, bar + 1));
      a.emplace_back(0, r);
      a.emplace_back(0, -r);
    }
  }
  return a;
}

QPoly h_mu(const Composition& mu, const Rational& eps) {
  require_restricted(mu);
  if (sgn(eps) <= 0 || eps >= 1) throw std::invalid_argument("h_mu: epsilon must lie in (0,1)");
  QPoly p = QPoly::constant(Rational(1));
  for (int b = 1; b <= mu.length(); ++b) {
    const int bar = mu.bar(b);
    const int m = mu.part(b);
    Rational r = (pow(eps, static_cast<unsigned>(bar)) + pow(eps, static_cast<unsigned>(bar + m - 1))) / 2;
    p = p * (QPoly::monomial(Rational(1), m) + QPoly::constant(pow(r, static_cast<unsigned>(m))));
  }
  return p;
}

int LabeledFibre::index_of(const Tableau& t) const {
  for (std::size_t i = 0; i < report.solutions.size(); ++i)
    if (report.solutions[i].tableau && *report.solutions[i].tableau == t) return static_cast<int>(i);
  return -1;
}

double estimate_valuation(const std::vector<double>& magnitudes) {
  if (magnitudes.size() < 2) throw std::invalid_argument("estimate_valuation needs two samples");
  for (double m : magnitudes)
    if (!(m > 0)) return kInf;
  std::vector<double> row;
  for (std::size_t k = 0; k + 1 < magnitudes.size(); ++k) row.push_back(std::log2(magnitudes[k] / magnitudes[k + 1]));
  // Error terms are powers of u; each level removes one.
  double factor = 2;
  while (row.size() > 1) {
    std::vector<double> next;
    for (std::size_t k = 0; k + 1 < row.size(); ++k) next.push_back((factor * row[k + 1] - row[k]) / (factor - 1));
    row = std::move(next);
    factor *= 2;
  }
  return row[0];
}

LabeledFibre label_fibre(const Partition& lambda, const Composition& mu, const Rational& eps, const LabelOptions& opt) {
  require_restricted(mu);
  if (mu.size() != lambda.size()) throw std::invalid_argument("label_fibre: |mu| must equal |lambda|");
  if (sgn(eps) <= 0 || eps >= 1) throw std::invalid_argument("label_fibre: epsilon must lie in (0,1)");
  const std::string key = cache_key(lambda, mu, eps, opt);
  {
    std::lock_guard lock(cache_mutex);
    auto it = label_cache.find(key);
    if (it != label_cache.end()) return it->second;
  }
  LabeledFibre lf = label_fibre_uncached(lambda, mu, eps, opt);
  std::lock_guard lock(cache_mutex);
  label_cache.emplace(key, lf);
  return lf;
}

EpsilonChoice choose_epsilon(const Partition& lambda, const std::vector<Composition>& mus, const LabelOptions& opt) {
  std::string last;
  for (int k = 1; k <= 20; ++k) {
    Rational eps(1, 1UL << k);
    EpsilonChoice choice;
    choice.epsilon = eps;
    bool ok = true;
    for (const auto& mu : mus) {
      try {
        LabeledFibre a = label_fibre(lambda, mu, eps, opt);
        LabeledFibre b = label_fibre(lambda, mu, eps / 2, opt);
        // Labels must persist from eps to eps/2 along the continuation.
        for (std::size_t s = 0; s < a.report.solutions.size() && ok; ++s) {
          if (a.samples[s].size() < 2) continue;
          auto [idx, d1, d2] = nearest_solution(b.report, a.samples[s][1]);
          if (idx < 0 || *b.report.solutions[static_cast<std::size_t>(idx)].tableau != *a.report.solutions[s].tableau) {
            ok = false;
            last = "labels change between eps and eps/2";
          }
        }
        if (ok) choice.fibres.push_back(std::move(a));
      } catch (const LabelingError& e) {
        ok = false;
        last = e.what();
      }
      if (!ok) break;
    }
    if (ok) return choice;
  }
  throw LabelingError("epsilon underflow below 2^-20: " + last);
}

Rational choose_epsilon(const Partition& lambda, const Composition& mu) { return choose_epsilon(lambda, std::vector<Composition>{mu}, LabelOptions{}).epsilon; }

Composition merged(const Composition& mu_prime, int b) {
  if (b < 1 || b >= mu_prime.length() || mu_prime.part(b) != 1 || mu_prime.part(b + 1) != 1)
    throw std::invalid_argument("merged: parts b and b+1 must both be 1");
  std::vector<int> parts;
  for (int i = 1; i <= mu_prime.length(); ++i) {
    if (i == b + 1) continue;
    parts.push_back(i == b ? 2 : mu_prime.part(i));
  }
  return Composition(parts);
}

BasePath coalescence_path(const Composition& mu_prime, int b, const Rational& eps) {
  require_restricted(mu_prime);
  (void)merged(mu_prime, b);
  const double u = eps.get_d();
  // Marked-point index of part b.
  std::size_t idx = 0;
  for (int i = 1; i < b; ++i) idx += static_cast<std::size_t>(mu_prime.part(i));
  const int c = mu_prime.bar(b + 1);
  const double lo = std::pow(u, c + 1);
  const double hi = std::pow(u, c);
  const double r = 0.5 * (lo + hi);
  BasePath p;
  p.n = mu_prime.size();
  p.marked_points = [mu_prime, u, idx, lo, hi, r](double t) {
    auto a = h_mu_marked_points(mu_prime, u);
    if (t <= 0.5) {
      a[idx] = (1 - t) * lo + t * hi;
      a[idx + 1] = (1 - t) * hi + t * lo;
    } else {
      const double th = std::numbers::pi * (t - 0.5);
      a[idx] = r * std::exp(Complex(0, th));
      a[idx + 1] = r * std::exp(Complex(0, -th));
    }
    return a;
  };
  p.crossings = {0.5};
  p.crossing_points = {Complex(r, 0)};
  return p;
}

namespace {

Tableau split_domino(const Tableau& t, int b) {
  auto cells = t.level(b);
  if (cells.size() != 2) throw std::logic_error("split_domino: entry does not fill two cells");
  std::vector<std::vector<int>> rows = t.rows();
  for (auto& row : rows)
    for (int& e : row)
      if (e > b) ++e;
  rows[static_cast<std::size_t>(cells[1].row - 1)][static_cast<std::size_t>(cells[1].col - 1)] = b + 1;
  return Tableau(t.shape(), rows);
}

SwapRecord run_swap(const LabeledFibre& f0, const Tableau& from, const Tableau& to, int b, const TrackOptions& topt) {
  const Partition& lambda = f0.lambda;
  SwapRecord rec;
  rec.from = from;
  rec.to = to;
  rec.b = b;
  BasePath path = coalescence_path(f0.mu, b, f0.epsilon);
  const int ia = f0.index_of(from);
  const int ib = f0.index_of(to);
  if (ia < 0 || ib < 0) throw LedgerAnomaly("swap path endpoints are not labeled");
  TrackResult a = track_branch(lambda, path, f0.report.solutions[static_cast<std::size_t>(ia)].point, 0.0, 1.0, topt);
  if (a.completed) throw LedgerAnomaly("swap path " + from.str() + " -> " + to.str() + ": no ramification before t = 1");
  // Pair the stopped branch with the nearest continued branch.
  int partner = -1;
  double d1 = kInf;
  double d2 = kInf;
  TrackResult leg2;
  for (std::size_t s = 0; s < f0.report.solutions.size(); ++s) {
    if (static_cast<int>(s) == ia) continue;
    TrackResult r = track_branch(lambda, path, f0.report.solutions[s].point, 0.0, a.t, topt);
    double d = rel_dist(r.point, a.point);
    if (d < d1) {
      d2 = d1;
      d1 = d;
      partner = static_cast<int>(s);
      leg2 = r;
    } else if (d < d2) {
      d2 = d;
    }
  }
  if (partner < 0 || !(d1 < 0.1 * d2)) throw LedgerAnomaly("branch crossing ambiguity at handoff");
  if (partner != ib) throw LedgerAnomaly("handoff partner of " + from.str() + " is not " + to.str());
  FoldPoint fold = locate_fold(lambda, path, a.point, a.t);
  rec.fold_converged = fold.converged && fold.rcond < 1e-8 && std::abs(fold.t - a.t) < 1e-3;
  rec.t_collision = fold.converged ? fold.t : a.t;
  rec.ledger.start_label = from.str();
  rec.ledger.end_label = to.str();
  rec.ledger.events = a.ledger.events;
  rec.ledger.events.push_back({rec.t_collision, CrossingKind::Ramification, fold.rcond});
  for (auto it = leg2.ledger.events.rbegin(); it != leg2.ledger.events.rend(); ++it)
    rec.ledger.events.push_back({2 * rec.t_collision - it->t, it->kind, it->margin});
  rec.first_leg_horizontal = !a.ledger.events.empty() && a.ledger.events.front().kind == CrossingKind::Horizontal;
  if (!rec.fold_converged) throw LedgerAnomaly("swap path " + from.str() + " -> " + to.str() + ": fold point not confirmed");
  if (rec.ledger.count(CrossingKind::Ramification) != 1 || rec.ledger.count(CrossingKind::Horizontal) != 1 ||
      rec.ledger.count(CrossingKind::Vertical) != 1)
    throw LedgerAnomaly("swap path " + from.str() + " -> " + to.str() + ": expected one R, one horizontal and one vertical event");
  return rec;
}

int parity(int k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

CharacterSigns character_signs(const Partition& lambda, const Composition& mu, const CharacterOptions& opt) {
  require_restricted(mu);
  if (mu.size() != lambda.size()) throw std::invalid_argument("character_signs: |mu| must equal |lambda|");
  const int n = lambda.size();
  std::vector<int> twos;
  for (int p = 1; p <= mu.length(); ++p)
    if (mu.part(p) == 2) twos.push_back(p);
  std::vector<int> order = opt.order;
  if (order.empty()) order.assign(twos.rbegin(), twos.rend());
  {
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != twos) throw std::invalid_argument("character_signs: order must list the 2-parts of mu");
  }
  // Intermediate compositions: merged 2-parts in `done`, others split into (1,1).
  auto comp_of = [&](const std::set<int>& done) {
    std::vector<int> parts;
    for (int p = 1; p <= mu.length(); ++p) {
      if (mu.part(p) == 2 && !done.count(p)) {
        parts.push_back(1);
        parts.push_back(1);
      } else {
        parts.push_back(mu.part(p));
      }
    }
    return Composition(parts);
  };
  auto position_of = [&](const std::set<int>& done, int p) {
    int pos = 1;
    for (int q = 1; q < p; ++q) pos += (mu.part(q) == 2 && !done.count(q)) ? 2 : 1;
    return pos;
  };
  std::vector<Composition> comps;
  std::set<int> done;
  comps.push_back(comp_of(done));
  for (int p : order) {
    done.insert(p);
    comps.push_back(comp_of(done));
  }

  CharacterSigns cs;
  cs.lambda = lambda;
  cs.mu = mu;
  std::vector<LabeledFibre> fibres;
  if (opt.epsilon) {
    cs.epsilon = *opt.epsilon;
    for (const auto& c : comps) fibres.push_back(label_fibre(lambda, c, cs.epsilon, opt.label));
  } else {
    auto choice = choose_epsilon(lambda, comps, opt.label);
    cs.epsilon = choice.epsilon;
    fibres = std::move(choice.fibres);
  }

  // Swap propagation over SYT(lambda).
  std::map<Tableau, int> sign;
  std::map<Tableau, int> dual;
  const LabeledFibre& f0 = fibres.front();
  SwapGraph graph = swap_graph(lambda, opt.tree_seed);
  const Tableau& root = graph.vertices[static_cast<std::size_t>(graph.root)];
  sign[root] = 1;
  dual[root] = 1;
  for (int v : graph.order) {
    if (v == graph.root) continue;
    const auto& edge = graph.edges[static_cast<std::size_t>(graph.parent_edge[static_cast<std::size_t>(v)])];
    const Tableau& from = graph.vertices[static_cast<std::size_t>(graph.parent[static_cast<std::size_t>(v)])];
    const Tableau& to = graph.vertices[static_cast<std::size_t>(v)];
    SwapRecord rec = run_swap(f0, from, to, edge.b, opt.label.track);
    const int r = rec.ledger.count(CrossingKind::Ramification);
    sign[to] = sign[from] * parity(r + rec.ledger.count(CrossingKind::Vertical));
    dual[to] = dual[from] * parity(r + rec.ledger.count(CrossingKind::Horizontal));
    cs.swaps.push_back(std::move(rec));
  }

  // Coalescence steps.
  done.clear();
  for (std::size_t step = 0; step < order.size(); ++step) {
    const int p = order[step];
    const int b = position_of(done, p);
    const LabeledFibre& prev = fibres[step];
    const LabeledFibre& next = fibres[step + 1];
    BasePath path = coalescence_path(prev.mu, b, cs.epsilon);
    std::map<Tableau, int> nsign;
    std::map<Tableau, int> ndual;
    for (const auto& sol : next.report.solutions) {
      if (!sol.real) continue;
      const Tableau& t = *sol.tableau;
      Tableau tp = split_domino(t, b);
      const int ip = prev.index_of(tp);
      if (ip < 0 || !prev.report.solutions[static_cast<std::size_t>(ip)].real || !sign.count(tp))
        throw LedgerAnomaly("coalescence predecessor " + tp.str() + " is not a signed real solution");
      TrackResult tr = track_branch(lambda, path, prev.report.solutions[static_cast<std::size_t>(ip)].point, 0.0, 1.0, opt.label.track);
      if (!tr.completed)
        throw LedgerAnomaly("coalescence path from " + tp.str() + ": " + (tr.collision ? std::string("unexpected ramification") : tr.failure));
      CPoint end = tr.point;
      try {
        end = newton_polish(lambda, end, path.at(1.0));
      } catch (const NumericalError&) {
        throw LedgerAnomaly("coalescence path from " + tp.str() + ": endpoint does not refine");
      }
      auto [idx, d1, d2] = nearest_solution(next.report, end);
      if (idx < 0 || !(d1 < 1e-6) || *next.report.solutions[static_cast<std::size_t>(idx)].tableau != t)
        throw LedgerAnomaly("coalescence path from " + tp.str() + " does not end at " + t.str() + " (distance " + std::to_string(d1) + ", t " + std::to_string(tr.t) + ")");
      CoalescenceRecord rec;
      rec.from_mu = prev.mu;
      rec.to_mu = next.mu;
      rec.b = b;
      rec.from = tp;
      rec.to = t;
      rec.ledger = tr.ledger;
      rec.ledger.start_label = tp.str();
      rec.ledger.end_label = t.str();
      if (rec.ledger.count(CrossingKind::Ramification) != 0 || rec.ledger.events.size() != 1)
        throw LedgerAnomaly("coalescence path from " + tp.str() + ": expected exactly one crossing event");
      nsign[t] = sign[tp] * parity(rec.ledger.count(CrossingKind::Vertical));
      ndual[t] = dual[tp] * parity(rec.ledger.count(CrossingKind::Horizontal));
      cs.coalescences.push_back(std::move(rec));
    }
    sign = std::move(nsign);
    dual = std::move(ndual);
    done.insert(p);
  }

  cs.fibre = fibres.back();
  const int t0 = f0.index_of(t_zero(lambda));
  const int calibration = n == 0 ? 1 : jacobian_sign(f0.report.solutions[static_cast<std::size_t>(t0)].point);
  for (auto& sol : cs.fibre.report.solutions) {
    if (!sol.real) continue;
    const Tableau& t = *sol.tableau;
    if (!sign.count(t)) throw LedgerAnomaly("no sign transported to " + t.str());
    sol.sgn = sign[t];
    sol.dual_sgn = dual[t];
    sol.asgn = ambient_sign(sol.point, calibration);
    cs.signs[t] = sign[t];
    cs.dual_signs[t] = dual[t];
    cs.degree += sign[t];
  }
  return cs;
}

DualCheck dual_signs_check(const CharacterSigns& cs) {
  DualCheck dc;
  dc.expected_product = parity(cs.mu.n2());
  for (const auto& [t, s] : cs.signs) {
    auto it = cs.dual_signs.find(t);
    int prod = it == cs.dual_signs.end() ? 0 : s * it->second;
    dc.products[t] = prod;
    if (prod != dc.expected_product) {
      dc.pass = false;
      dc.detail += t.str() + " has product " + std::to_string(prod) + "; ";
    }
  }
  if (!dc.pass)
    for (const auto& rec : cs.coalescences) {
      dc.detail += rec.ledger.start_label + "->" + rec.ledger.end_label + ":";
      for (const auto& e : rec.ledger.events) dc.detail += " " + to_string(e.kind) + "@" + std::to_string(e.t);
      dc.detail += "; ";
    }
  return dc;
}

DualCheck dual_signs_check(const Partition& lambda, const Composition& mu) { return dual_signs_check(character_signs(lambda, mu)); }

}  // namespace wronski
