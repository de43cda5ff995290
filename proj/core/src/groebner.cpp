#include "wronski/groebner.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace wronski {

bool grevlex_greater(const Monomial& a, const Monomial& b, int nvars) {
  int da = a.degree();
  int db = b.degree();
  if (da != db) return da > db;
  for (int i = nvars - 1; i >= 0; --i) {
    auto ai = a.e[static_cast<std::size_t>(i)];
    auto bi = b.e[static_cast<std::size_t>(i)];
    if (ai != bi) return ai < bi;
  }
  return false;
}

GPoly to_gpoly(const MPoly& p, int nvars) {
  GPoly g;
  for (const auto& [m, c] : p.terms()) g.push_back({m, c});
  std::sort(g.begin(), g.end(), [nvars](const GTerm& a, const GTerm& b) { return grevlex_greater(a.m, b.m, nvars); });
  return g;
}

namespace {

void make_monic(GPoly& p) {
  if (p.empty()) return;
  Rational inv = 1 / p.front().c;
  for (auto& t : p) t.c *= inv;
}

// p - c * m * g, both operands sorted.
GPoly sub_scaled(const GPoly& p, const Rational& c, const Monomial& m, const GPoly& g, int nvars) {
  GPoly out;
  out.reserve(p.size() + g.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(p[i++]);
      continue;
    }
    Monomial mg = m * g[j].m;
    if (i == p.size() || grevlex_greater(mg, p[i].m, nvars)) {
      out.push_back({mg, -c * g[j].c});
      ++j;
    } else if (mg == p[i].m) {
      Rational v = p[i].c - c * g[j].c;
      if (sgn(v) != 0) out.push_back({mg, v});
      ++i;
      ++j;
    } else {
      out.push_back(p[i++]);
    }
  }
  return out;
}

const GPoly* find_reducer(const Monomial& m, const std::vector<GPoly>& basis, const std::vector<bool>* active) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (active && !(*active)[k]) continue;
    if (!basis[k].empty() && basis[k].front().m.divides(m)) return &basis[k];
  }
  return nullptr;
}

GPoly reduce_full(GPoly p, const std::vector<GPoly>& basis, const std::vector<bool>* active, int nvars) {
  GPoly rem;
  while (!p.empty()) {
    const GTerm lt = p.front();
    const GPoly* g = find_reducer(lt.m, basis, active);
    if (g) {
      p = sub_scaled(p, lt.c / g->front().c, lt.m / g->front().m, *g, nvars);
    } else {
      rem.push_back(lt);
      p.erase(p.begin());
    }
  }
  return rem;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

bool coprime(const Monomial& a, const Monomial& b) {
  for (int k = 0; k < kMaxVars; ++k)
    if (a.e[static_cast<std::size_t>(k)] && b.e[static_cast<std::size_t>(k)]) return false;
  return true;
}

}  // namespace

GPoly normal_form(GPoly p, const std::vector<GPoly>& basis, int nvars) { return reduce_full(std::move(p), basis, nullptr, nvars); }

std::vector<GPoly> groebner_basis(std::vector<GPoly> generators, int nvars, GroebnerStats* stats) {
  std::vector<GPoly> polys;
  std::vector<bool> active;
  std::vector<Pair> pairs;

  // Gebauer-Moeller installation of a new element h.
  auto update = [&](std::size_t h) {
    const Monomial& lh = polys[h].front().m;
    std::vector<Pair> c;
    for (std::size_t g = 0; g < h; ++g)
      if (active[g]) c.push_back({g, h, Monomial::lcm(polys[g].front().m, lh)});
    std::vector<Pair> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      const Pair& p = c[a];
      bool keep = coprime(polys[p.i].front().m, lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = 0; b < c.size() && keep; ++b)
          if (b != a && c[b].lcm.divides(p.lcm) && (c[b].lcm != p.lcm || b < a)) keep = false;
        for (const Pair& q : d)
          if (keep && q.lcm.divides(p.lcm)) keep = false;
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> e;
    for (const Pair& p : d)
      if (!coprime(polys[p.i].front().m, lh)) e.push_back(p);
    std::vector<Pair> kept;
    for (const Pair& p : pairs) {
      bool drop = lh.divides(p.lcm) && Monomial::lcm(polys[p.i].front().m, lh) != p.lcm &&
                  Monomial::lcm(polys[p.j].front().m, lh) != p.lcm;
      if (!drop) kept.push_back(p);
    }
    kept.insert(kept.end(), e.begin(), e.end());
    pairs = std::move(kept);
    for (std::size_t g = 0; g < h; ++g)
      if (active[g] && lh.divides(polys[g].front().m)) active[g] = false;
    active[h] = true;
  };

  auto install = [&](GPoly p) {
    make_monic(p);
    polys.push_back(std::move(p));
    active.push_back(false);
    update(polys.size() - 1);
  };

  // Interreduce the input first so trivial redundancy never enters the pair queue.
  std::sort(generators.begin(), generators.end(), [nvars](const GPoly& a, const GPoly& b) {
    if (a.empty() || b.empty()) return b.empty() && !a.empty();
    return grevlex_greater(b.front().m, a.front().m, nvars);
  });
  for (auto& g : generators) {
    GPoly r = reduce_full(std::move(g), polys, &active, nvars);
    if (!r.empty()) install(std::move(r));
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [nvars](const Pair& a, const Pair& b) {
      return grevlex_greater(b.lcm, a.lcm, nvars);
    });
    Pair p = *best;
    pairs.erase(best);
    if (stats) ++stats->pairs_considered;
    const GPoly& f = polys[p.i];
    const GPoly& g = polys[p.j];
    GPoly s = sub_scaled(GPoly{}, Rational(-1), p.lcm / f.front().m, f, nvars);
    s = sub_scaled(s, Rational(1), p.lcm / g.front().m, g, nvars);
    if (stats) ++stats->pairs_reduced;
    GPoly r = reduce_full(std::move(s), polys, &active, nvars);
    if (r.empty()) {
      if (stats) ++stats->zero_reductions;
      continue;
    }
    install(std::move(r));
  }

  // Reduced basis.
  std::vector<GPoly> minimal;
  for (std::size_t k = 0; k < polys.size(); ++k)
    if (active[k]) minimal.push_back(polys[k]);
  std::vector<GPoly> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<GPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != k) others.push_back(minimal[j]);
    GPoly head{minimal[k].front()};
    GPoly tail(minimal[k].begin() + 1, minimal[k].end());
    GPoly r = reduce_full(std::move(tail), others, nullptr, nvars);
    head.insert(head.end(), r.begin(), r.end());
    make_monic(head);
    reduced.push_back(std::move(head));
  }
  std::sort(reduced.begin(), reduced.end(), [nvars](const GPoly& a, const GPoly& b) {
    return grevlex_greater(b.front().m, a.front().m, nvars);
  });
  return reduced;
}

// ---- quotient algebra ----

QuotientAlgebra::QuotientAlgebra(std::vector<GPoly> basis, int nvars) : basis_(std::move(basis)), nvars_(nvars) {
  for (const auto& g : basis_)
    if (!g.empty() && g.front().m.degree() == 0) throw std::invalid_argument("QuotientAlgebra: unit ideal");
  for (int v = 0; v < nvars; ++v) {
    bool pure = false;
    for (const auto& g : basis_) {
      const Monomial& m = g.front().m;
      bool only_v = m.e[static_cast<std::size_t>(v)] > 0 && m.degree() == m.e[static_cast<std::size_t>(v)];
      if (only_v) pure = true;
    }
    if (!pure) throw std::invalid_argument("QuotientAlgebra: ideal is not zero-dimensional");
  }
  auto standard = [&](const Monomial& m) {
    for (const auto& g : basis_)
      if (g.front().m.divides(m)) return false;
    return true;
  };
  std::set<Monomial> seen{Monomial{}};
  std::vector<Monomial> frontier{Monomial{}};
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      normal_set_.push_back(m);
      for (int v = 0; v < nvars; ++v) {
        Monomial mv = m * Monomial::var(v);
        if (seen.count(mv) || !standard(mv)) continue;
        seen.insert(mv);
        next.push_back(mv);
      }
    }
    frontier = std::move(next);
    if (normal_set_.size() > 5000) throw std::runtime_error("QuotientAlgebra: normal set too large");
  }
  std::sort(normal_set_.begin(), normal_set_.end(), [nvars](const Monomial& a, const Monomial& b) { return grevlex_greater(b, a, nvars); });
  const auto dim = normal_set_.size();
  mult_.resize(static_cast<std::size_t>(nvars));
  for (int v = 0; v < nvars; ++v) {
    auto& mat = mult_[static_cast<std::size_t>(v)];
    mat.assign(dim, std::vector<Rational>(dim, Rational(0)));
    for (std::size_t j = 0; j < dim; ++j) {
      auto col = coordinates(GPoly{{normal_set_[j] * Monomial::var(v), Rational(1)}});
      for (std::size_t i = 0; i < dim; ++i) mat[i][j] = col[i];
    }
  }
}

std::vector<Rational> QuotientAlgebra::coordinates(const GPoly& p) const {
  GPoly r = normal_form(p, basis_, nvars_);
  std::vector<Rational> out(normal_set_.size(), Rational(0));
  for (const auto& t : r) {
    auto it = std::lower_bound(normal_set_.begin(), normal_set_.end(), t.m,
                               [this](const Monomial& a, const Monomial& b) { return grevlex_greater(b, a, nvars_); });
    if (it == normal_set_.end() || *it != t.m) throw std::logic_error("normal form left the normal set");
    out[static_cast<std::size_t>(it - normal_set_.begin())] = t.c;
  }
  return out;
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

std::vector<Rational> mat_vec(const Matrix& m, const std::vector<Rational>& v) {
  std::vector<Rational> out(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (sgn(v[j]) != 0 && sgn(m[i][j]) != 0) out[i] += m[i][j] * v[j];
  return out;
}

// Solves K y = b for several right-hand sides; returns false if K is singular.
bool solve_columns(Matrix k, std::vector<std::vector<Rational>>& rhs) {
  const std::size_t n = k.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(k[piv][col]) == 0) ++piv;
    if (piv == n) return false;
    std::swap(k[piv], k[col]);
    for (auto& b : rhs) std::swap(b[piv], b[col]);
    Rational inv = 1 / k[col][col];
    for (std::size_t j = col; j < n; ++j) k[col][j] *= inv;
    for (auto& b : rhs) b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(k[r][col]) == 0) continue;
      Rational f = k[r][col];
      for (std::size_t j = col; j < n; ++j) k[r][j] -= f * k[col][j];
      for (auto& b : rhs) b[r] -= f * b[col];
    }
  }
  return true;
}

}  // namespace

ShapeLemma shape_lemma(const QuotientAlgebra& algebra, std::uint64_t seed, int attempts) {
  const int nv = algebra.nvars();
  const auto dim = static_cast<std::size_t>(algebra.dimension());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-6, 6);
  std::vector<Rational> unit(dim, Rational(0));
  unit[0] = 1;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<Rational> w(static_cast<std::size_t>(nv), Rational(0));
    if (attempt == 0) {
      w.back() = 1;
    } else {
      for (auto& x : w) x = coef(rng);
      w.back() += attempt;  // keeps the form away from zero
    }
    Matrix mt(dim, std::vector<Rational>(dim, Rational(0)));
    for (int v = 0; v < nv; ++v) {
      if (sgn(w[static_cast<std::size_t>(v)]) == 0) continue;
      const auto& mv = algebra.multiplication(v);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          if (sgn(mv[i][j]) != 0) mt[i][j] += w[static_cast<std::size_t>(v)] * mv[i][j];
    }
    // Krylov matrix columns: t^k * 1.
    std::vector<std::vector<Rational>> krylov{unit};
    for (std::size_t k = 1; k <= dim; ++k) krylov.push_back(mat_vec(mt, krylov.back()));
    Matrix kmat(dim, std::vector<Rational>(dim));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) kmat[i][j] = krylov[j][i];
    std::vector<std::vector<Rational>> rhs{krylov[dim]};
    for (int v = 0; v < nv; ++v) rhs.push_back(mat_vec(algebra.multiplication(v), unit));
    if (!solve_columns(kmat, rhs)) continue;
    ShapeLemma out;
    out.weights = w;
    std::vector<Rational> p(dim + 1);
    for (std::size_t k = 0; k < dim; ++k) p[k] = -rhs[0][k];
    p[dim] = 1;
    out.eliminant = QPoly(p);
    for (int v = 0; v < nv; ++v) out.coordinates.emplace_back(rhs[static_cast<std::size_t>(v + 1)]);
    return out;
  }
  throw std::runtime_error("non-shape-position: no cyclic linear form found");
}

}  // namespace wronski
