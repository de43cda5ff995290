#include "wronski/chars.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace wronski {

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

class CharacterCache {
 public:
  bool find(const Key& k, std::int64_t& out) const {
    std::shared_lock lock(mutex_);
    auto it = values_.find(k);
    if (it == values_.end()) return false;
    out = it->second;
    return true;
  }
  void insert(const Key& k, std::int64_t v) {
    std::unique_lock lock(mutex_);
    values_.emplace(k, v);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, std::int64_t> values_;
};

CharacterCache& cache() {
  static CharacterCache c;
  return c;
}

// Beta-set of lambda with d entries: lambda_i + d - i.
std::vector<int> beta_set(const std::vector<int>& parts, int d) {
  std::vector<int> beta(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    int li = i < static_cast<int>(parts.size()) ? parts[static_cast<std::size_t>(i)] : 0;
    beta[static_cast<std::size_t>(i)] = li + d - 1 - i;
  }
  return beta;
}

std::vector<int> parts_from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int d = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < d; ++i) {
    int p = beta[static_cast<std::size_t>(i)] - (d - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return parts;
}

// mu sorted decreasing; removes the first (largest) part.
std::int64_t chi_rec(const std::vector<int>& parts, const std::vector<int>& mu) {
  if (mu.empty()) return parts.empty() ? 1 : 0;
  Key key{parts, mu};
  std::int64_t cached = 0;
  if (cache().find(key, cached)) return cached;

  const int r = mu.front();
  std::vector<int> rest(mu.begin() + 1, mu.end());
  const int d = static_cast<int>(parts.size());
  std::vector<int> beta = beta_set(parts, d);
  std::int64_t total = 0;
  for (int k = 0; k < d; ++k) {
    int b = beta[static_cast<std::size_t>(k)];
    int target = b - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int x : beta)
      if (x > target && x < b) ++between;
    std::vector<int> nb = beta;
    nb[static_cast<std::size_t>(k)] = target;
    std::int64_t sub = chi_rec(parts_from_beta(nb), rest);
    total += (between % 2 == 0) ? sub : -sub;
  }
  cache().insert(key, total);
  return total;
}

}  // namespace

Composition two_one(int n2, int n1) {
  std::vector<int> p(static_cast<std::size_t>(n2), 2);
  p.insert(p.end(), static_cast<std::size_t>(n1), 1);
  return Composition(std::move(p));
}

std::int64_t chi(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("chi: |mu| must equal |lambda|");
  return chi_rec(lambda.parts(), mu.parts());
}

std::int64_t chi(const Partition& lambda, const Composition& mu) { return chi(lambda, mu.sorted()); }

std::int64_t chi_oracle(const Partition& lambda, const Composition& mu, int max_n) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("chi_oracle: |mu| must equal |lambda|");
  if (lambda.size() > max_n) throw std::invalid_argument("chi_oracle: n exceeds the cost guard");
  const int d = std::max(1, lambda.length());
  std::vector<int> target(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) target[static_cast<std::size_t>(i)] = lambda.row(i + 1) + d - 1 - i;

  using Poly = std::map<std::vector<int>, Integer>;
  auto fits = [&](const std::vector<int>& e) {
    for (int i = 0; i < d; ++i)
      if (e[static_cast<std::size_t>(i)] > target[static_cast<std::size_t>(i)]) return false;
    return true;
  };
  // Multiply by a sparse factor, discarding monomials that already overshoot the target.
  auto multiply = [&](const Poly& p, const Poly& f) {
    Poly out;
    for (const auto& [e1, c1] : p)
      for (const auto& [e2, c2] : f) {
        std::vector<int> e(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) e[static_cast<std::size_t>(i)] = e1[static_cast<std::size_t>(i)] + e2[static_cast<std::size_t>(i)];
        if (!fits(e)) continue;
        out[e] += c1 * c2;
      }
    for (auto it = out.begin(); it != out.end();) {
      if (it->second == 0) it = out.erase(it);
      else ++it;
    }
    return out;
  };

  Poly acc{{std::vector<int>(static_cast<std::size_t>(d), 0), Integer(1)}};
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      std::vector<int> ei(static_cast<std::size_t>(d), 0), ej(static_cast<std::size_t>(d), 0);
      ei[static_cast<std::size_t>(i)] = 1;
      ej[static_cast<std::size_t>(j)] = 1;
      acc = multiply(acc, Poly{{ei, Integer(1)}, {ej, Integer(-1)}});
    }
  for (int r : mu.parts()) {
    Poly power;
    for (int i = 0; i < d; ++i) {
      std::vector<int> e(static_cast<std::size_t>(d), 0);
      e[static_cast<std::size_t>(i)] = r;
      power[e] = 1;
    }
    acc = multiply(acc, power);
  }
  auto it = acc.find(target);
  if (it == acc.end()) return 0;
  return it->second.get_si();
}

}  // namespace wronski
