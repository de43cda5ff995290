#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "wronski/rational.hpp"

namespace wronski {

inline constexpr int kMaxVars = 16;

struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};

  int degree() const noexcept {
    int s = 0;
    for (auto x : e) s += x;
    return s;
  }
  bool divides(const Monomial& other) const noexcept {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[static_cast<std::size_t>(i)] > other.e[static_cast<std::size_t>(i)]) return false;
    return true;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint8_t>(a.e[i] + b.e[i]);
    return m;
  }
  // Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
    return m;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = std::max(a.e[i], b.e[i]);
    return m;
  }
  static Monomial var(int i) {
    Monomial m;
    m.e[static_cast<std::size_t>(i)] = 1;
    return m;
  }
  auto operator<=>(const Monomial&) const = default;
};

// Sparse polynomial with rational coefficients.
class MPoly {
 public:
  MPoly() = default;
  MPoly(int c) : MPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MPoly(const Rational& c) {            // NOLINT(google-explicit-constructor)
    if (sgn(c) != 0) terms_.emplace(Monomial{}, c);
  }
  static MPoly var(int i) {
    MPoly p;
    p.terms_.emplace(Monomial::var(i), Rational(1));
    return p;
  }
  static MPoly term(const Monomial& m, const Rational& c) {
    MPoly p;
    if (sgn(c) != 0) p.terms_.emplace(m, c);
    return p;
  }

  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  bool zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0); }
  Rational constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  int total_degree() const noexcept {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(const MPoly& a) { return MPoly{} - a; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  friend MPoly operator/(const MPoly& a, const MPoly& b) {
    if (!b.constant() || b.zero()) throw std::domain_error("MPoly division by a non-constant");
    Rational inv = 1 / b.constant_term();
    MPoly r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, c * inv);
    return r;
  }
  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

  MPoly partial(int var) const {
    MPoly r;
    for (const auto& [m, c] : terms_) {
      auto k = m.e[static_cast<std::size_t>(var)];
      if (k == 0) continue;
      Monomial mm = m;
      --mm.e[static_cast<std::size_t>(var)];
      r.add_term(mm, c * k);
    }
    return r;
  }

  template <class T>
  T eval(std::span<const T> x) const {
    T acc = T(0);
    for (const auto& [m, c] : terms_) {
      T t = from_rational<T>(c);
      for (std::size_t i = 0; i < x.size() && i < kMaxVars; ++i)
        for (int k = 0; k < m.e[i]; ++k) t = t * x[i];
      acc = acc + t;
    }
    return acc;
  }

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  std::map<Monomial, Rational> terms_;
};

inline bool is_zero(const MPoly& p) { return p.zero(); }

template <>
inline MPoly from_rational<MPoly>(const Rational& q) { return MPoly(q); }

// Floating-point evaluation form of an MPoly.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  explicit CompiledPoly(const MPoly& p);
  // powers[i][k] = x_i^k.
  Complex eval(const std::vector<std::vector<Complex>>& powers) const;
  // Sum of absolute term values; powers[i][k] = |x_i|^k.
  double eval_abs(const std::vector<std::vector<double>>& powers) const;

 private:
  std::vector<double> coef_;
  std::vector<std::uint8_t> exps_;
  int nvars_ = 0;
};

}  // namespace wronski
