#include "wronski/mpoly.hpp"

namespace wronski {

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += c.get_str();
    for (int i = 0; i < kMaxVars; ++i) {
      auto k = m.e[static_cast<std::size_t>(i)];
      if (k == 0) continue;
      s += "*x" + std::to_string(i);
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

CompiledPoly::CompiledPoly(const MPoly& p) {
  for (const auto& [m, c] : p.terms())
    for (int i = 0; i < kMaxVars; ++i)
      if (m.e[static_cast<std::size_t>(i)] > 0) nvars_ = std::max(nvars_, i + 1);
  for (const auto& [m, c] : p.terms()) {
    coef_.push_back(c.get_d());
    for (int i = 0; i < nvars_; ++i) exps_.push_back(m.e[static_cast<std::size_t>(i)]);
  }
}

Complex CompiledPoly::eval(const std::vector<std::vector<Complex>>& powers) const {
  Complex acc = 0;
  const auto nv = static_cast<std::size_t>(nvars_);
  for (std::size_t t = 0; t < coef_.size(); ++t) {
    Complex v = coef_[t];
    const std::uint8_t* e = exps_.data() + t * nv;
    for (std::size_t i = 0; i < nv; ++i)
      if (e[i]) v *= powers[i][e[i]];
    acc += v;
  }
  return acc;
}

double CompiledPoly::eval_abs(const std::vector<std::vector<double>>& powers) const {
  double acc = 0;
  const auto nv = static_cast<std::size_t>(nvars_);
  for (std::size_t t = 0; t < coef_.size(); ++t) {
    double v = std::abs(coef_[t]);
    const std::uint8_t* e = exps_.data() + t * nv;
    for (std::size_t i = 0; i < nv; ++i)
      if (e[i]) v *= powers[i][e[i]];
    acc += v;
  }
  return acc;
}

}  // namespace wronski
