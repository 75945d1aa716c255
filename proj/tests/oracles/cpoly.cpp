#include "oracles/cpoly.hpp"

#include <stdexcept>

namespace oracle {

void CPoly::add(const Exps& e, const mpq_class& c) {
  if (c == 0) return;
  auto& slot = t_[e];
  slot += c;
  if (slot == 0) t_.erase(e);
}

CPoly CPoly::constant(std::size_t nvars, const mpq_class& c) {
  CPoly p(nvars);
  p.add(Exps(nvars, 0), c);
  return p;
}

CPoly CPoly::var(std::size_t nvars, std::size_t i) {
  CPoly p(nvars);
  Exps e(nvars, 0);
  e.at(i) = 1;
  p.add(e, 1);
  return p;
}

CPoly CPoly::from(const g2kit::GradedPoly& p, std::size_t nvars) {
  CPoly out(nvars);
  for (const auto& [mono, coef] : p.terms()) {
    for (std::size_t i = nvars; i < mono.size(); ++i)
      if (mono[i] != 0) throw std::runtime_error("oracle: polynomial uses a non-coordinate variable");
    out.add(Exps(mono.begin(), mono.begin() + static_cast<long>(nvars)), coef);
  }
  return out;
}

CPoly CPoly::d(std::size_t i) const {
  CPoly out(n_);
  for (const auto& [e, c] : t_) {
    if (e[i] == 0) continue;
    Exps f = e;
    f[i] -= 1;
    out.add(f, c * e[i]);
  }
  return out;
}

CPoly CPoly::operator+(const CPoly& o) const {
  CPoly out = *this;
  if (out.n_ == 0) out.n_ = o.n_;
  for (const auto& [e, c] : o.t_) out.add(e, c);
  return out;
}

CPoly CPoly::operator-(const CPoly& o) const { return *this + o * mpq_class(-1); }

CPoly CPoly::operator*(const CPoly& o) const {
  CPoly out(std::max(n_, o.n_));
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) {
      Exps e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      out.add(e, c1 * c2);
    }
  return out;
}

CPoly CPoly::operator*(const mpq_class& c) const {
  CPoly out(n_);
  for (const auto& [e, v] : t_) out.add(e, v * c);
  return out;
}

}  // namespace oracle
