#include <g2kit/graded_poly.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace g2kit {

// --- GradedContext ---------------------------------------------------------

GradedContext::GradedContext(std::vector<Variable> vars) : vars_(std::move(vars)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].degree < 0 || vars_[i].degree > 2) {
      throw InputError("variable " + vars_[i].name + " has degree outside {0,1,2}");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (vars_[j].name == vars_[i].name) throw InputError("duplicate variable name " + vars_[i].name);
    }
  }
}

std::optional<std::size_t> GradedContext::find(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t GradedContext::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw InputError("unknown variable " + std::string(name));
}

bool GradedContext::equal_vars(const GradedContext& other) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name != other.vars_[i].name || vars_[i].degree != other.vars_[i].degree) return false;
  }
  return true;
}

ContextPtr make_context(std::vector<Variable> vars) {
  return std::make_shared<const GradedContext>(std::move(vars));
}

std::string monomial_to_string(const GradedContext& ctx, const Monomial& mono) {
  std::string out;
  for (std::size_t i = 0; i < mono.size(); ++i) {
    if (mono[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ctx.var(i).name;
    if (mono[i] > 1) out += "^" + std::to_string(mono[i]);
  }
  return out.empty() ? "1" : out;
}

// --- GradedPoly ------------------------------------------------------------

namespace {

// Sign of moving the odd factors of b past those of a into canonical order;
// 0 if the product vanishes because an odd variable repeats.
int product_sign(const GradedContext& ctx, const Monomial& a, const Monomial& b) {
  int parity = 0;
  int odd_in_a_after = 0;
  // Walk from the end so we know how many odd factors of `a` sit after index i.
  for (std::size_t i = a.size(); i-- > 0;) {
    if (!ctx.is_odd(i)) continue;
    if (b[i] != 0) {
      if (a[i] != 0) return 0;
      parity ^= (odd_in_a_after & 1);
    }
    if (a[i] != 0) ++odd_in_a_after;
  }
  return parity ? -1 : 1;
}

}  // namespace

GradedPoly::GradedPoly(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw std::invalid_argument("GradedPoly needs a context");
}

GradedPoly GradedPoly::constant(ContextPtr ctx, const Rational& c) {
  GradedPoly p(std::move(ctx));
  p.add_term(Monomial(p.ctx_->size(), 0), c);
  return p;
}

GradedPoly GradedPoly::variable(ContextPtr ctx, std::string_view name) {
  const std::size_t i = ctx->index(name);
  return variable(std::move(ctx), i);
}

GradedPoly GradedPoly::variable(ContextPtr ctx, std::size_t index) {
  GradedPoly p(std::move(ctx));
  Monomial m(p.ctx_->size(), 0);
  m.at(index) = 1;
  p.add_term(m, Rational(1));
  return p;
}

void GradedPoly::add_term(const Monomial& mono, const Rational& coef) {
  if (mono.size() != ctx_->size()) throw std::invalid_argument("monomial length does not match context");
  for (std::size_t i = 0; i < mono.size(); ++i) {
    if (ctx_->is_odd(i) && mono[i] > 1) return;  // odd square vanishes
  }
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational GradedPoly::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational GradedPoly::constant_term() const { return coefficient(Monomial(ctx_->size(), 0)); }

int GradedPoly::monomial_degree(const Monomial& mono) const {
  int d = 0;
  for (std::size_t i = 0; i < mono.size(); ++i) d += mono[i] * ctx_->degree(i);
  return d;
}

std::optional<int> GradedPoly::degree() const {
  std::optional<int> d;
  for (const auto& [mono, coef] : terms_) {
    const int md = monomial_degree(mono);
    if (d && *d != md) return std::nullopt;
    d = md;
  }
  return d;
}

bool GradedPoly::only_uses(const std::vector<bool>& allowed) const {
  for (const auto& [mono, coef] : terms_) {
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] != 0 && !allowed.at(i)) return false;
    }
  }
  return true;
}

bool GradedPoly::only_uses_degree_zero() const {
  std::vector<bool> allowed(ctx_->size());
  for (std::size_t i = 0; i < allowed.size(); ++i) allowed[i] = ctx_->degree(i) == 0;
  return only_uses(allowed);
}

GradedPoly GradedPoly::partial(std::size_t var) const {
  GradedPoly out(ctx_);
  const bool odd = ctx_->is_odd(var);
  for (const auto& [mono, coef] : terms_) {
    if (mono[var] == 0) continue;
    Monomial m = mono;
    if (odd) {
      int before = 0;
      for (std::size_t j = 0; j < var; ++j) before += (ctx_->is_odd(j) && mono[j] != 0) ? 1 : 0;
      m[var] = 0;
      out.add_term(m, (before % 2) ? Rational(-coef) : coef);
    } else {
      m[var] -= 1;
      out.add_term(m, coef * mono[var]);
    }
  }
  return out;
}

double GradedPoly::evaluate(std::span<const double> point) const {
  double total = 0.0;
  for (const auto& [mono, coef] : terms_) {
    double term = coef.get_d();
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == 0) continue;
      if (ctx_->degree(i) != 0) throw std::invalid_argument("evaluate: polynomial involves graded variable " + ctx_->var(i).name);
      if (i >= point.size()) throw std::invalid_argument("evaluate: point too short");
      term *= std::pow(point[i], mono[i]);
    }
    total += term;
  }
  return total;
}

GradedPoly GradedPoly::embed(const ContextPtr& target) const {
  // Only variables that occur need a counterpart in the target.
  std::vector<std::size_t> map(ctx_->size(), 0);
  std::vector<bool> used(ctx_->size(), false);
  for (const auto& [mono, coef] : terms_)
    for (std::size_t i = 0; i < mono.size(); ++i) used[i] = used[i] || mono[i] != 0;
  for (std::size_t i = 0; i < ctx_->size(); ++i) {
    if (!used[i]) continue;
    map[i] = target->index(ctx_->var(i).name);
    if (target->degree(map[i]) != ctx_->degree(i)) throw InputError("embed: degree mismatch for " + ctx_->var(i).name);
  }
  // Re-ordering odd variables may introduce a sign: rebuild each monomial as
  // a product of variables in source order.
  GradedPoly out(target);
  for (const auto& [mono, coef] : terms_) {
    GradedPoly term = GradedPoly::constant(target, coef);
    for (std::size_t i = 0; i < mono.size(); ++i) {
      for (int e = 0; e < mono[i]; ++e) term = term * GradedPoly::variable(target, map[i]);
    }
    out += term;
  }
  return out;
}

void GradedPoly::check_same(const GradedPoly& other) const {
  if (ctx_ != other.ctx_ && !ctx_->same_as(*other.ctx_)) throw std::invalid_argument("polynomials live in different contexts");
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& other) {
  check_same(other);
  for (const auto& [mono, coef] : other.terms_) add_term(mono, coef);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& other) {
  check_same(other);
  for (const auto& [mono, coef] : other.terms_) add_term(mono, -coef);
  return *this;
}

GradedPoly& GradedPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coef] : terms_) coef *= c;
  return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  a.check_same(b);
  const GradedContext& ctx = *a.ctx_;
  GradedPoly out(a.ctx_);
  Monomial m(ctx.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const int sign = product_sign(ctx, ma, mb);
      if (sign == 0) continue;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
      Rational c = ca * cb;
      if (sign < 0) c = -c;
      out.add_term(m, c);
    }
  }
  return out;
}

bool operator==(const GradedPoly& a, const GradedPoly& b) {
  a.check_same(b);
  return a.terms_ == b.terms_;
}

std::string GradedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, coef] : terms_) {
    const bool neg = coef < 0;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    const Rational mag = abs(coef);
    const std::string ms = monomial_to_string(*ctx_, mono);
    if (ms == "1") {
      os << format_rational(mag);
    } else if (mag == 1) {
      os << ms;
    } else {
      os << format_rational(mag) << "*" << ms;
    }
  }
  return os.str();
}

GradedPoly mul(const GradedPoly& p, const GradedPoly& q) { return p * q; }

// --- Derivation ------------------------------------------------------------

Derivation::Derivation(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw std::invalid_argument("Derivation needs a context");
  components_.assign(ctx_->size(), GradedPoly(ctx_));
}

Derivation Derivation::partial(ContextPtr ctx, std::string_view name) {
  Derivation d(ctx);
  d.set_component(name, GradedPoly::constant(ctx, Rational(1)));
  return d;
}

void Derivation::set_component(std::size_t var, GradedPoly value) {
  if (value.context() != ctx_ && !value.context()->same_as(*ctx_)) throw std::invalid_argument("component lives in a different context");
  components_.at(var) = std::move(value);
}

bool Derivation::is_zero() const {
  for (const auto& c : components_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::optional<int> Derivation::degree() const {
  std::optional<int> d;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    if (c.is_zero()) continue;
    auto cd = c.degree();
    if (!cd) return std::nullopt;
    const int di = *cd - ctx_->degree(i);
    if (d && *d != di) return std::nullopt;
    d = di;
  }
  return d;
}

GradedPoly Derivation::apply(const GradedPoly& p) const {
  if (p.context() != ctx_ && !p.context()->same_as(*ctx_)) throw std::invalid_argument("apply: context mismatch");
  GradedPoly out(ctx_);
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].is_zero()) continue;
    GradedPoly dp = p.partial(i);
    if (dp.is_zero()) continue;
    out += components_[i] * dp;
  }
  return out;
}

Derivation Derivation::embed(const ContextPtr& target) const {
  Derivation out(target);
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].is_zero()) continue;
    out.set_component(target->index(ctx_->var(i).name), components_[i].embed(target));
  }
  return out;
}

void Derivation::check_same(const Derivation& other) const {
  if (ctx_ != other.ctx_ && !ctx_->same_as(*other.ctx_)) throw std::invalid_argument("derivations live in different contexts");
}

Derivation& Derivation::operator+=(const Derivation& other) {
  check_same(other);
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += other.components_[i];
  return *this;
}

Derivation& Derivation::operator-=(const Derivation& other) {
  check_same(other);
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] -= other.components_[i];
  return *this;
}

Derivation& Derivation::operator*=(const Rational& c) {
  for (auto& comp : components_) comp *= c;
  return *this;
}

Derivation operator*(const GradedPoly& f, const Derivation& d) {
  Derivation out(d.ctx_);
  for (std::size_t i = 0; i < d.components_.size(); ++i) out.components_[i] = f * d.components_[i];
  return out;
}

bool operator==(const Derivation& a, const Derivation& b) {
  a.check_same(b);
  for (std::size_t i = 0; i < a.components_.size(); ++i) {
    if (!(a.components_[i] == b.components_[i])) return false;
  }
  return true;
}

std::string Derivation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + components_[i].to_string() + ")*d/d" + ctx_->var(i).name;
  }
  return out.empty() ? "0" : out;
}

GradedPoly apply(const Derivation& d, const GradedPoly& p) { return d.apply(p); }

Derivation gcommutator(const Derivation& d1, const Derivation& d2) {
  if (d1.context() != d2.context() && !d1.context()->same_as(*d2.context())) throw std::invalid_argument("gcommutator: context mismatch");
  if (!d1.is_homogeneous() || !d2.is_homogeneous()) throw std::invalid_argument("gcommutator: non-homogeneous derivation");
  const int p1 = d1.degree().value_or(0);
  const int p2 = d2.degree().value_or(0);
  const bool anti = (p1 * p2) % 2 != 0;
  Derivation out(d1.context());
  for (std::size_t i = 0; i < d1.context()->size(); ++i) {
    GradedPoly c = d1.apply(d2.component(i));
    GradedPoly other = d2.apply(d1.component(i));
    if (anti) c += other;
    else c -= other;
    out.set_component(i, std::move(c));
  }
  return out;
}

Derivation compose_on_coordinates(const Derivation& d1, const Derivation& d2) {
  Derivation out(d1.context());
  for (std::size_t i = 0; i < d1.context()->size(); ++i) out.set_component(i, d1.apply(d2.component(i)));
  return out;
}

std::optional<NonzeroEntry> first_nonzero(const Derivation& d) {
  const auto& ctx = *d.context();
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const auto& terms = d.component(i).terms();
    if (terms.empty()) continue;
    const auto& [mono, coef] = *terms.begin();
    return NonzeroEntry{ctx.var(i).name, monomial_to_string(ctx, mono), coef};
  }
  return std::nullopt;
}

}  // namespace g2kit
