#include <g2kit/algebroid.hpp>

#include "check_util.hpp"

#include <stdexcept>

namespace g2kit {

std::string base_name(std::size_t alpha) { return "x" + std::to_string(alpha + 1); }
std::string fiber_name(std::size_t i) { return "xi" + std::to_string(i + 1); }

ContextPtr algebroid_context(std::size_t base_dim, std::size_t rank) {
  std::vector<Variable> vars;
  for (std::size_t a = 0; a < base_dim; ++a) vars.push_back({base_name(a), 0});
  for (std::size_t i = 0; i < rank; ++i) vars.push_back({fiber_name(i), 1});
  return make_context(std::move(vars));
}

LieAlgebroidData::LieAlgebroidData(std::size_t base_dim, std::size_t rank)
    : n_(base_dim), r_(rank), ctx_(algebroid_context(base_dim, rank)) {
  c_.assign(r_ * r_ * r_, GradedPoly(ctx_));
  rho_.assign(r_ * n_, GradedPoly(ctx_));
}

GradedPoly LieAlgebroidData::check_base_poly(GradedPoly value) const {
  if (value.context() != ctx_) value = value.embed(ctx_);
  if (!value.only_uses_degree_zero()) throw InputError("structure function depends on fiber coordinates: " + value.to_string());
  return value;
}

void LieAlgebroidData::set_c(std::size_t i, std::size_t j, std::size_t k, GradedPoly value) {
  if (i >= r_ || j >= r_ || k >= r_) throw InputError("structure function index out of range");
  value = check_base_poly(std::move(value));
  if (i == j) {
    if (!value.is_zero()) throw InputError("c_ii^k must vanish");
    return;
  }
  c_[(j * r_ + i) * r_ + k] = -value;
  c_[(i * r_ + j) * r_ + k] = std::move(value);
}

void LieAlgebroidData::set_rho(std::size_t i, std::size_t alpha, GradedPoly value) {
  if (i >= r_ || alpha >= n_) throw InputError("anchor index out of range");
  rho_[i * n_ + alpha] = check_base_poly(std::move(value));
}

bool operator==(const LieAlgebroidData& a, const LieAlgebroidData& b) {
  return a.n_ == b.n_ && a.r_ == b.r_ && a.c_ == b.c_ && a.rho_ == b.rho_;
}

Section Section::zero(const ContextPtr& ctx, std::size_t rank) { return Section{std::vector<GradedPoly>(rank, GradedPoly(ctx))}; }

Section Section::basis(const ContextPtr& ctx, std::size_t rank, std::size_t i) {
  Section s = zero(ctx, rank);
  s.coeffs.at(i) = GradedPoly::constant(ctx, Rational(1));
  return s;
}

Derivation build_Q(const LieAlgebroidData& a) {
  const auto& ctx = a.context();
  Derivation q(ctx);
  for (std::size_t k = 0; k < a.rank(); ++k) {
    GradedPoly comp(ctx);
    for (std::size_t i = 0; i < a.rank(); ++i) {
      for (std::size_t j = i + 1; j < a.rank(); ++j) {
        if (a.c(i, j, k).is_zero()) continue;
        comp -= a.c(i, j, k) * GradedPoly::variable(ctx, a.fiber_var(i)) * GradedPoly::variable(ctx, a.fiber_var(j));
      }
    }
    q.set_component(a.fiber_var(k), std::move(comp));
  }
  for (std::size_t alpha = 0; alpha < a.base_dim(); ++alpha) {
    GradedPoly comp(ctx);
    for (std::size_t i = 0; i < a.rank(); ++i) comp += a.rho(i, alpha) * GradedPoly::variable(ctx, a.fiber_var(i));
    q.set_component(a.base_var(alpha), std::move(comp));
  }
  return q;
}

LieAlgebroidData algebroid_from_Q(const Derivation& q, std::size_t base_dim, std::size_t rank) {
  LieAlgebroidData a(base_dim, rank);
  if (!q.context()->same_as(*a.context())) throw InputError("field does not live on an algebroid chart of this size");
  const Derivation qq = q.embed(a.context());
  for (std::size_t k = 0; k < rank; ++k) {
    const GradedPoly& qk = qq.component(a.fiber_var(k));
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = i + 1; j < rank; ++j) a.set_c(i, j, k, -qk.partial(a.fiber_var(i)).partial(a.fiber_var(j)));
  }
  for (std::size_t alpha = 0; alpha < base_dim; ++alpha)
    for (std::size_t i = 0; i < rank; ++i) a.set_rho(i, alpha, qq.component(a.base_var(alpha)).partial(a.fiber_var(i)));
  if (!(build_Q(a) == qq)) throw InputError("field is not of the form 1/2 xi xi c d/dxi + rho xi d/dx");
  return a;
}

Report check_homological(const Derivation& q) {
  if (q.degree().value_or(1) != 1) throw std::invalid_argument("check_homological: field must have degree 1");
  Report r("homological");
  r.add(detail::vanishing_check("[Q,Q]=0", "[Q,Q] = 2 Q^2 = 0", gcommutator(q, q)));
  return r;
}

Derivation section_to_vf(const ContextPtr& ctx, const Section& a) {
  Derivation d(ctx);
  std::size_t i = 0;
  for (std::size_t v = 0; v < ctx->size(); ++v) {
    if (ctx->degree(v) != 1) continue;
    if (i >= a.coeffs.size()) break;
    d.set_component(v, a.coeffs[i].context() == ctx ? a.coeffs[i] : a.coeffs[i].embed(ctx));
    ++i;
  }
  if (i != a.coeffs.size()) throw std::invalid_argument("section rank does not match chart");
  return d;
}

Section vf_to_section(const Derivation& d) {
  const auto& ctx = d.context();
  Section s;
  for (std::size_t v = 0; v < ctx->size(); ++v) {
    const GradedPoly& comp = d.component(v);
    if (ctx->degree(v) == 1) {
      if (!comp.only_uses_degree_zero()) throw InputError("field is not a section: d/d" + ctx->var(v).name + " coefficient " + comp.to_string());
      s.coeffs.push_back(comp);
    } else if (!comp.is_zero()) {
      throw InputError("field is not a section: nonzero d/d" + ctx->var(v).name + " component");
    }
  }
  return s;
}

Section derived_bracket(const Derivation& q, const Section& a, const Section& b) {
  const auto& ctx = q.context();
  return vf_to_section(gcommutator(gcommutator(q, section_to_vf(ctx, a)), section_to_vf(ctx, b)));
}

GradedPoly derived_anchor(const Derivation& q, const Section& a, const GradedPoly& f) {
  const auto& ctx = q.context();
  return gcommutator(q, section_to_vf(ctx, a)).apply(f.context() == ctx ? f : f.embed(ctx));
}

Report derived_structure_report(const LieAlgebroidData& a) {
  Report r("derived brackets");
  const Derivation q = build_Q(a);
  r.merge(check_homological(q));
  const auto& ctx = a.context();
  const std::size_t n = a.base_dim(), rk = a.rank();
  detail::FailureLog br, anchor;
  for (std::size_t i = 0; i < rk; ++i)
    for (std::size_t j = 0; j < rk; ++j) {
      const Section got = derived_bracket(q, Section::basis(ctx, rk, i), Section::basis(ctx, rk, j));
      for (std::size_t k = 0; k < rk; ++k) br.note(detail::idx({i, j, k}), got.coeffs[k] - a.c(i, j, k));
    }
  for (std::size_t i = 0; i < rk; ++i)
    for (std::size_t al = 0; al < n; ++al)
      anchor.note(detail::idx({i, al}),
                  derived_anchor(q, Section::basis(ctx, rk, i), GradedPoly::variable(ctx, a.base_var(al))) - a.rho(i, al));
  r.add(br.to_check("derived bracket reproduces c", "[[Q, e_i], e_j] = c_ij^k e_k"));
  r.add(anchor.to_check("derived anchor reproduces rho", "[[Q, e_i], x^alpha] = rho_i^alpha"));
  return r;
}

GradedPoly apply_symbol(const std::vector<GradedPoly>& symbol, const GradedPoly& f) {
  GradedPoly out(f.context());
  for (std::size_t alpha = 0; alpha < symbol.size(); ++alpha) {
    if (symbol[alpha].is_zero()) continue;
    out += symbol[alpha] * f.partial(alpha);
  }
  return out;
}

GradedPoly anchor_apply(const LieAlgebroidData& a, const Section& s, const GradedPoly& f) {
  GradedPoly out(a.context());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (s.coeffs[i].is_zero()) continue;
    for (std::size_t alpha = 0; alpha < a.base_dim(); ++alpha) out += s.coeffs[i] * a.rho(i, alpha) * f.partial(a.base_var(alpha));
  }
  return out;
}

Section section_bracket(const LieAlgebroidData& a, const Section& s, const Section& t) {
  Section out = Section::zero(a.context(), a.rank());
  for (std::size_t k = 0; k < a.rank(); ++k) {
    out.coeffs[k] = anchor_apply(a, s, t.coeffs[k]) - anchor_apply(a, t, s.coeffs[k]);
    for (std::size_t i = 0; i < a.rank(); ++i)
      for (std::size_t j = 0; j < a.rank(); ++j) {
        if (i == j || a.c(i, j, k).is_zero()) continue;
        out.coeffs[k] += s.coeffs[i] * t.coeffs[j] * a.c(i, j, k);
      }
  }
  return out;
}

CDOData dual_cdo(const CDOData& y) {
  CDOData d = y;
  const std::size_t r = y.matrix.size();
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) d.matrix[a][b] = -y.matrix[b][a];
  return d;
}

Section apply_cdo(const CDOData& y, const Section& s) {
  Section out = s;
  const std::size_t r = y.matrix.size();
  for (std::size_t a = 0; a < r; ++a) {
    out.coeffs[a] = apply_symbol(y.symbol, s.coeffs[a]);
    for (std::size_t b = 0; b < r; ++b) out.coeffs[a] += y.matrix[a][b] * s.coeffs[b];
  }
  return out;
}

CDOData cdo_commutator(const CDOData& y1, const CDOData& y2) {
  CDOData out = y1;
  for (std::size_t alpha = 0; alpha < y1.symbol.size(); ++alpha)
    out.symbol[alpha] = apply_symbol(y1.symbol, y2.symbol[alpha]) - apply_symbol(y2.symbol, y1.symbol[alpha]);
  const std::size_t r = y1.matrix.size();
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      GradedPoly m = apply_symbol(y1.symbol, y2.matrix[a][b]) - apply_symbol(y2.symbol, y1.matrix[a][b]);
      for (std::size_t c = 0; c < r; ++c) m += y1.matrix[a][c] * y2.matrix[c][b] - y2.matrix[a][c] * y1.matrix[c][b];
      out.matrix[a][b] = std::move(m);
    }
  return out;
}

CDOData vf_to_cdo(const Derivation& x0, std::size_t base_dim, std::size_t rank) {
  const ContextPtr ctx = algebroid_context(base_dim, rank);
  if (!x0.context()->same_as(*ctx)) throw InputError("field does not live on an algebroid chart of this size");
  if (x0.degree().value_or(0) != 0) throw InputError("field must have degree 0 to define an operator");
  CDOData y;
  y.symbol.assign(base_dim, GradedPoly(ctx));
  y.matrix.assign(rank, std::vector<GradedPoly>(rank, GradedPoly(ctx)));
  for (std::size_t alpha = 0; alpha < base_dim; ++alpha) y.symbol[alpha] = x0.component(alpha).embed(ctx);
  for (std::size_t b = 0; b < rank; ++b) {
    const GradedPoly comp = x0.component(base_dim + b).embed(ctx);
    for (std::size_t a = 0; a < rank; ++a) y.matrix[a][b] = comp.partial(base_dim + a);
  }
  for (const auto& row : y.matrix)
    for (const auto& m : row)
      if (!m.only_uses_degree_zero()) throw InputError("fiber part of field is not linear in the fiber coordinates");
  return y;
}

Derivation cdo_to_vf(const ContextPtr& ctx, const CDOData& y) {
  Derivation d(ctx);
  const std::size_t n = y.symbol.size();
  const std::size_t r = y.matrix.size();
  for (std::size_t alpha = 0; alpha < n; ++alpha) d.set_component(alpha, y.symbol[alpha].embed(ctx));
  for (std::size_t b = 0; b < r; ++b) {
    GradedPoly comp(ctx);
    for (std::size_t a = 0; a < r; ++a) comp += y.matrix[a][b].embed(ctx) * GradedPoly::variable(ctx, n + a);
    d.set_component(n + b, std::move(comp));
  }
  return d;
}

LieAlgebroidData poisson_to_algebroid(const std::vector<std::vector<GradedPoly>>& pi) {
  const std::size_t n = pi.size();
  LieAlgebroidData a(n, n);
  const auto& ctx = a.context();
  std::vector<std::vector<GradedPoly>> p(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (pi[i].size() != n) throw InputError("Poisson bivector must be a square matrix");
    for (std::size_t j = 0; j < n; ++j) p[i].push_back(pi[i][j].embed(ctx));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(p[i][j] == -p[j][i])) throw InputError("Poisson bivector is not antisymmetric");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t alpha = 0; alpha < n; ++alpha) a.set_rho(i, alpha, p[i][alpha]);
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) a.set_c(i, j, k, p[i][j].partial(a.base_var(k)));
  }
  return a;
}

}  // namespace g2kit
