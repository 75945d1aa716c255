#include <g2kit/action.hpp>

#include "check_util.hpp"

namespace g2kit {

using detail::FailureLog;
using detail::idx;

void check_action_shapes(const StrictActionData& s) {
  if (s.mu_h.size() != s.L.dim_h) throw InputError("mu_h needs one section per basis vector of h");
  if (s.mu_g.size() != s.L.dim_g) throw InputError("mu_g needs one field per basis vector of g");
  const auto& ctx = s.A.context();
  for (const auto& sec : s.mu_h) {
    if (sec.coeffs.size() != s.A.rank()) throw InputError("mu_h section has the wrong rank");
    for (const auto& p : sec.coeffs)
      if (!p.context()->same_as(*ctx) || !p.only_uses_degree_zero()) throw InputError("mu_h coefficients must be functions on the base");
  }
  for (const auto& f : s.mu_g) {
    if (!f.context()->same_as(*ctx)) throw InputError("mu_g field does not live on the algebroid chart");
    vf_to_cdo(f, s.A.base_dim(), s.A.rank());  // throws on the wrong shape
  }
}

Derivation mu_of_h(const StrictActionData& s, std::size_t a) { return section_to_vf(s.A.context(), s.mu_h.at(a)); }

Derivation mu_of_delta(const StrictActionData& s, std::size_t a) {
  Derivation d(s.A.context());
  for (std::size_t i = 0; i < s.L.dim_g; ++i)
    if (s.L.delta(a, i) != 0) d += s.mu_g[i].embed(s.A.context()) * s.L.delta(a, i);
  return d;
}

namespace {

void note_field(FailureLog& log, const std::string& where, const Derivation& diff) {
  for (std::size_t v = 0; v < diff.context()->size(); ++v)
    log.note(where + " d/d" + diff.context()->var(v).name, diff.component(v));
}

Derivation g_field(const StrictActionData& s, std::size_t i) { return s.mu_g[i].embed(s.A.context()); }

}  // namespace

Report validate_action_dgla(const StrictActionData& s) {
  check_action_shapes(s);
  Report r("strict action (DGLA equations)");
  const Derivation qa = build_Q(s.A);
  const std::size_t h = s.L.dim_h, g = s.L.dim_g;
  FailureLog c, d, a, b;
  for (std::size_t al = 0; al < h; ++al)
    note_field(c, idx({al}), mu_of_delta(s, al) - gcommutator(qa, mu_of_h(s, al)));
  for (std::size_t i = 0; i < g; ++i) note_field(d, idx({i}), gcommutator(qa, g_field(s, i)));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t al = 0; al < h; ++al) {
      Derivation lhs(s.A.context());
      for (std::size_t be = 0; be < h; ++be)
        if (s.L.act(i, al, be) != 0) lhs += mu_of_h(s, be) * s.L.act(i, al, be);
      note_field(a, idx({i, al}), lhs - gcommutator(g_field(s, i), mu_of_h(s, al)));
    }
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j) {
      Derivation lhs(s.A.context());
      for (std::size_t k = 0; k < g; ++k)
        if (s.L.bracket_g(i, j, k) != 0) lhs += g_field(s, k) * s.L.bracket_g(i, j, k);
      note_field(b, idx({i, j}), lhs - gcommutator(g_field(s, i), g_field(s, j)));
    }
  r.add(c.to_check("(c)", "mu(delta w) = [Q_A, mu(w)]"));
  r.add(d.to_check("(d)", "[Q_A, mu(v)] = 0"));
  r.add(a.to_check("(a)", "mu[v,w] = [mu(v), mu(w)]"));
  r.add(b.to_check("(b)", "mu[v1,v2] = [mu(v1), mu(v2)]"));
  return r;
}

Report validate_action_classical(const StrictActionData& s) {
  check_action_shapes(s);
  Report r("strict action (classical conditions)");
  const auto& A = s.A;
  const auto& ctx = A.context();
  const std::size_t h = s.L.dim_h, g = s.L.dim_g, n = A.base_dim(), rk = A.rank();
  // Operators on sections of A induced by mu(v_i).
  std::vector<CDOData> Y;
  for (std::size_t i = 0; i < g; ++i) Y.push_back(dual_cdo(vf_to_cdo(s.mu_g[i], n, rk)));
  auto combo = [&](auto coeff) {
    CDOData out{std::vector<std::vector<GradedPoly>>(rk, std::vector<GradedPoly>(rk, GradedPoly(ctx))),
                std::vector<GradedPoly>(n, GradedPoly(ctx))};
    for (std::size_t i = 0; i < g; ++i) {
      const Rational c = coeff(i);
      if (c == 0) continue;
      for (std::size_t al = 0; al < n; ++al) out.symbol[al] += Y[i].symbol[al] * c;
      for (std::size_t p = 0; p < rk; ++p)
        for (std::size_t q = 0; q < rk; ++q) out.matrix[p][q] += Y[i].matrix[p][q] * c;
    }
    return out;
  };
  auto frame = [&](std::size_t a) { return Section::basis(ctx, rk, a); };
  auto note_section = [](FailureLog& log, const std::string& where, const Section& x, const Section& y) {
    for (std::size_t k = 0; k < x.coeffs.size(); ++k) log.note(where + " component " + std::to_string(k), x.coeffs[k] - y.coeffs[k]);
  };
  // anchor of a section as a vector field on the base
  auto anchor_field = [&](const Section& x) {
    std::vector<GradedPoly> v(n, GradedPoly(ctx));
    for (std::size_t al = 0; al < n; ++al) v[al] = anchor_apply(A, x, GradedPoly::variable(ctx, A.base_var(al)));
    return v;
  };

  FailureLog deriv, anchor, hom, inner, morph, equiv;
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t a = 0; a < rk; ++a)
      for (std::size_t b = a + 1; b < rk; ++b) {
        const Section lhs = apply_cdo(Y[i], section_bracket(A, frame(a), frame(b)));
        Section rhs = section_bracket(A, apply_cdo(Y[i], frame(a)), frame(b));
        const Section t = section_bracket(A, frame(a), apply_cdo(Y[i], frame(b)));
        for (std::size_t k = 0; k < rk; ++k) rhs.coeffs[k] += t.coeffs[k];
        note_section(deriv, idx({i, a, b}), lhs, rhs);
      }
    for (std::size_t a = 0; a < rk; ++a) {
      const auto lhs = anchor_field(apply_cdo(Y[i], frame(a)));
      const auto ra = anchor_field(frame(a));
      for (std::size_t al = 0; al < n; ++al) {
        const GradedPoly rhs = apply_symbol(Y[i].symbol, ra[al]) - apply_symbol(ra, Y[i].symbol[al]);
        anchor.note(idx({i, a, al}), lhs[al] - rhs);
      }
    }
  }
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j) {
      const CDOData lhs = combo([&](std::size_t k) { return s.L.bracket_g(i, j, k); });
      const CDOData rhs = cdo_commutator(Y[i], Y[j]);
      for (std::size_t al = 0; al < n; ++al) hom.note(idx({i, j}) + " symbol " + std::to_string(al), lhs.symbol[al] - rhs.symbol[al]);
      for (std::size_t p = 0; p < rk; ++p)
        for (std::size_t q = 0; q < rk; ++q) hom.note(idx({i, j, p, q}), lhs.matrix[p][q] - rhs.matrix[p][q]);
    }
  for (std::size_t al = 0; al < h; ++al) {
    const CDOData yd = combo([&](std::size_t i) { return s.L.delta(al, i); });
    const auto sym = anchor_field(s.mu_h[al]);
    for (std::size_t be = 0; be < n; ++be) inner.note(idx({al}) + " symbol " + std::to_string(be), yd.symbol[be] - sym[be]);
    for (std::size_t a = 0; a < rk; ++a)
      note_section(inner, idx({al, a}), apply_cdo(yd, frame(a)), section_bracket(A, s.mu_h[al], frame(a)));
  }
  for (std::size_t al = 0; al < h; ++al)
    for (std::size_t be = 0; be < h; ++be) {
      Section lhs = Section::zero(ctx, rk);
      for (std::size_t ga = 0; ga < h; ++ga) {
        Rational c = 0;
        for (std::size_t i = 0; i < g; ++i) c += s.L.delta(al, i) * s.L.act(i, be, ga);
        if (c == 0) continue;
        for (std::size_t k = 0; k < rk; ++k) lhs.coeffs[k] += s.mu_h[ga].coeffs[k] * c;
      }
      note_section(morph, idx({al, be}), lhs, section_bracket(A, s.mu_h[al], s.mu_h[be]));
    }
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t al = 0; al < h; ++al) {
      Section lhs = Section::zero(ctx, rk);
      for (std::size_t be = 0; be < h; ++be)
        for (std::size_t k = 0; k < rk; ++k)
          if (s.L.act(i, al, be) != 0) lhs.coeffs[k] += s.mu_h[be].coeffs[k] * s.L.act(i, al, be);
      note_section(equiv, idx({i, al}), lhs, apply_cdo(Y[i], s.mu_h[al]));
    }
  r.add(deriv.to_check("g acts by derivations of the bracket", "Y_v[a,b] = [Y_v a, b] + [a, Y_v b]"));
  r.add(anchor.to_check("g preserves the anchor", "rho(Y_v a) = [sym(Y_v), rho(a)]"));
  r.add(hom.to_check("g -> CDO(A) is a Lie morphism", "Y_[v1,v2] = [Y_v1, Y_v2]"));
  r.add(inner.to_check("delta(w) acts as [mu(w), .]_A", "Y_(delta w) = [mu(w), .]_A"));
  r.add(morph.to_check("h_delta -> Gamma(A) is a Lie morphism", "mu[w,w']_delta = [mu(w), mu(w')]_A"));
  r.add(equiv.to_check("mu on h is g-equivariant", "mu[v,w] = Y_v mu(w)"));
  return r;
}

ContextPtr product_context(const StrictActionData& s) {
  std::vector<Variable> vars = lie2_context(s.L.dim_h, s.L.dim_g)->vars();
  for (const auto& v : s.A.context()->vars()) vars.push_back(v);
  return make_context(std::move(vars));
}

Derivation build_Qaction(const StrictActionData& s) {
  check_action_shapes(s);
  const ContextPtr ctx = product_context(s);
  const std::size_t g = s.L.dim_g;
  Derivation q(ctx);
  for (std::size_t i = 0; i < g; ++i) q += GradedPoly::variable(ctx, i) * s.mu_g[i].embed(ctx);
  for (std::size_t a = 0; a < s.L.dim_h; ++a) q -= GradedPoly::variable(ctx, g + a) * mu_of_h(s, a).embed(ctx);
  if (q.degree().value_or(1) != 1) throw std::logic_error("Q_action is not homogeneous of degree 1");
  return q;
}

namespace {

struct DoubleQ {
  Derivation vertical;    // -Q_delta + Q_A
  Derivation horizontal;  // Q_br + Q_action
};

DoubleQ double_q(const StrictActionData& s) {
  const ContextPtr ctx = product_context(s);
  const Lie2Fields f = build_Qdelta_Qbr(s.L);
  // Q_delta enters with a minus sign here.
  return {build_Q(s.A).embed(ctx) - f.q_delta.embed(ctx), f.q_br.embed(ctx) + build_Qaction(s)};
}

}  // namespace

Report check_double_q(const StrictActionData& s) {
  check_action_shapes(s);
  const DoubleQ q = double_q(s);
  Report r("double Q-structure");
  r.add(detail::vanishing_check("[-Q_delta+Q_A, Q_br+Q_action]=0", "[-Q_delta + Q_A, Q_br + Q_action] = 0 (mu respects differentials)",
                                gcommutator(q.vertical, q.horizontal)));
  r.add(detail::vanishing_check("[Q_br+Q_action, Q_br+Q_action]=0", "[Q_br + Q_action, Q_br + Q_action] = 0 (mu respects brackets)",
                                gcommutator(q.horizontal, q.horizontal)));
  r.add(detail::vanishing_check("[-Q_delta+Q_A, -Q_delta+Q_A]=0", "[-Q_delta + Q_A, -Q_delta + Q_A] = 0",
                                gcommutator(q.vertical, q.vertical)));
  return r;
}

Derivation build_Qtotal(const StrictActionData& s) {
  check_action_shapes(s);
  const DoubleQ q = double_q(s);
  return q.vertical + q.horizontal;
}

ContextPtr total_space_context(std::size_t base_dim, std::size_t rank) {
  std::vector<Variable> vars;
  for (std::size_t a = 0; a < base_dim; ++a) vars.push_back({base_name(a), 0});
  for (std::size_t i = 0; i < rank; ++i) vars.push_back({"y" + std::to_string(i + 1), 0});
  return make_context(std::move(vars));
}

MuTilde build_mu_tilde(const StrictActionData& s) {
  check_action_shapes(s);
  const std::size_t n = s.A.base_dim(), rk = s.A.rank();
  MuTilde m{total_space_context(n, rk), {}, {}};
  const auto& ctx = m.ctx;
  auto to_total = [&](const GradedPoly& p) { return p.embed(ctx); };  // base functions only
  for (const auto& sec : s.mu_h) {
    Derivation d(ctx);
    for (std::size_t j = 0; j < rk; ++j) d.set_component(n + j, to_total(sec.coeffs[j]));
    m.h_fields.push_back(std::move(d));
  }
  for (const auto& f : s.mu_g) {
    const CDOData y = vf_to_cdo(f, n, rk);
    Derivation d(ctx);
    for (std::size_t al = 0; al < n; ++al) d.set_component(al, to_total(y.symbol[al]));
    for (std::size_t b = 0; b < rk; ++b) {
      GradedPoly comp(ctx);
      for (std::size_t a = 0; a < rk; ++a) comp += to_total(y.matrix[a][b]) * GradedPoly::variable(ctx, n + a);
      d.set_component(n + b, std::move(comp));
    }
    m.g_fields.push_back(std::move(d));
  }
  return m;
}

Report check_mu_tilde_brackets(const StrictActionData& s) {
  const MuTilde m = build_mu_tilde(s);
  const Tensor3 c = h_semidirect_g(s.L);
  FailureLog log;
  for (std::size_t p = 0; p < m.size(); ++p)
    for (std::size_t q = p + 1; q < m.size(); ++q) {
      Derivation rhs(m.ctx);
      for (std::size_t k = 0; k < m.size(); ++k)
        if (c(p, q, k) != 0) rhs += m.field(k) * c(p, q, k);
      note_field(log, idx({p, q}), gcommutator(m.field(p), m.field(q)) - rhs);
    }
  Report r("induced action on the total space");
  r.add(log.to_check("mu~ preserves brackets", "[mu~(a), mu~(b)] = mu~([a,b]) on h x| g"));
  return r;
}

StrictActionData example_gA(const Tensor3& bracket_g, const LieAlgebroidData& a, const std::vector<Section>& eta) {
  const std::size_t d = bracket_g.dim0();
  if (eta.size() != d) throw InputError("eta needs one section per basis vector");
  const Derivation q = build_Q(a);
  FailureLog log;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const Section br = derived_bracket(q, eta[i], eta[j]);
      for (std::size_t k = 0; k < a.rank(); ++k) {
        GradedPoly rhs(a.context());
        for (std::size_t l = 0; l < d; ++l)
          if (bracket_g(i, j, l) != 0) rhs += eta[l].coeffs[k] * bracket_g(i, j, l);
        log.note(idx({i, j, k}), br.coeffs[k] - rhs);
      }
    }
  if (!log.ok()) {
    Report r("eta");
    r.add(log.to_check("eta preserves brackets", "[eta(v1), eta(v2)]_A = eta[v1,v2]"));
    throw ValidationError("eta is not a Lie algebra morphism into sections", r);
  }
  StrictActionData s{identity_lie2(bracket_g), a, eta, {}};
  for (const auto& e : eta) s.mu_g.push_back(gcommutator(q, section_to_vf(a.context(), e)));
  return s;
}

}  // namespace g2kit
