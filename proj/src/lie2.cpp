#include <g2kit/lie2.hpp>

#include "check_util.hpp"

namespace g2kit {

using detail::FailureLog;
using detail::idx;

void set_antisymmetric(Tensor3& c, std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
  if (i == j && value != 0) throw InputError("bracket of a basis vector with itself must vanish");
  c(i, j, k) = value;
  c(j, i, k) = -value;
}

Report check_lie_bracket(const Tensor3& c, const std::string& label) {
  Report r(label + " Lie algebra");
  const std::size_t d = c.dim0();
  FailureLog anti, jac;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) anti.note(idx({i, j, k}), c(i, j, k) + c(j, i, k));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t l = j + 1; l < d; ++l)
        for (std::size_t m = 0; m < d; ++m) {
          Rational s = 0;
          for (std::size_t p = 0; p < d; ++p) s += c(i, j, p) * c(p, l, m) + c(j, l, p) * c(p, i, m) + c(l, i, p) * c(p, j, m);
          jac.note(idx({i, j, l, m}), s);
        }
  r.add(anti.to_check(label + " antisymmetry", "[x,y] = -[y,x]"));
  r.add(jac.to_check(label + " Jacobi", "[[x,y],z] + [[y,z],x] + [[z,x],y] = 0"));
  return r;
}

namespace {

void check_shapes(const StrictLie2Data& l) {
  if (l.bracket_g.dim0() != l.dim_g || l.bracket_g.dim1() != l.dim_g || l.bracket_g.dim2() != l.dim_g ||
      l.act.dim0() != l.dim_g || l.act.dim1() != l.dim_h || l.act.dim2() != l.dim_h || l.delta.rows() != l.dim_h ||
      l.delta.cols() != l.dim_g) {
    throw std::invalid_argument("strict Lie 2-algebra arrays do not match dim_h/dim_g");
  }
}

void check_shapes(const CrossedModuleData& c) {
  if (c.bracket_g.dim0() != c.dim_g || c.bracket_h.dim0() != c.dim_h || c.alpha.dim0() != c.dim_g ||
      c.alpha.dim1() != c.dim_h || c.delta.rows() != c.dim_h || c.delta.cols() != c.dim_g) {
    throw std::invalid_argument("crossed module arrays do not match dim_h/dim_g");
  }
}

// [[v_i,v_j],w] = [v_i,[v_j,w]] - [v_j,[v_i,w]] for a g-action given by constants a(i,alpha,beta).
Check representation_check(const Tensor3& c, const Tensor3& a, std::size_t g, std::size_t h, std::string name) {
  FailureLog log;
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j)
      for (std::size_t al = 0; al < h; ++al)
        for (std::size_t be = 0; be < h; ++be) {
          Rational s = 0;
          for (std::size_t k = 0; k < g; ++k) s += c(i, j, k) * a(k, al, be);
          for (std::size_t ga = 0; ga < h; ++ga) s -= a(j, al, ga) * a(i, ga, be) - a(i, al, ga) * a(j, ga, be);
          log.note(idx({i, j, al, be}), s);
        }
  return log.to_check(std::move(name), "[[v,v'],w] = [v,[v',w]] - [v',[v,w]]");
}

// delta(act(v_i) w_a) = [v_i, delta w_a]
Check equivariance_check(const Tensor3& c, const Tensor3& a, const RMatrix& d, std::size_t g, std::size_t h, std::string name) {
  FailureLog log;
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t al = 0; al < h; ++al)
      for (std::size_t k = 0; k < g; ++k) {
        Rational s = 0;
        for (std::size_t be = 0; be < h; ++be) s += a(i, al, be) * d(be, k);
        for (std::size_t j = 0; j < g; ++j) s -= d(al, j) * c(i, j, k);
        log.note(idx({i, al, k}), s);
      }
  return log.to_check(std::move(name), "delta [v,w] = [v, delta w]");
}

}  // namespace

Report validate_lie2(const StrictLie2Data& l) {
  check_shapes(l);
  Report r("strict Lie 2-algebra");
  const std::size_t g = l.dim_g, h = l.dim_h;
  r.merge(check_lie_bracket(l.bracket_g, "g"));
  r.add(representation_check(l.bracket_g, l.act, g, h, "module axiom"));
  r.add(equivariance_check(l.bracket_g, l.act, l.delta, g, h, "delta derivation on (v,w)"));
  FailureLog peiffer;
  for (std::size_t al = 0; al < h; ++al)
    for (std::size_t be = al; be < h; ++be)
      for (std::size_t ga = 0; ga < h; ++ga) {
        Rational s = 0;
        for (std::size_t i = 0; i < g; ++i) s += l.delta(al, i) * l.act(i, be, ga) + l.delta(be, i) * l.act(i, al, ga);
        peiffer.note(idx({al, be, ga}), s);
      }
  r.add(peiffer.to_check("delta derivation on (w,w')", "0 = delta [w,w'] = [delta w, w'] + [delta w', w]"));
  r.add("delta^2 = 0", "delta o delta = 0", true, "vacuous for a two-term complex");
  return r;
}

Report validate_crossed_module(const CrossedModuleData& cm) {
  check_shapes(cm);
  Report r("crossed module");
  const std::size_t g = cm.dim_g, h = cm.dim_h;
  r.merge(check_lie_bracket(cm.bracket_h, "h"));
  r.merge(check_lie_bracket(cm.bracket_g, "g"));

  FailureLog morph;
  for (std::size_t a = 0; a < h; ++a)
    for (std::size_t b = a + 1; b < h; ++b)
      for (std::size_t k = 0; k < g; ++k) {
        Rational s = 0;
        for (std::size_t c = 0; c < h; ++c) s += cm.bracket_h(a, b, c) * cm.delta(c, k);
        for (std::size_t i = 0; i < g; ++i)
          for (std::size_t j = 0; j < g; ++j) s -= cm.delta(a, i) * cm.delta(b, j) * cm.bracket_g(i, j, k);
        morph.note(idx({a, b, k}), s);
      }
  r.add(morph.to_check("delta Lie morphism", "delta [w,w']_h = [delta w, delta w']"));
  r.add(representation_check(cm.bracket_g, cm.alpha, g, h, "alpha representation"));

  FailureLog deriv;
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t a = 0; a < h; ++a)
      for (std::size_t b = a + 1; b < h; ++b)
        for (std::size_t e = 0; e < h; ++e) {
          Rational s = 0;
          for (std::size_t c = 0; c < h; ++c)
            s += cm.bracket_h(a, b, c) * cm.alpha(i, c, e) - cm.alpha(i, a, c) * cm.bracket_h(c, b, e) -
                 cm.alpha(i, b, c) * cm.bracket_h(a, c, e);
          deriv.note(idx({i, a, b, e}), s);
        }
  r.add(deriv.to_check("alpha by derivations", "alpha(v)[w,w'] = [alpha(v)w, w'] + [w, alpha(v)w']"));
  r.add(equivariance_check(cm.bracket_g, cm.alpha, cm.delta, g, h, "equivariance"));

  FailureLog peiffer;
  for (std::size_t a = 0; a < h; ++a)
    for (std::size_t b = 0; b < h; ++b)
      for (std::size_t c = 0; c < h; ++c) {
        Rational s = -cm.bracket_h(a, b, c);
        for (std::size_t i = 0; i < g; ++i) s += cm.delta(a, i) * cm.alpha(i, b, c);
        peiffer.note(idx({a, b, c}), s);
      }
  r.add(peiffer.to_check("Peiffer identity", "alpha(delta w) w' = [w,w']_h"));
  return r;
}

CrossedModuleData to_crossed_module(const StrictLie2Data& l) {
  Report rep = validate_lie2(l);
  if (!rep.passed()) throw ValidationError("strict Lie 2-algebra is invalid", rep);
  CrossedModuleData cm(l.dim_h, l.dim_g);
  cm.bracket_g = l.bracket_g;
  cm.alpha = l.act;
  cm.delta = l.delta;
  for (std::size_t a = 0; a < l.dim_h; ++a)
    for (std::size_t b = 0; b < l.dim_h; ++b)
      for (std::size_t c = 0; c < l.dim_h; ++c) {
        Rational s = 0;
        for (std::size_t i = 0; i < l.dim_g; ++i) s += l.delta(a, i) * l.act(i, b, c);
        cm.bracket_h(a, b, c) = s;
      }
  return cm;
}

StrictLie2Data from_crossed_module(const CrossedModuleData& cm) {
  Report rep = validate_crossed_module(cm);
  if (!rep.passed()) throw ValidationError("crossed module is invalid", rep);
  StrictLie2Data l(cm.dim_h, cm.dim_g);
  l.bracket_g = cm.bracket_g;
  l.act = cm.alpha;
  l.delta = cm.delta;
  return l;
}

ContextPtr lie2_context(std::size_t dim_h, std::size_t dim_g) {
  std::vector<Variable> vars;
  for (std::size_t i = 0; i < dim_g; ++i) vars.push_back({"eta" + std::to_string(i + 1), 1});
  for (std::size_t a = 0; a < dim_h; ++a) vars.push_back({"P" + std::to_string(a + 1), 2});
  return make_context(std::move(vars));
}

Lie2Fields build_Qdelta_Qbr(const StrictLie2Data& l) {
  check_shapes(l);
  const ContextPtr ctx = lie2_context(l.dim_h, l.dim_g);
  const std::size_t g = l.dim_g, h = l.dim_h;
  auto eta = [&](std::size_t i) { return GradedPoly::variable(ctx, i); };
  auto P = [&](std::size_t a) { return GradedPoly::variable(ctx, g + a); };
  Lie2Fields f{Derivation(ctx), Derivation(ctx)};
  for (std::size_t k = 0; k < g; ++k) {
    GradedPoly qd(ctx), qb(ctx);
    for (std::size_t a = 0; a < h; ++a)
      if (l.delta(a, k) != 0) qd -= P(a) * l.delta(a, k);
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = i + 1; j < g; ++j)
        if (l.bracket_g(i, j, k) != 0) qb -= eta(i) * eta(j) * l.bracket_g(i, j, k);
    f.q_delta.set_component(k, std::move(qd));
    f.q_br.set_component(k, std::move(qb));
  }
  for (std::size_t b = 0; b < h; ++b) {
    GradedPoly qb(ctx);
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t a = 0; a < h; ++a)
        if (l.act(i, a, b) != 0) qb -= eta(i) * P(a) * l.act(i, a, b);
    f.q_br.set_component(g + b, std::move(qb));
  }
  return f;
}

StrictLie2Data lie2_from_Q(const Derivation& q, std::size_t dim_h, std::size_t dim_g) {
  const ContextPtr ctx = lie2_context(dim_h, dim_g);
  if (!q.context()->same_as(*ctx)) throw InputError("field does not live on the chart of a 2-term complex of these dimensions");
  const Derivation qq = q.embed(ctx);
  const std::size_t g = dim_g, h = dim_h;
  StrictLie2Data l(h, g);
  // Linear and quadratic Taylor coefficients Q^k_i, Q^k_ij with
  // delta e_i = (-1)^|e_i| Q^k_i e_k and [e_i,e_j] = (-1)^|e_j| Q^k_ij e_k.
  for (std::size_t k = 0; k < g; ++k) {
    const GradedPoly& comp = qq.component(k);
    for (std::size_t a = 0; a < h; ++a) l.delta(a, k) = -comp.partial(g + a).constant_term();
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = i + 1; j < g; ++j)
        set_antisymmetric(l.bracket_g, i, j, k, comp.partial(j).partial(i).constant_term());
  }
  for (std::size_t b = 0; b < h; ++b) {
    const GradedPoly& comp = qq.component(g + b);
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t a = 0; a < h; ++a) l.act(i, a, b) = -comp.partial(g + a).partial(i).constant_term();
  }
  const Lie2Fields f = build_Qdelta_Qbr(l);
  if (!(f.q_delta + f.q_br == qq)) throw InputError("field is not at most quadratic of strict 2-term shape");
  return l;
}

Report check_qalgebra(const StrictLie2Data& l) {
  const Lie2Fields f = build_Qdelta_Qbr(l);
  Report r("Q-algebra");
  r.add(detail::vanishing_check("[Q_br,Q_br]=0", "[Q_br, Q_br] = 0 (graded Jacobi, module axiom)", gcommutator(f.q_br, f.q_br)));
  r.add(detail::vanishing_check("[Q_delta,Q_delta]=0", "[Q_delta, Q_delta] = 0", gcommutator(f.q_delta, f.q_delta)));
  r.add(detail::vanishing_check("[Q_br,Q_delta]=0", "[Q_br, -Q_delta] = 0 (delta is a derivation of the bracket)",
                                gcommutator(f.q_br, f.q_delta)));
  return r;
}

Tensor3 h_semidirect_g(const StrictLie2Data& l) {
  check_shapes(l);
  const std::size_t h = l.dim_h, g = l.dim_g, n = h + g;
  Tensor3 c(n, n, n);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j)
      for (std::size_t k = 0; k < g; ++k) c(h + i, h + j, h + k) = l.bracket_g(i, j, k);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t a = 0; a < h; ++a)
      for (std::size_t b = 0; b < h; ++b) {
        c(h + i, a, b) = l.act(i, a, b);
        c(a, h + i, b) = -l.act(i, a, b);
      }
  return c;
}

StrictLie2Data identity_lie2(const Tensor3& bracket_g) {
  const std::size_t d = bracket_g.dim0();
  StrictLie2Data l(d, d);
  l.bracket_g = bracket_g;
  l.act = bracket_g;
  for (std::size_t i = 0; i < d; ++i) l.delta(i, i) = 1;
  return l;
}

}  // namespace g2kit
