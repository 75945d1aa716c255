#include <g2kit/catalog.hpp>
#include <g2kit/integrate.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace g2kit {

namespace {

double max_abs(const Vec& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }
double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

struct MaxResidual {
  double value = 0.0;
  void add(double r) { value = std::isnan(r) ? r : (std::isnan(value) ? value : std::max(value, r)); }
};

Vec eval_section(const Section& s, const Vec& x) {
  Vec out(static_cast<long>(s.coeffs.size()));
  const std::span<const double> pt(x.data(), static_cast<std::size_t>(x.size()));
  for (std::size_t j = 0; j < s.coeffs.size(); ++j) out(static_cast<long>(j)) = s.coeffs[j].evaluate(pt);
  return out;
}

Vec delta_of(const StrictLie2Data& l, const Vec& w) {
  Vec out = Vec::Zero(static_cast<long>(l.dim_g));
  for (std::size_t a = 0; a < l.dim_h; ++a)
    for (std::size_t i = 0; i < l.dim_g; ++i) out(static_cast<long>(i)) += l.delta(a, i).get_d() * w(static_cast<long>(a));
  return out;
}

/// Base part of mu(v) at x, i.e. the fundamental vector field of v on M.
Vec base_generator(const StrictActionData& S, const Vec& v, const Vec& x) {
  const std::size_t n = S.A.base_dim();
  Vec out = Vec::Zero(static_cast<long>(n));
  const std::span<const double> pt(x.data(), static_cast<std::size_t>(x.size()));
  for (std::size_t i = 0; i < S.L.dim_g; ++i)
    for (std::size_t al = 0; al < n; ++al) out(static_cast<long>(al)) += v(static_cast<long>(i)) * S.mu_g[i].component(al).evaluate(pt);
  return out;
}

Vec anchor_at(const LieAlgebroidData& A, const Vec& x, const Vec& a) {
  Vec out = Vec::Zero(static_cast<long>(A.base_dim()));
  const std::span<const double> pt(x.data(), static_cast<std::size_t>(x.size()));
  for (std::size_t i = 0; i < A.rank(); ++i)
    for (std::size_t al = 0; al < A.base_dim(); ++al) out(static_cast<long>(al)) += a(static_cast<long>(i)) * A.rho(i, al).evaluate(pt);
  return out;
}

double distance(const BundlePoint& p, const BundlePoint& q) { return std::max(max_abs(Vec(p.x - q.x)), max_abs(Vec(p.a - q.a))); }

Mat adjoint_matrix(const GroupCrossedModule& cm, const Mat& g) {
  const std::size_t d = cm.h.dim();
  Mat m(static_cast<long>(d), static_cast<long>(d));
  for (std::size_t i = 0; i < d; ++i) m.col(static_cast<long>(i)) = cm.act_h(g, Vec::Unit(static_cast<long>(d), static_cast<long>(i)));
  return m;
}

// H3 coordinates (x1, x2, x3) ~ [[1,x1,x3],[0,1,x2],[0,0,1]]
Mat heis_matrix(const Vec& x) {
  Mat m = Mat::Identity(3, 3);
  m(0, 1) = x(0);
  m(1, 2) = x(1);
  m(0, 2) = x(2);
  return m;
}

Vec heis_coords(const Mat& m) {
  Vec x(3);
  x << m(0, 1), m(1, 2), m(0, 2);
  return x;
}

Mat heis_jacobian(const Mat& g) {
  Mat j = Mat::Identity(3, 3);
  j(2, 1) = g(0, 1);
  return j;
}

Vec unit_vec(std::size_t n, std::size_t i) { return Vec::Unit(static_cast<long>(n), static_cast<long>(i)); }

}  // namespace

BundlePoint IntegrationSetup::psi(const Mat& g, const BundlePoint& p) const { return {psi_base(g, p.x), psi_fiber(g, p.x) * p.a}; }

Vec IntegrationSetup::mu_at(const Vec& w, const Vec& x) const {
  Vec out = Vec::Zero(static_cast<long>(S.A.rank()));
  for (std::size_t b = 0; b < S.mu_h.size(); ++b) out += w(static_cast<long>(b)) * eval_section(S.mu_h[b], x);
  return out;
}

BundlePoint IntegrationSetup::random_point(std::mt19937_64& rng) const {
  return {random_vector(S.A.base_dim(), rng, point_scale), random_vector(S.A.rank(), rng, 1.0)};
}

std::vector<std::string> integration_names() { return {"tm", "adjoint", "heisenberg", "ga-sl2"}; }

IntegrationSetup integration_setup(std::string_view name) {
  const auto names = integration_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw InputError("unknown integration example \"" + std::string(name) + "\"");
  const std::string cm_name = name == "tm" ? "abelian" : name == "heisenberg" ? "heisenberg" : "sl2";
  IntegrationSetup s{.name = std::string(name), .S = catalog::action(name), .cm = group_crossed_module(cm_name)};
  if (name == "tm") {
    s.psi_base = [](const Mat& g, const Vec& x) { return Vec(x.array() + g(0, 1)); };
    s.psi_fiber = [](const Mat&, const Vec&) { return Mat(Mat::Identity(1, 1)); };
    s.base_tangent = [](const Mat&, const Vec&, const Vec& v) { return v; };
    s.gamma = pair_groupoid(1);
    s.phi_g = [](const Mat& g, const GroupoidElement& y) {
      return GroupoidElement{GroupoidKind::Pair, Mat(), Vec(y.m1.array() + g(0, 1)), Vec(y.m2.array() + g(0, 1))};
    };
    s.phi_h = [](const Mat& h, const GroupoidElement& y) {
      return GroupoidElement{GroupoidKind::Pair, Mat(), Vec(y.m1.array() + h(0, 1)), y.m2};
    };
  } else if (name == "heisenberg") {
    s.psi_base = [](const Mat& g, const Vec& x) { return heis_coords(g * heis_matrix(x)); };
    s.psi_fiber = [](const Mat& g, const Vec&) { return heis_jacobian(g); };
    s.base_tangent = [](const Mat& g, const Vec&, const Vec& v) { return Vec(heis_jacobian(g) * v); };
    s.gamma = pair_groupoid(3);
    s.phi_g = [](const Mat& g, const GroupoidElement& y) {
      return GroupoidElement{GroupoidKind::Pair, Mat(), heis_coords(g * heis_matrix(y.m1)), heis_coords(g * heis_matrix(y.m2))};
    };
    s.phi_h = [](const Mat& h, const GroupoidElement& y) {
      return GroupoidElement{GroupoidKind::Pair, Mat(), heis_coords(h * heis_matrix(y.m1)), y.m2};
    };
  } else if (name == "adjoint" || name == "ga-sl2") {
    const GroupCrossedModule cm = s.cm;
    s.psi_fiber = [cm](const Mat& g, const Vec&) { return adjoint_matrix(cm, g); };
    if (name == "adjoint") {
      s.psi_base = [](const Mat&, const Vec& x) { return x; };
      s.base_tangent = [](const Mat&, const Vec&, const Vec& v) { return v; };
      s.gamma = group_as_groupoid(cm.g);
      s.phi_g = [](const Mat& g, const GroupoidElement& y) {
        return GroupoidElement{GroupoidKind::Group, Mat(g * y.g * g.inverse()), Vec(), Vec()};
      };
      s.phi_h = [](const Mat& h, const GroupoidElement& y) { return GroupoidElement{GroupoidKind::Group, Mat(h * y.g), Vec(), Vec()}; };
    } else {
      s.psi_base = [](const Mat& g, const Vec& x) { return Vec(g * x); };
      s.base_tangent = [](const Mat& g, const Vec&, const Vec& v) { return Vec(g * v); };
      s.gamma = action_groupoid(cm.g, 2, [](const Mat& g, const Vec& m) { return Vec(g * m); });
      s.phi_g = [](const Mat& g, const GroupoidElement& y) {
        return GroupoidElement{GroupoidKind::Action, Mat(g * y.g * g.inverse()), Vec(g * y.m1), Vec()};
      };
      s.phi_h = [](const Mat& h, const GroupoidElement& y) { return GroupoidElement{GroupoidKind::Action, Mat(h * y.g), y.m1, Vec()}; };
    }
    s.gamma.sample_scale = cm.sample_scale;
  }
  return s;
}

Report check_setup(const IntegrationSetup& s, const SamplingOptions& opt) {
  Report r("integration setup: " + s.name);
  const bool same = s.S.L == s.cm.lie2;
  r.add({"Lie 2-algebra of the crossed module", "L = Lie(H -> G)", same, std::nullopt,
         same ? "" : "the action's Lie 2-algebra differs from the one of the crossed module"});
  std::mt19937_64 rng(opt.seed);
  const MuTilde mt = build_mu_tilde(s.S);
  const std::size_t n = s.S.A.base_dim(), rk = s.S.A.rank(), dg = s.cm.g.dim();
  MaxResidual gen;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const Mat g = random_group_element(s.cm.g, rng, s.cm.sample_scale);
    const BundlePoint p = s.psi(g, s.random_point(rng));
    std::vector<double> pt(n + rk);
    for (std::size_t al = 0; al < n; ++al) pt[al] = p.x(static_cast<long>(al));
    for (std::size_t j = 0; j < rk; ++j) pt[n + j] = p.a(static_cast<long>(j));
    for (std::size_t i = 0; i < dg; ++i) {
      const Vec v = unit_vec(dg, i);
      const BundlePoint plus = s.psi(s.cm.exp_g(opt.fd_step * v), p), minus = s.psi(s.cm.exp_g(-opt.fd_step * v), p);
      const Derivation& f = mt.g_fields[i];
      for (std::size_t al = 0; al < n; ++al) {
        const double fd = (plus.x(static_cast<long>(al)) - minus.x(static_cast<long>(al))) / (2 * opt.fd_step);
        gen.add(std::fabs(fd - f.component(al).evaluate(pt)));
      }
      for (std::size_t j = 0; j < rk; ++j) {
        const double fd = (plus.a(static_cast<long>(j)) - minus.a(static_cast<long>(j))) / (2 * opt.fd_step);
        gen.add(std::fabs(fd - f.component(n + j).evaluate(pt)));
      }
    }
  }
  r.add_residual("psi integrates mu~ on g", "d/dt psi(exp(tv), p) = mu~(v)_p", gen.value, opt.fd_tol);
  return r;
}

BundlePoint PsiAction::operator()(const LAGroupElement& p, const BundlePoint& q) const {
  BundlePoint out = setup.psi(p.g, q);
  out.a += setup.mu_at(p.w, out.x);
  return out;
}

PsiAction build_psi(const IntegrationSetup& s) {
  check_action_shapes(s.S);
  return PsiAction{s};
}

Report check_psi_action_law(const PsiAction& psi, const SamplingOptions& opt) {
  const IntegrationSetup& s = psi.setup;
  const GroupCrossedModule& cm = s.cm;
  std::mt19937_64 rng(opt.seed);
  const std::size_t dh = cm.h.dim();
  MaxResidual law, unit, equiv;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const LAGroupElement p{random_vector(dh, rng, 1.0), random_group_element(cm.g, rng, cm.sample_scale)};
    const LAGroupElement q{random_vector(dh, rng, 1.0), random_group_element(cm.g, rng, cm.sample_scale)};
    const BundlePoint a = s.random_point(rng);
    law.add(distance(psi(la_group_mul(cm, p, q), a), psi(p, psi(q, a))));
    unit.add(distance(psi({Vec::Zero(static_cast<long>(dh)), cm.identity_g()}, a), a));
    const Vec w = random_vector(dh, rng, 1.0);
    const Vec lhs = s.psi_fiber(p.g, a.x) * s.mu_at(w, a.x);
    const Vec rhs = s.mu_at(cm.act_h(p.g, w), s.psi_base(p.g, a.x));
    equiv.add(max_abs(Vec(lhs - rhs)));
  }
  Report r("LA-group action: " + s.name);
  r.set_meta("samples", std::to_string(opt.samples));
  r.add_residual("Psi action law", "Psi(pq, a) = Psi(p, Psi(q, a))", law.value, opt.tol);
  r.add_residual("Psi unit", "Psi((0,e), a) = a", unit.value, opt.tol);
  r.add_residual("equivariance of mu on h", "psi(g, mu(w)_x) = mu(g.w)_{gx}", equiv.value, opt.tol);
  return r;
}

Report check_psi_anchor(const PsiAction& psi, const SamplingOptions& opt) {
  const IntegrationSetup& s = psi.setup;
  const GroupCrossedModule& cm = s.cm;
  std::mt19937_64 rng(opt.seed + 1);
  MaxResidual res;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const LAGroupElement p{random_vector(cm.h.dim(), rng, 1.0), random_group_element(cm.g, rng, cm.sample_scale)};
    const BundlePoint a = s.random_point(rng);
    const BundlePoint image = psi(p, a);
    const Vec lhs = anchor_at(s.S.A, image.x, image.a);
    const Vec rhs = base_generator(s.S, delta_of(cm.lie2, p.w), image.x) + s.base_tangent(p.g, a.x, anchor_at(s.S.A, a.x, a.a));
    res.add(max_abs(Vec(lhs - rhs)));
  }
  Report r("LA-group action anchor: " + s.name);
  r.add_residual("Psi preserves anchors", "rho(Psi((w,g), a_x)) = (delta w)_M(gx) + g.rho(a_x)", res.value, opt.tol);
  return r;
}

Mat frame_transport(const IntegrationSetup& s, const Mat& g, const Vec& x) {
  return s.psi_fiber(g.inverse(), s.psi_base(g, x));
}

Report check_psi_bracket(const PsiAction& psi, const SamplingOptions& opt) {
  const IntegrationSetup& s = psi.setup;
  const GroupCrossedModule& cm = s.cm;
  const std::size_t rk = s.S.A.rank(), dh = cm.h.dim();
  std::mt19937_64 rng(opt.seed + 2);

  // exact brackets [mu(w_b), a_i]_A
  std::vector<std::vector<Section>> br(dh);
  for (std::size_t b = 0; b < dh; ++b)
    for (std::size_t i = 0; i < rk; ++i) br[b].push_back(section_bracket(s.S.A, s.S.mu_h[b], Section::basis(s.S.A.context(), rk, i)));

  MaxResidual mult, hell;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const Mat g = random_group_element(cm.g, rng, cm.sample_scale), h = random_group_element(cm.g, rng, cm.sample_scale);
    const Vec x = s.random_point(rng).x;
    mult.add(max_abs(Mat(frame_transport(s, g * h, x) - frame_transport(s, h, x) * frame_transport(s, g, s.psi_base(h, x)))));

    const std::size_t b = k % dh;
    const Vec dw = delta_of(cm.lie2, unit_vec(dh, b));
    const Mat plus = frame_transport(s, cm.exp_g(opt.fd_step * dw) * g, x);
    const Mat minus = frame_transport(s, cm.exp_g(-opt.fd_step * dw) * g, x);
    const Mat lhs = (plus - minus) / (2 * opt.fd_step);
    const Vec gx = s.psi_base(g, x);
    const Mat back = s.psi_fiber(g.inverse(), gx);
    for (std::size_t i = 0; i < rk; ++i) {
      const Vec rhs = back * eval_section(br[b][i], gx);
      hell.add(max_abs(Vec(lhs.col(static_cast<long>(i)) - rhs)));
    }
  }
  Report r("LA-group action brackets: " + s.name);
  r.add_residual("multiplicativity of frame transport", "f(gh,x) = f(g,hx) f(h,x)", mult.value, opt.tol);
  r.add_residual("constant sections act through mu", "[w, phi(a)]_E = phi([mu(w), a]_A)", hell.value, opt.fd_tol);
  return r;
}

GroupoidElement PhiAction::operator()(const TwoGroupElement& p, const GroupoidElement& gamma) const {
  return setup.phi_h(p.h, setup.phi_g(p.g, gamma));
}

PhiAction build_phi(const IntegrationSetup& s) { return PhiAction{s}; }

Report check_phi_2group_action(const PhiAction& phi, const SamplingOptions& opt) {
  const IntegrationSetup& s = phi.setup;
  const GroupCrossedModule& cm = s.cm;
  const Groupoid& G = s.gamma;
  std::mt19937_64 rng(opt.seed + 3);
  auto rand2 = [&] { return TwoGroupElement{random_group_element(cm.h, rng, cm.sample_scale), random_group_element(cm.g, rng, cm.sample_scale)}; };
  MaxResidual ident, law, morph, st;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const TwoGroupElement p = rand2(), q = rand2();
    const GroupoidElement y2 = G.random(rng);
    const GroupoidElement y1 = G.random_with_source(rng, G.target(y2));
    ident.add(G.distance(phi(twogroup_identity(cm), y1), y1));
    law.add(G.distance(phi(twogroup_mul(cm, p, q), y1), phi(p, phi(q, y1))));

    const TwoGroupElement pc{p.h, twogroup_target(cm, q)};
    const GroupoidElement lhs = phi(twogroup_compose(cm, pc, q), G.compose(y1, y2));
    const GroupoidElement rhs = G.compose(phi(pc, y1), phi(q, y2), 1e-6);
    morph.add(G.distance(lhs, rhs));

    const GroupoidElement im = phi(p, y1);
    st.add(max_abs(Vec(G.source(im) - s.psi_base(twogroup_source(p), G.source(y1)))));
    st.add(max_abs(Vec(G.target(im) - s.psi_base(twogroup_target(cm, p), G.target(y1)))));
  }
  Report r("2-group action: " + s.name);
  r.set_meta("samples", std::to_string(opt.samples));
  r.add_residual("Phi unit", "Phi((e,e), gamma) = gamma", ident.value, opt.tol);
  r.add_residual("Phi action law", "Phi(pq, gamma) = Phi(p, Phi(q, gamma))", law.value, opt.tol);
  r.add_residual("Phi groupoid morphism", "Phi(p o q, gamma1 o gamma2) = Phi(p, gamma1) o Phi(q, gamma2)", morph.value, opt.tol);
  r.add_residual("Phi covers psi on objects", "s(Phi(p,gamma)) = psi(s p, s gamma), t likewise", st.value, opt.tol);
  return r;
}

GroupoidElement source_fiber_curve(const Groupoid& G, const Vec& x, const Vec& a, double t) {
  switch (G.kind) {
    case GroupoidKind::Pair: return {G.kind, Mat(), Vec(x + t * a), x};
    case GroupoidKind::Action: return {G.kind, expm(G.algebra.element(t * a), G.algebra.nilpotent), x, Vec()};
    case GroupoidKind::Group: return {G.kind, expm(G.algebra.element(t * a), G.algebra.nilpotent), Vec(), Vec()};
  }
  return {};
}

Vec unit_tangent(const Groupoid& G, const GroupoidElement& plus, const GroupoidElement& minus, double step) {
  switch (G.kind) {
    case GroupoidKind::Pair: return (plus.m1 - minus.m1) / (2 * step);
    case GroupoidKind::Action:
    case GroupoidKind::Group: return G.algebra.coords(Mat((plus.g - minus.g) / (2 * step)));
  }
  return {};
}

Report check_phi_differentiates_to_psi(const PhiAction& phi, const PsiAction& psi, const SamplingOptions& opt) {
  const IntegrationSetup& s = phi.setup;
  const GroupCrossedModule& cm = s.cm;
  const Groupoid& G = s.gamma;
  std::mt19937_64 rng(opt.seed + 4);
  const double e = opt.fd_step;
  MaxResidual units, deriv;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const Mat g = random_group_element(cm.g, rng, cm.sample_scale);
    const Vec w = random_vector(cm.h.dim(), rng, 1.0);
    const BundlePoint a = s.random_point(rng);
    const GroupoidElement u = phi(twogroup_unit(cm, g), G.unit(a.x));
    units.add(G.distance(u, G.unit(s.psi_base(g, a.x))));
    auto curve = [&](double t) { return phi({cm.exp_h(t * w), g}, source_fiber_curve(G, a.x, a.a, t)); };
    const Vec fd = unit_tangent(G, curve(e), curve(-e), e);
    const BundlePoint image = psi({w, g}, a);
    deriv.add(max_abs(Vec(fd - image.a)));
  }
  Report r("Phi differentiates to Psi: " + s.name);
  r.add_residual("Phi maps units to units", "Phi((e,g), 1_x) = 1_{gx}", units.value, opt.tol);
  r.add_residual("Lie(Phi) = Psi", "d/dt Phi((exp tw, g), gamma_t) = Psi((w,g), a_x)", deriv.value, opt.fd_tol);
  return r;
}

Report check_phi_h_flow(const IntegrationSetup& s, const SamplingOptions& opt, std::size_t steps) {
  const GroupCrossedModule& cm = s.cm;
  const Groupoid& G = s.gamma;
  std::mt19937_64 rng(opt.seed + 5);
  // right-invariant extension of mu(w): acts on the target side of gamma
  auto field = [&](const Vec& w, const GroupoidElement& y) {
    const Vec a = s.mu_at(w, G.target(y));
    GroupoidElement d = y;
    switch (G.kind) {
      case GroupoidKind::Pair:
        d.m1 = a;
        d.m2 = Vec::Zero(y.m2.size());
        break;
      case GroupoidKind::Action:
        d.g = G.algebra.element(a) * y.g;
        d.m1 = Vec::Zero(y.m1.size());
        break;
      case GroupoidKind::Group: d.g = G.algebra.element(a) * y.g; break;
    }
    return d;
  };
  auto axpy = [](const GroupoidElement& y, double c, const GroupoidElement& d) {
    GroupoidElement out = y;
    if (out.g.size()) out.g += c * d.g;
    if (out.m1.size()) out.m1 += c * d.m1;
    if (out.m2.size()) out.m2 += c * d.m2;
    return out;
  };
  MaxResidual res;
  const double dt = 1.0 / static_cast<double>(steps);
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const Vec w = random_vector(cm.h.dim(), rng, cm.sample_scale);
    GroupoidElement y = G.random(rng);
    const GroupoidElement expected = s.phi_h(cm.exp_h(w), y);
    for (std::size_t n = 0; n < steps; ++n) {
      const GroupoidElement k1 = field(w, y);
      const GroupoidElement k2 = field(w, axpy(y, dt / 2, k1));
      const GroupoidElement k3 = field(w, axpy(y, dt / 2, k2));
      const GroupoidElement k4 = field(w, axpy(y, dt, k3));
      y = axpy(axpy(axpy(axpy(y, dt / 6, k1), dt / 3, k2), dt / 3, k3), dt / 6, k4);
    }
    res.add(G.distance(y, expected));
  }
  Report r("H-action as a flow: " + s.name);
  r.add_residual("H acts by right-invariant flows", "Phi((exp w, e), .) = time-1 flow of the right-invariant extension of mu(w)", res.value,
                 opt.fd_tol, "classical RK4, " + std::to_string(steps) + " fixed steps");
  return r;
}

Report check_tm_closed_form(const PhiAction& phi, const SamplingOptions& opt) {
  const IntegrationSetup& s = phi.setup;
  if (s.name != "tm") throw std::invalid_argument("closed form is only available for the tm setup");
  const GroupCrossedModule& cm = s.cm;
  std::mt19937_64 rng(opt.seed + 6);
  MaxResidual closed, product;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const Mat h = random_group_element(cm.h, rng, 1.0), g = random_group_element(cm.g, rng, 1.0);
    const GroupoidElement y = s.gamma.random(rng);
    const GroupoidElement im = phi({h, g}, y);
    closed.add(std::fabs(im.m1(0) - (h(0, 1) + g(0, 1) + y.m1(0))));
    closed.add(std::fabs(im.m2(0) - (g(0, 1) + y.m2(0))));
    // (g1, g2) in G x G corresponds to (h, g) = (g1 g2^-1, g2)
    const Mat g1 = random_group_element(cm.g, rng, 1.0), g2 = random_group_element(cm.g, rng, 1.0);
    const GroupoidElement pr = phi({Mat(g1 * g2.inverse()), g2}, y);
    product.add(std::fabs(pr.m1(0) - (g1(0, 1) + y.m1(0))));
    product.add(std::fabs(pr.m2(0) - (g2(0, 1) + y.m2(0))));
  }
  Report r("closed form on TM: " + s.name);
  r.add_residual("closed form", "Phi((h,g),(m1,m2)) = (hgm1, gm2)", closed.value, 1e-12);
  r.add_residual("product action", "(g1,g2).(m1,m2) = (g1 m1, g2 m2) under (h,g) -> (hg,g)", product.value, 1e-12);
  return r;
}

Report integrate_report(const IntegrationSetup& s, const SamplingOptions& opt, bool psi_only) {
  Report r("integrated action: " + s.name);
  r.set_meta("example", s.name);
  r.set_meta("samples", std::to_string(opt.samples));
  r.set_meta("seed", std::to_string(opt.seed));
  r.merge(check_setup(s, opt), "setup: ");
  const PsiAction psi = build_psi(s);
  r.merge(check_psi_action_law(psi, opt), "Psi: ");
  r.merge(check_psi_anchor(psi, opt), "Psi: ");
  r.merge(check_psi_bracket(psi, opt), "Psi: ");
  if (psi_only) return r;
  const PhiAction phi = build_phi(s);
  r.merge(check_phi_2group_action(phi, opt), "Phi: ");
  r.merge(check_phi_differentiates_to_psi(phi, psi, opt), "Phi: ");
  r.merge(check_phi_h_flow(s, opt), "Phi: ");
  if (s.name == "tm") r.merge(check_tm_closed_form(phi, opt), "Phi: ");
  return r;
}

}  // namespace g2kit
