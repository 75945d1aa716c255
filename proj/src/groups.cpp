#include <g2kit/catalog.hpp>
#include <g2kit/groups.hpp>

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>

namespace g2kit {

namespace {

Mat unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  Mat m = Mat::Zero(static_cast<long>(n), static_cast<long>(n));
  m(static_cast<long>(i), static_cast<long>(j)) = 1.0;
  return m;
}

double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
double max_abs(const Vec& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

}  // namespace

Mat MatrixAlgebra::element(const Vec& c) const {
  if (static_cast<std::size_t>(c.size()) != basis.size()) throw std::invalid_argument("algebra coordinates have the wrong length");
  Mat m = Mat::Zero(static_cast<long>(matrix_size), static_cast<long>(matrix_size));
  for (std::size_t i = 0; i < basis.size(); ++i) m += c(static_cast<long>(i)) * basis[i];
  return m;
}

Vec MatrixAlgebra::coords(const Mat& m) const {
  const long n2 = static_cast<long>(matrix_size * matrix_size);
  Mat b(n2, static_cast<long>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) b.col(static_cast<long>(i)) = basis[i].reshaped();
  const Vec rhs = m.reshaped();
  return b.colPivHouseholderQr().solve(rhs);
}

MatrixAlgebra matrix_algebra(std::string_view tag) {
  MatrixAlgebra a;
  a.tag = std::string(tag);
  if (tag == "abelian1" || tag == "abelian2" || tag == "abelian3") {
    const std::size_t n = static_cast<std::size_t>(tag.back() - '0');
    a.matrix_size = n + 1;
    for (std::size_t i = 0; i < n; ++i) a.basis.push_back(unit_matrix(n + 1, 0, i + 1));
    a.nilpotent = true;
  } else if (tag == "heisenberg") {
    a.matrix_size = 3;
    a.basis = {-unit_matrix(3, 0, 1), -unit_matrix(3, 1, 2), -unit_matrix(3, 0, 2)};
    a.nilpotent = true;
  } else if (tag == "sl2") {
    a.matrix_size = 2;
    Mat h = Mat::Zero(2, 2);
    h(0, 0) = 1;
    h(1, 1) = -1;
    a.basis = {-h, -unit_matrix(2, 0, 1), -unit_matrix(2, 1, 0)};
  } else {
    throw InputError("unknown matrix algebra \"" + std::string(tag) + "\"");
  }
  return a;
}

Mat expm(const Mat& a, bool nilpotent) {
  const long n = a.rows();
  if (nilpotent) {
    Mat sum = Mat::Identity(n, n), term = Mat::Identity(n, n);
    for (long k = 1; k <= n; ++k) {
      term = term * a / static_cast<double>(k);
      sum += term;
    }
    return sum;
  }
  return a.exp();
}

MatrixGroupElement exp_to_group(const Vec& xi, std::string_view tag) {
  const MatrixAlgebra alg = matrix_algebra(tag);
  MatrixGroupElement e{expm(alg.element(xi), alg.nilpotent), alg.tag};
  if (std::fabs(e.matrix.determinant()) <= 1e-10) throw std::runtime_error("exponential produced a singular matrix");
  return e;
}

Vec random_vector(std::size_t n, std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Vec v(static_cast<long>(n));
  for (long i = 0; i < v.size(); ++i) v(i) = u(rng);
  return v;
}

Mat random_group_element(const MatrixAlgebra& alg, std::mt19937_64& rng, double scale) {
  return expm(alg.element(random_vector(alg.dim(), rng, scale)), alg.nilpotent);
}

// --- crossed modules -------------------------------------------------------

std::vector<std::string> crossed_module_names() { return {"abelian", "heisenberg", "sl2", "heisenberg-center"}; }

GroupCrossedModule group_crossed_module(std::string_view name) {
  GroupCrossedModule cm;
  cm.name = std::string(name);
  auto conjugation = [](GroupCrossedModule& c, const Tensor3& bracket) {
    c.t = [](const Mat& h) { return h; };
    c.phi = [](const Mat& g, const Mat& h) { Mat r = g * h * g.inverse(); return r; };
    const MatrixAlgebra alg = c.h;
    c.act_h = [alg](const Mat& g, const Vec& w) { return alg.coords(g * alg.element(w) * g.inverse()); };
    c.lie2 = identity_lie2(bracket);
  };
  if (name == "abelian") {
    cm.g = cm.h = matrix_algebra("abelian1");
    cm.t = [](const Mat& h) { return h; };
    cm.phi = [](const Mat&, const Mat& h) { return h; };
    cm.act_h = [](const Mat&, const Vec& w) { return w; };
    cm.lie2 = identity_lie2(catalog::abelian_bracket(1));
  } else if (name == "heisenberg") {
    cm.g = cm.h = matrix_algebra("heisenberg");
    conjugation(cm, catalog::heisenberg_bracket());
  } else if (name == "sl2") {
    cm.g = cm.h = matrix_algebra("sl2");
    conjugation(cm, catalog::sl2_bracket());
    cm.sample_scale = 0.5;
  } else if (name == "heisenberg-center") {
    cm.g = matrix_algebra("heisenberg");
    cm.h = matrix_algebra("abelian1");
    const MatrixAlgebra g = cm.g;
    cm.t = [g](const Mat& h) {
      Vec z = Vec::Zero(3);
      z(2) = h(0, 1);
      return expm(g.element(z), true);
    };
    cm.phi = [](const Mat&, const Mat& h) { return h; };
    cm.act_h = [](const Mat&, const Vec& w) { return w; };
    cm.lie2 = StrictLie2Data(1, 3);
    cm.lie2.bracket_g = catalog::heisenberg_bracket();
    cm.lie2.delta(0, 2) = 1;
  } else {
    throw InputError("unknown crossed module \"" + std::string(name) + "\"");
  }
  return cm;
}

TwoGroupElement twogroup_mul(const GroupCrossedModule& cm, const TwoGroupElement& a, const TwoGroupElement& b) {
  return {a.h * cm.phi(a.g, b.h), a.g * b.g};
}

TwoGroupElement twogroup_identity(const GroupCrossedModule& cm) { return {cm.identity_h(), cm.identity_g()}; }

Mat twogroup_source(const TwoGroupElement& a) { return a.g; }

Mat twogroup_target(const GroupCrossedModule& cm, const TwoGroupElement& a) { return cm.t(a.h) * a.g; }

TwoGroupElement twogroup_compose(const GroupCrossedModule& cm, const TwoGroupElement& a, const TwoGroupElement& b, double tol) {
  const double gap = max_abs(Mat(twogroup_source(a) - twogroup_target(cm, b)));
  if (!(gap <= tol)) throw std::invalid_argument("2-group elements are not composable (gap " + std::to_string(gap) + ")");
  return {a.h * b.h, b.g};
}

TwoGroupElement twogroup_unit(const GroupCrossedModule& cm, const Mat& g) { return {cm.identity_h(), g}; }

LAGroupElement la_group_mul(const GroupCrossedModule& cm, const LAGroupElement& a, const LAGroupElement& b) {
  return {a.w + cm.act_h(a.g, b.w), a.g * b.g};
}

LAGroupElement la_group_inverse(const GroupCrossedModule& cm, const LAGroupElement& a) {
  const Mat gi = a.g.inverse();
  return {-cm.act_h(gi, a.w), gi};
}

namespace {

// Residual accumulator for sampled identities.
struct MaxResidual {
  double value = 0.0;
  void add(double r) { value = std::isnan(r) ? r : (std::isnan(value) ? value : std::max(value, r)); }
};

Vec lie2_delta(const StrictLie2Data& l, const Vec& w) {
  Vec out = Vec::Zero(static_cast<long>(l.dim_g));
  for (std::size_t a = 0; a < l.dim_h; ++a)
    for (std::size_t i = 0; i < l.dim_g; ++i) out(static_cast<long>(i)) += l.delta(a, i).get_d() * w(static_cast<long>(a));
  return out;
}

Vec lie2_act(const StrictLie2Data& l, std::size_t i, const Vec& w) {
  Vec out = Vec::Zero(static_cast<long>(l.dim_h));
  for (std::size_t a = 0; a < l.dim_h; ++a)
    for (std::size_t b = 0; b < l.dim_h; ++b) out(static_cast<long>(b)) += l.act(i, a, b).get_d() * w(static_cast<long>(a));
  return out;
}

}  // namespace

Report validate_group_crossed_module(const GroupCrossedModule& cm, const SamplingOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  const double sc = cm.sample_scale;
  const double eps = opt.fd_step;
  auto rg = [&] { return random_group_element(cm.g, rng, sc); };
  auto rh = [&] { return random_group_element(cm.h, rng, sc); };
  MaxResidual gax, hax, tmor, phiact, phiaut, equiv, peiffer, assoc2, st, vert, actfd, tfd, genfd, la, labr, compat;
  const std::size_t dg = cm.g.dim(), dh = cm.h.dim();
  for (std::size_t n = 0; n < opt.samples; ++n) {
    const Mat g1 = rg(), g2 = rg(), g3 = rg();
    const Mat h1 = rh(), h2 = rh(), h3 = rh();
    gax.add(max_abs(Mat((g1 * g2) * g3 - g1 * (g2 * g3))));
    gax.add(max_abs(Mat(g1 * g1.inverse() - cm.identity_g())));
    hax.add(max_abs(Mat((h1 * h2) * h3 - h1 * (h2 * h3))));
    hax.add(max_abs(Mat(h1 * h1.inverse() - cm.identity_h())));
    tmor.add(max_abs(Mat(cm.t(h1 * h2) - cm.t(h1) * cm.t(h2))));
    phiact.add(max_abs(Mat(cm.phi(g1 * g2, h1) - cm.phi(g1, cm.phi(g2, h1)))));
    phiact.add(max_abs(Mat(cm.phi(cm.identity_g(), h1) - h1)));
    phiaut.add(max_abs(Mat(cm.phi(g1, h1 * h2) - cm.phi(g1, h1) * cm.phi(g1, h2))));
    equiv.add(max_abs(Mat(cm.t(cm.phi(g1, h1)) - g1 * cm.t(h1) * g1.inverse())));
    peiffer.add(max_abs(Mat(cm.phi(cm.t(h1), h2) - h1 * h2 * h1.inverse())));

    const TwoGroupElement a{h1, g1}, b{h2, g2}, c{h3, g3};
    const TwoGroupElement l = twogroup_mul(cm, twogroup_mul(cm, a, b), c), r = twogroup_mul(cm, a, twogroup_mul(cm, b, c));
    assoc2.add(std::max(max_abs(Mat(l.h - r.h)), max_abs(Mat(l.g - r.g))));
    const TwoGroupElement ab = twogroup_mul(cm, a, b);
    st.add(max_abs(Mat(twogroup_source(ab) - twogroup_source(a) * twogroup_source(b))));
    st.add(max_abs(Mat(twogroup_target(cm, ab) - twogroup_target(cm, a) * twogroup_target(cm, b))));
    // vertical composition: x o y o z with matching sources and targets
    const TwoGroupElement z{h3, g3};
    const TwoGroupElement y{h2, twogroup_target(cm, z)};
    const TwoGroupElement x{h1, twogroup_target(cm, y)};
    const TwoGroupElement v1 = twogroup_compose(cm, twogroup_compose(cm, x, y), z);
    const TwoGroupElement v2 = twogroup_compose(cm, x, twogroup_compose(cm, y, z));
    vert.add(std::max(max_abs(Mat(v1.h - v2.h)), max_abs(Mat(v1.g - v2.g))));
    const TwoGroupElement u = twogroup_compose(cm, twogroup_unit(cm, twogroup_target(cm, z)), z);
    vert.add(std::max(max_abs(Mat(u.h - z.h)), max_abs(Mat(u.g - z.g))));

    // finite-difference consistency with the Lie 2-algebra
    const Vec w = random_vector(dh, rng, 1.0), v = random_vector(dg, rng, 1.0);
    const Mat dphi = (cm.phi(g1, cm.exp_h(eps * w)) - cm.phi(g1, cm.exp_h(-eps * w))) / (2 * eps);
    actfd.add(max_abs(Vec(cm.h.coords(dphi) - cm.act_h(g1, w))));
    const Mat dt = (cm.t(cm.exp_h(eps * w)) - cm.t(cm.exp_h(-eps * w))) / (2 * eps);
    tfd.add(max_abs(Vec(cm.g.coords(dt) - lie2_delta(cm.lie2, w))));
    Vec gen = Vec::Zero(static_cast<long>(dh));
    for (std::size_t i = 0; i < dg; ++i) gen -= v(static_cast<long>(i)) * lie2_act(cm.lie2, i, w);
    const Vec dact = (cm.act_h(cm.exp_g(eps * v), w) - cm.act_h(cm.exp_g(-eps * v), w)) / (2 * eps);
    genfd.add(max_abs(Vec(dact - gen)));

    // LA-group laws
    const LAGroupElement p{random_vector(dh, rng, 1.0), g1}, q{random_vector(dh, rng, 1.0), g2}, s{random_vector(dh, rng, 1.0), g3};
    const LAGroupElement pl = la_group_mul(cm, la_group_mul(cm, p, q), s), pr = la_group_mul(cm, p, la_group_mul(cm, q, s));
    la.add(std::max(max_abs(Vec(pl.w - pr.w)), max_abs(Mat(pl.g - pr.g))));
    const LAGroupElement pi = la_group_mul(cm, p, la_group_inverse(cm, p));
    la.add(std::max(max_abs(pi.w), max_abs(Mat(pi.g - cm.identity_g()))));

    // H-part of the 2-group product differentiates to the LA-group product
    const Vec w1 = random_vector(dh, rng, 1.0), w2 = random_vector(dh, rng, 1.0);
    auto hpart = [&](double e) {
      return twogroup_mul(cm, {cm.exp_h(e * w1), g1}, {cm.exp_h(e * w2), g2}).h;
    };
    const Vec dh_coords = cm.h.coords(Mat((hpart(eps) - hpart(-eps)) / (2 * eps)));
    compat.add(max_abs(Vec(dh_coords - la_group_mul(cm, {w1, g1}, {w2, g2}).w)));
  }

  // semidirect bracket from the LA-group commutator
  const Tensor3 semi = h_semidirect_g(cm.lie2);
  const std::size_t N = dh + dg;
  auto curve = [&](std::size_t k, double s) -> LAGroupElement {
    Vec w = Vec::Zero(static_cast<long>(dh));
    Vec v = Vec::Zero(static_cast<long>(dg));
    if (k < dh) w(static_cast<long>(k)) = s;
    else v(static_cast<long>(k - dh)) = s;
    return {w, cm.exp_g(v)};
  };
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = 0; q < N; ++q) {
      auto conj = [&](double s, double t) {
        const LAGroupElement a = curve(p, s);
        const LAGroupElement c = la_group_mul(cm, la_group_mul(cm, a, curve(q, t)), la_group_inverse(cm, a));
        Vec out(static_cast<long>(N));
        out.head(static_cast<long>(dh)) = c.w;
        out.tail(static_cast<long>(dg)) = cm.g.coords(Mat(c.g - cm.identity_g()));
        return out;
      };
      const Vec mixed = (conj(eps, eps) - conj(eps, -eps) - conj(-eps, eps) + conj(-eps, -eps)) / (4 * eps * eps);
      for (std::size_t k = 0; k < N; ++k) labr.add(std::fabs(-mixed(static_cast<long>(k)) - semi(p, q, k).get_d()));
    }

  Report r("crossed module of Lie groups: " + cm.name);
  r.set_meta("samples", std::to_string(opt.samples));
  r.set_meta("seed", std::to_string(opt.seed));
  r.add_residual("G group axioms", "(g1 g2) g3 = g1 (g2 g3), g g^-1 = e", gax.value, opt.tol);
  r.add_residual("H group axioms", "(h1 h2) h3 = h1 (h2 h3), h h^-1 = e", hax.value, opt.tol);
  r.add_residual("t homomorphism", "t(h h') = t(h) t(h')", tmor.value, opt.tol);
  r.add_residual("phi is an action", "phi(g1 g2) = phi(g1) phi(g2), phi(e) = id", phiact.value, opt.tol);
  r.add_residual("phi by automorphisms", "phi(g)(h h') = phi(g)(h) phi(g)(h')", phiaut.value, opt.tol);
  r.add_residual("equivariance", "t(phi(g) h) = g t(h) g^-1", equiv.value, opt.tol);
  r.add_residual("Peiffer", "phi(t(h)) h' = h h' h^-1", peiffer.value, opt.tol);
  r.add_residual("2-group associativity", "(ab)c = a(bc) for (h1 phi(g1)(h2), g1 g2)", assoc2.value, opt.tol);
  r.add_residual("source and target are morphisms", "s(ab) = s(a)s(b), t(ab) = t(a)t(b)", st.value, opt.tol);
  r.add_residual("vertical composition", "associativity and unit law of H x G => G", vert.value, opt.tol);
  r.add_residual("G-action on h integrates phi", "d/de phi(g)(exp(e w)) = g.w", actfd.value, opt.fd_tol);
  r.add_residual("t integrates delta", "d/de t(exp(e w)) = delta w", tfd.value, opt.fd_tol);
  r.add_residual("G-action on h integrates act", "d/ds exp(s v).w = -[v,w]", genfd.value, opt.fd_tol);
  r.add_residual("LA-group laws", "associativity and inverses of (w1 + g1 w2, g1 g2)", la.value, opt.tol);
  r.add_residual("LA-group bracket", "commutator of h x| G differentiates to h x| g", labr.value, opt.fd_tol);
  r.add_residual("2-group and LA-group products", "d/de H-part of 2-group product = w1 + g1 w2", compat.value, opt.fd_tol);
  return r;
}

// --- groupoids -------------------------------------------------------------

Vec Groupoid::source(const GroupoidElement& x) const {
  switch (kind) {
    case GroupoidKind::Pair: return x.m2;
    case GroupoidKind::Action: return x.m1;
    case GroupoidKind::Group: return Vec(0);
  }
  return {};
}

Vec Groupoid::target(const GroupoidElement& x) const {
  switch (kind) {
    case GroupoidKind::Pair: return x.m1;
    case GroupoidKind::Action: return base_action(x.g, x.m1);
    case GroupoidKind::Group: return Vec(0);
  }
  return {};
}

GroupoidElement Groupoid::compose(const GroupoidElement& x, const GroupoidElement& y, double tol) const {
  const double gap = max_abs(Vec(source(x) - target(y)));
  if (!(gap <= tol)) throw std::invalid_argument("groupoid elements are not composable (gap " + std::to_string(gap) + ")");
  switch (kind) {
    case GroupoidKind::Pair: return {kind, Mat(), x.m1, y.m2};
    case GroupoidKind::Action: return {kind, x.g * y.g, y.m1, Vec()};
    case GroupoidKind::Group: return {kind, x.g * y.g, Vec(), Vec()};
  }
  return {};
}

GroupoidElement Groupoid::unit(const Vec& m) const {
  switch (kind) {
    case GroupoidKind::Pair: return {kind, Mat(), m, m};
    case GroupoidKind::Action: return {kind, Mat::Identity(static_cast<long>(algebra.matrix_size), static_cast<long>(algebra.matrix_size)), m, Vec()};
    case GroupoidKind::Group: return {kind, Mat::Identity(static_cast<long>(algebra.matrix_size), static_cast<long>(algebra.matrix_size)), Vec(), Vec()};
  }
  return {};
}

GroupoidElement Groupoid::inverse(const GroupoidElement& x) const {
  switch (kind) {
    case GroupoidKind::Pair: return {kind, Mat(), x.m2, x.m1};
    case GroupoidKind::Action: return {kind, x.g.inverse(), base_action(x.g, x.m1), Vec()};
    case GroupoidKind::Group: return {kind, x.g.inverse(), Vec(), Vec()};
  }
  return {};
}

Vec Groupoid::flatten(const GroupoidElement& x) const {
  switch (kind) {
    case GroupoidKind::Pair: {
      Vec v(x.m1.size() + x.m2.size());
      v << x.m1, x.m2;
      return v;
    }
    case GroupoidKind::Action: {
      Vec v(x.g.size() + x.m1.size());
      v << x.g.reshaped(), x.m1;
      return v;
    }
    case GroupoidKind::Group: return x.g.reshaped();
  }
  return {};
}

double Groupoid::distance(const GroupoidElement& x, const GroupoidElement& y) const { return max_abs(Vec(flatten(x) - flatten(y))); }

Vec Groupoid::random_point(std::mt19937_64& rng) const { return random_vector(base_dim, rng, 1.0); }

GroupoidElement Groupoid::random(std::mt19937_64& rng) const {
  const Vec m = random_point(rng);
  return random_with_source(rng, m);
}

GroupoidElement Groupoid::random_with_source(std::mt19937_64& rng, const Vec& m) const {
  switch (kind) {
    case GroupoidKind::Pair: return {kind, Mat(), random_point(rng), m};
    case GroupoidKind::Action: return {kind, random_group_element(algebra, rng, sample_scale), m, Vec()};
    case GroupoidKind::Group: return {kind, random_group_element(algebra, rng, sample_scale), Vec(), Vec()};
  }
  return {};
}

Groupoid pair_groupoid(std::size_t n) {
  Groupoid g;
  g.name = "pair";
  g.kind = GroupoidKind::Pair;
  g.base_dim = n;
  return g;
}

Groupoid action_groupoid(const MatrixAlgebra& alg, std::size_t base_dim, std::function<Vec(const Mat&, const Vec&)> action) {
  Groupoid g;
  g.name = "action:" + alg.tag;
  g.kind = GroupoidKind::Action;
  g.base_dim = base_dim;
  g.algebra = alg;
  g.base_action = std::move(action);
  return g;
}

Groupoid group_as_groupoid(const MatrixAlgebra& alg) {
  Groupoid g;
  g.name = "group:" + alg.tag;
  g.kind = GroupoidKind::Group;
  g.base_dim = 0;
  g.algebra = alg;
  return g;
}

}  // namespace g2kit
