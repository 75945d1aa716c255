#include "support/random_algebroids.hpp"

#include <functional>
#include <stdexcept>

using g2kit::GradedPoly;
using g2kit::LieAlgebroidData;
using g2kit::Rational;

namespace support {

QMat identity(std::size_t d) {
  QMat m(d, std::vector<mpq_class>(d, 0));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

QMat matmul(const QMat& a, const QMat& b) {
  QMat m(a.size(), std::vector<mpq_class>(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] += a[i][k] * b[k][j];
  return m;
}

QMat inverse(const QMat& a) {
  const std::size_t d = a.size();
  QMat m = a, inv = identity(d);
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && m[piv][col] == 0) ++piv;
    if (piv == d) throw std::runtime_error("singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const mpq_class s = m[col][col];
    for (std::size_t j = 0; j < d; ++j) {
      m[col][j] /= s;
      inv[col][j] /= s;
    }
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const mpq_class f = m[r][col];
      for (std::size_t j = 0; j < d; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

QMat random_unimodular(std::size_t d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> u(-1, 1);
  QMat l = identity(d), up = identity(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      l[i][j] = u(rng);
      up[j][i] = u(rng);
    }
  return matmul(l, up);
}

namespace {

QMat zeros(std::size_t m) { return QMat(m, std::vector<mpq_class>(m, 0)); }

QMat unit(std::size_t m, std::size_t i, std::size_t j) {
  QMat e = zeros(m);
  e[i][j] = 1;
  return e;
}

LieAlgebraSample make(std::string name, std::size_t dim) {
  LieAlgebraSample g;
  g.name = std::move(name);
  g.dim = dim;
  g.c.assign(dim * dim * dim, 0);
  return g;
}

void set(LieAlgebraSample& g, std::size_t i, std::size_t j, std::size_t k, int v) {
  g.at(i, j, k) = v;
  g.at(j, i, k) = -v;
}

LieAlgebraSample direct_sum(const LieAlgebraSample& a, const LieAlgebraSample& b, std::vector<QMat> rep) {
  LieAlgebraSample g = make(a.name + "+" + b.name, a.dim + b.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) g.at(i, j, k) = a.at(i, j, k);
  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j)
      for (std::size_t k = 0; k < b.dim; ++k) g.at(a.dim + i, a.dim + j, a.dim + k) = b.at(i, j, k);
  g.rep = std::move(rep);
  return g;
}

}  // namespace

std::vector<LieAlgebraSample> small_lie_algebras() {
  std::vector<LieAlgebraSample> out;

  auto ab1 = make("abelian1", 1);
  ab1.rep = {identity(1)};
  auto ab2 = make("abelian2", 2);
  ab2.rep = {unit(2, 0, 0), unit(2, 1, 1)};
  auto nonab = make("aff1", 2);
  set(nonab, 0, 1, 1, 1);
  nonab.rep = {unit(2, 0, 0), unit(2, 0, 1)};
  auto sl2 = make("sl2", 3);
  set(sl2, 0, 1, 1, 2);
  set(sl2, 0, 2, 2, -2);
  set(sl2, 1, 2, 0, 1);
  {
    QMat h = zeros(2);
    h[0][0] = 1;
    h[1][1] = -1;
    sl2.rep = {h, unit(2, 0, 1), unit(2, 1, 0)};
  }
  auto heis = make("heisenberg", 3);
  set(heis, 0, 1, 2, 1);
  heis.rep = {unit(3, 0, 1), unit(3, 1, 2), unit(3, 0, 2)};
  auto so3 = make("so3", 3);
  set(so3, 0, 1, 2, 1);
  set(so3, 1, 2, 0, 1);
  set(so3, 2, 0, 1, 1);
  {
    QMat lx = zeros(3), ly = zeros(3), lz = zeros(3);
    lx[1][2] = -1;
    lx[2][1] = 1;
    ly[0][2] = 1;
    ly[2][0] = -1;
    lz[0][1] = -1;
    lz[1][0] = 1;
    so3.rep = {lx, ly, lz};
  }

  out.push_back(ab1);
  out.push_back(ab2);
  out.push_back(nonab);
  out.push_back(sl2);
  out.push_back(heis);
  out.push_back(so3);
  out.push_back(direct_sum(nonab, ab1, {unit(2, 0, 0), unit(2, 0, 1), identity(2)}));
  out.push_back(direct_sum(sl2, ab1, {sl2.rep[0], sl2.rep[1], sl2.rep[2], identity(2)}));
  out.push_back(direct_sum(heis, ab1, {heis.rep[0], heis.rep[1], heis.rep[2], identity(3)}));
  out.push_back(direct_sum(nonab, nonab, {unit(2, 0, 0), unit(2, 0, 1), zeros(2), zeros(2)}));
  return out;
}

LieAlgebraSample change_basis(const LieAlgebraSample& g, const QMat& p) {
  const QMat pinv = inverse(p);
  LieAlgebraSample h = make(g.name, g.dim);
  const std::size_t d = g.dim;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        mpq_class s = 0;
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b) {
            if (p[a][i] == 0 || p[b][j] == 0) continue;
            for (std::size_t c = 0; c < d; ++c) s += p[a][i] * p[b][j] * g.at(a, b, c) * pinv[k][c];
          }
        h.at(i, j, k) = s;
      }
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t m = g.rep.empty() ? 0 : g.rep[0].size();
    QMat b = zeros(m);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = 0; s < m; ++s) b[r][s] += p[a][i] * g.rep[a][r][s];
    h.rep.push_back(b);
  }
  return h;
}

GradedPoly random_poly(const g2kit::ContextPtr& ctx, std::size_t nvars, int max_deg, std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<int> coef(-2, 2);
  for (;;) {
    GradedPoly p(ctx);
    // enumerate exponent vectors of total degree <= max_deg
    std::vector<std::uint16_t> e(ctx->size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t var, int left) {
      if (var == nvars) {
        if (rng() % 2 == 0) p.add_term(e, Rational(coef(rng)));
        return;
      }
      for (int k = 0; k <= left; ++k) {
        e[var] = static_cast<std::uint16_t>(k);
        rec(var + 1, left - k);
      }
      e[var] = 0;
    };
    rec(0, max_deg);
    if (!nonzero || !p.is_zero()) return p;
  }
}

std::vector<std::vector<GradedPoly>> random_poisson(std::size_t n, std::mt19937_64& rng) {
  auto ctx = g2kit::algebroid_context(n, 0);
  std::vector<std::vector<GradedPoly>> pi(n, std::vector<GradedPoly>(n, GradedPoly(ctx)));
  if (n == 2) {
    auto f = random_poly(ctx, 2, 2, rng);
    pi[0][1] = f;
    pi[1][0] = -f;
  } else if (n == 3) {
    // pi_ij = eps_ijk dC/dx_k is Poisson for every C.
    auto cas = random_poly(ctx, 3, 3, rng);
    pi[0][1] = cas.partial(2);
    pi[1][2] = cas.partial(0);
    pi[2][0] = cas.partial(1);
    pi[1][0] = -pi[0][1];
    pi[2][1] = -pi[1][2];
    pi[0][2] = -pi[2][0];
  }
  return pi;
}

namespace {

LieAlgebroidData from_lie_algebra(const LieAlgebraSample& g, std::size_t n, const GradedPoly* scale) {
  LieAlgebroidData a(n, g.dim);
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = i + 1; j < g.dim; ++j)
      for (std::size_t k = 0; k < g.dim; ++k) {
        if (g.at(i, j, k) == 0) continue;
        GradedPoly v = GradedPoly::constant(a.context(), g.at(i, j, k));
        if (scale) v = *scale * v;
        a.set_c(i, j, k, v);
      }
  return a;
}

}  // namespace

AlgebroidSample random_algebroid(std::mt19937_64& rng, double perturb_probability) {
  const auto algebras = small_lie_algebras();
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const int family = static_cast<int>(rng() % 5);
  AlgebroidSample s{LieAlgebroidData(0, 0), "", false};
  if (family == 0) {
    // Lie algebra bundle c(x) = f(x) c0 over R^n, zero anchor.
    auto g = algebras[rng() % algebras.size()];
    g = change_basis(g, random_unimodular(g.dim, rng));
    const std::size_t n = 1 + rng() % 3;
    auto ctx = g2kit::algebroid_context(n, g.dim);
    auto f = random_poly(ctx, n, 2, rng);
    s = {from_lie_algebra(g, n, &f), "bundle:" + g.name, false};
  } else if (family == 1) {
    // Action algebroid g x R^m with rho_i(x) = -B_i x.
    auto g = algebras[rng() % algebras.size()];
    g = change_basis(g, random_unimodular(g.dim, rng));
    const std::size_t n = g.rep[0].size();
    const QMat sm = random_unimodular(n, rng), sinv = inverse(sm);
    LieAlgebroidData a = from_lie_algebra(g, n, nullptr);
    for (std::size_t i = 0; i < g.dim; ++i) {
      const QMat b = matmul(sinv, matmul(g.rep[i], sm));
      for (std::size_t al = 0; al < n; ++al) {
        GradedPoly comp(a.context());
        for (std::size_t be = 0; be < n; ++be)
          if (b[al][be] != 0) comp -= GradedPoly::variable(a.context(), a.base_var(be)) * Rational(b[al][be]);
        a.set_rho(i, al, comp);
      }
    }
    s = {a, "action:" + g.name, false};
  } else if (family == 2) {
    // Tangent bundle of R^n in a constant frame.
    const std::size_t n = 1 + rng() % 3;
    const QMat p = random_unimodular(n, rng);
    LieAlgebroidData a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t al = 0; al < n; ++al)
        if (p[al][i] != 0) a.set_rho(i, al, GradedPoly::constant(a.context(), p[al][i]));
    s = {a, "tangent", false};
  } else {
    const std::size_t n = family == 3 ? 2 : 3;
    s = {g2kit::poisson_to_algebroid(random_poisson(n, rng)), "poisson" + std::to_string(n), false};
  }

  if (unif(rng) < perturb_probability) {
    LieAlgebroidData& a = s.data;
    const std::size_t r = a.rank(), n = a.base_dim();
    const auto& ctx = a.context();
    if (r >= 2 && (n == 0 || rng() % 2 == 0)) {
      std::size_t i = rng() % r, j = rng() % r;
      if (i == j) j = (i + 1) % r;
      if (i > j) std::swap(i, j);
      const std::size_t k = rng() % r;
      a.set_c(i, j, k, a.c(i, j, k) + GradedPoly::constant(ctx, Rational(1)));
    } else if (n > 0) {
      const std::size_t i = rng() % r, al = rng() % n;
      a.set_rho(i, al, a.rho(i, al) + GradedPoly::variable(ctx, a.base_var(rng() % n)));
    }
    s.perturbed = true;
  }
  return s;
}

std::vector<AlgebroidSample> random_algebroids(std::uint64_t seed, std::size_t count, double perturb_probability) {
  std::mt19937_64 rng(seed);
  std::vector<AlgebroidSample> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_algebroid(rng, perturb_probability));
  return out;
}

}  // namespace support
