#include "support/random_lie2.hpp"

using g2kit::Rational;
using g2kit::StrictLie2Data;
using g2kit::Tensor3;

namespace support {

Tensor3 to_tensor(const LieAlgebraSample& g) {
  Tensor3 t(g.dim, g.dim, g.dim);
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = 0; j < g.dim; ++j)
      for (std::size_t k = 0; k < g.dim; ++k) t(i, j, k) = g.at(i, j, k);
  return t;
}

StrictLie2Data transform_lie2(const StrictLie2Data& l, const QMat& p, const QMat& r) {
  const std::size_t g = l.dim_g, h = l.dim_h;
  const QMat pinv = inverse(p), rinv = inverse(r);
  StrictLie2Data out(h, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j)
      for (std::size_t k = 0; k < g; ++k) {
        Rational s = 0;
        for (std::size_t a = 0; a < g; ++a)
          for (std::size_t b = 0; b < g; ++b) {
            if (p[a][i] == 0 || p[b][j] == 0) continue;
            for (std::size_t c = 0; c < g; ++c) s += p[a][i] * p[b][j] * l.bracket_g(a, b, c) * pinv[k][c];
          }
        out.bracket_g(i, j, k) = s;
      }
  // [v'_i, w'_a] = P_ji R_ba act(j,b,c) w_c,  w_c = sum_d Rinv[d][c] w'_d
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t a = 0; a < h; ++a)
      for (std::size_t d = 0; d < h; ++d) {
        Rational s = 0;
        for (std::size_t j = 0; j < g; ++j)
          for (std::size_t b = 0; b < h; ++b) {
            if (p[j][i] == 0 || r[b][a] == 0) continue;
            for (std::size_t c = 0; c < h; ++c) s += p[j][i] * r[b][a] * l.act(j, b, c) * rinv[d][c];
          }
        out.act(i, a, d) = s;
      }
  // delta w'_a = R_ba D_bj v_j,  v_j = sum_k Pinv[k][j] v'_k
  for (std::size_t a = 0; a < h; ++a)
    for (std::size_t k = 0; k < g; ++k) {
      Rational s = 0;
      for (std::size_t b = 0; b < h; ++b)
        for (std::size_t j = 0; j < g; ++j) s += r[b][a] * l.delta(b, j) * pinv[k][j];
      out.delta(a, k) = s;
    }
  return out;
}

std::vector<Lie2Sample> valid_lie2_samples(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  const auto algebras = small_lie_algebras();
  std::vector<Lie2Sample> out;
  for (std::size_t n = 0; n < count; ++n) {
    const auto& g = algebras[rng() % algebras.size()];
    const Tensor3 c = to_tensor(g);
    StrictLie2Data l;
    std::string family;
    switch (n % 4) {
      case 0: {
        l = g2kit::identity_lie2(c);
        const long lambda = 1 + static_cast<long>(rng() % 3);
        for (std::size_t a = 0; a < g.dim; ++a) l.delta(a, a) = lambda;
        family = "scaled-identity:" + g.name;
        break;
      }
      case 1: {
        // zero differential, h = representation space
        const std::size_t m = g.rep[0].size();
        l = StrictLie2Data(m, g.dim);
        l.bracket_g = c;
        for (std::size_t i = 0; i < g.dim; ++i)
          for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) l.act(i, a, b) = g.rep[i][b][a];
        family = "module:" + g.name;
        break;
      }
      case 2: {
        // h = g, act = adjoint, delta = 0
        l = g2kit::identity_lie2(c);
        for (std::size_t a = 0; a < g.dim; ++a) l.delta(a, a) = 0;
        family = "adjoint-zero:" + g.name;
        break;
      }
      default: {
        // an ideal spanned by the last basis vectors of a nilpotent/solvable algebra
        LieAlgebraSample base = algebras[4 + (rng() % 2 == 0 ? 0 : -2)];  // heisenberg center or aff1 derived ideal
        const Tensor3 cb = to_tensor(base);
        const std::size_t gd = base.dim;
        const std::size_t last = gd - 1;
        l = StrictLie2Data(1, gd);
        l.bracket_g = cb;
        l.delta(0, last) = 1;
        for (std::size_t i = 0; i < gd; ++i) l.act(i, 0, 0) = cb(i, last, last);
        family = "ideal:" + base.name;
        break;
      }
    }
    l = transform_lie2(l, random_unimodular(l.dim_g, rng), random_unimodular(l.dim_h, rng));
    out.push_back({l, family});
  }
  return out;
}

StrictLie2Data perturb_one(const StrictLie2Data& l, std::mt19937_64& rng) {
  StrictLie2Data p = l;
  std::uniform_int_distribution<int> mag(1, 3);
  const Rational bump(rng() % 2 ? mag(rng) : -mag(rng), 1 + static_cast<long>(rng() % 2));
  for (;;) {
    const int which = static_cast<int>(rng() % 3);
    if (which == 0 && l.dim_g >= 2) {
      std::size_t i = rng() % l.dim_g, j = rng() % l.dim_g;
      if (i == j) continue;
      const std::size_t k = rng() % l.dim_g;
      g2kit::set_antisymmetric(p.bracket_g, i, j, k, p.bracket_g(i, j, k) + bump);
      return p;
    }
    if (which == 1 && l.dim_h > 0 && l.dim_g > 0) {
      auto& e = p.act(rng() % l.dim_g, rng() % l.dim_h, rng() % l.dim_h);
      e += bump;
      return p;
    }
    if (which == 2 && l.dim_h > 0 && l.dim_g > 0) {
      auto& e = p.delta(rng() % l.dim_h, rng() % l.dim_g);
      e += bump;
      return p;
    }
  }
}

}  // namespace support
