#include "oracles/algebroid_oracle.hpp"

namespace oracle {

CPoly AlgebroidTables::anchor(std::size_t i, const CPoly& f) const {
  CPoly out(n);
  for (std::size_t a = 0; a < n; ++a) out += R(i, a) * f.d(a);
  return out;
}

AlgebroidTables tables_of(const g2kit::LieAlgebroidData& a) {
  AlgebroidTables t;
  t.n = a.base_dim();
  t.r = a.rank();
  for (std::size_t i = 0; i < t.r; ++i)
    for (std::size_t j = 0; j < t.r; ++j)
      for (std::size_t k = 0; k < t.r; ++k) t.c.push_back(CPoly::from(a.c(i, j, k), t.n));
  for (std::size_t i = 0; i < t.r; ++i)
    for (std::size_t al = 0; al < t.n; ++al) t.rho.push_back(CPoly::from(a.rho(i, al), t.n));
  return t;
}

AlgebroidVerdict check_algebroid(const g2kit::LieAlgebroidData& a) {
  const AlgebroidTables t = tables_of(a);
  AlgebroidVerdict v;
  const std::size_t r = t.r, n = t.n;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        if (!(t.C(i, j, k) + t.C(j, i, k)).is_zero()) {
          v.antisymmetric = false;
          v.first_failure = "antisymmetry";
        }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      for (std::size_t al = 0; al < n; ++al) {
        CPoly e = t.anchor(i, t.R(j, al)) - t.anchor(j, t.R(i, al));
        for (std::size_t k = 0; k < r; ++k) e -= t.C(i, j, k) * t.R(k, al);
        if (!e.is_zero() && v.anchor_morphism) {
          v.anchor_morphism = false;
          v.first_failure = "anchor morphism i=" + std::to_string(i) + " j=" + std::to_string(j);
        }
      }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      for (std::size_t k = j + 1; k < r; ++k)
        for (std::size_t m = 0; m < r; ++m) {
          CPoly e(n);
          const std::size_t cyc[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
          for (const auto& [p, q, s] : cyc) {
            for (std::size_t l = 0; l < r; ++l) e += t.C(p, q, l) * t.C(l, s, m);
            e -= t.anchor(s, t.C(p, q, m));
          }
          if (!e.is_zero() && v.jacobi) {
            v.jacobi = false;
            v.first_failure = "jacobi";
          }
        }
  return v;
}

bool is_poisson(const std::vector<std::vector<CPoly>>& pi) {
  const std::size_t n = pi.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        CPoly e(n);
        for (std::size_t l = 0; l < n; ++l)
          e += pi[i][l] * pi[j][k].d(l) + pi[j][l] * pi[k][i].d(l) + pi[k][l] * pi[i][j].d(l);
        if (!e.is_zero()) return false;
      }
  return true;
}

std::vector<CPoly> koszul_bracket(const std::vector<std::vector<CPoly>>& pi, const std::vector<CPoly>& a,
                                  const std::vector<CPoly>& b) {
  const std::size_t n = pi.size();
  auto sharp = [&](const std::vector<CPoly>& w) {
    std::vector<CPoly> x(n, CPoly(n));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) x[j] += w[i] * pi[i][j];
    return x;
  };
  // (L_X w)_k = X(w_k) + w_j d_k X^j
  auto lie = [&](const std::vector<CPoly>& x, const std::vector<CPoly>& w) {
    std::vector<CPoly> out(n, CPoly(n));
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[k] += x[j] * w[k].d(j) + w[j] * x[j].d(k);
    return out;
  };
  CPoly pab(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pab += a[i] * b[j] * pi[i][j];
  const auto la = lie(sharp(a), b);
  const auto lb = lie(sharp(b), a);
  std::vector<CPoly> out(n, CPoly(n));
  for (std::size_t k = 0; k < n; ++k) out[k] = la[k] - lb[k] - pab.d(k);
  return out;
}

}  // namespace oracle
