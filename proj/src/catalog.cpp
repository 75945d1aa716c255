#include <g2kit/catalog.hpp>

namespace g2kit::catalog {

Tensor3 abelian_bracket(std::size_t n) { return Tensor3(n, n, n); }

Tensor3 sl2_bracket() {
  Tensor3 c(3, 3, 3);
  set_antisymmetric(c, 0, 1, 1, 2);
  set_antisymmetric(c, 0, 2, 2, -2);
  set_antisymmetric(c, 1, 2, 0, 1);
  return c;
}

Tensor3 heisenberg_bracket() {
  Tensor3 c(3, 3, 3);
  set_antisymmetric(c, 0, 1, 2, 1);
  return c;
}

Tensor3 aff1_bracket() {
  Tensor3 c(2, 2, 2);
  set_antisymmetric(c, 0, 1, 1, 1);
  return c;
}

StrictLie2Data gA_sl2_lie2() { return identity_lie2(sl2_bracket()); }

LieAlgebroidData lie_algebra_over_point(const Tensor3& c) {
  const std::size_t d = c.dim0();
  LieAlgebroidData a(0, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (c(i, j, k) != 0) a.set_c(i, j, k, GradedPoly::constant(a.context(), c(i, j, k)));
  return a;
}

LieAlgebroidData tangent_algebroid(std::size_t n) {
  LieAlgebroidData a(n, n);
  for (std::size_t i = 0; i < n; ++i) a.set_rho(i, i, GradedPoly::constant(a.context(), Rational(1)));
  return a;
}

LieAlgebroidData sl2_action_algebroid() {
  const Tensor3 c = sl2_bracket();
  LieAlgebroidData a(2, 3);
  const auto& ctx = a.context();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        if (c(i, j, k) != 0) a.set_c(i, j, k, GradedPoly::constant(ctx, c(i, j, k)));
  const GradedPoly x1 = GradedPoly::variable(ctx, "x1"), x2 = GradedPoly::variable(ctx, "x2");
  // V_h = -diag(1,-1), V_e = -E12, V_f = -E21
  a.set_rho(0, 0, -x1);
  a.set_rho(0, 1, x2);
  a.set_rho(1, 0, -x2);
  a.set_rho(2, 1, -x1);
  return a;
}

LieAlgebroidData lie_poisson_algebroid(const Tensor3& c) {
  const std::size_t d = c.dim0();
  const ContextPtr ctx = algebroid_context(d, 0);
  std::vector<std::vector<GradedPoly>> pi(d, std::vector<GradedPoly>(d, GradedPoly(ctx)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (c(i, j, k) != 0) pi[i][j] += GradedPoly::variable(ctx, k) * c(i, j, k);
  return poisson_to_algebroid(pi);
}

std::vector<std::string> action_names() { return {"adjoint", "tm", "heisenberg", "ga-sl2", "aff-line", "gaa-sl2", "zero"}; }

namespace {

std::vector<Section> frame(const LieAlgebroidData& a) {
  std::vector<Section> out;
  for (std::size_t i = 0; i < a.rank(); ++i) out.push_back(Section::basis(a.context(), a.rank(), i));
  return out;
}

Section section(std::vector<GradedPoly> coeffs) { return Section{std::move(coeffs)}; }

}  // namespace

StrictActionData action(std::string_view name) {
  if (name == "adjoint") {
    const auto a = lie_algebra_over_point(sl2_bracket());
    return example_gA(sl2_bracket(), a, frame(a));
  }
  if (name == "tm") {
    const auto a = tangent_algebroid(1);
    return example_gA(abelian_bracket(1), a, frame(a));
  }
  if (name == "heisenberg") {
    // Left translation on H3 = {(x1, x2, x3)} ~ [[1,x1,x3],[0,1,x2],[0,0,1]], generators V = (-E12, -E23, -E13).
    const auto a = tangent_algebroid(3);
    const auto& ctx = a.context();
    auto k = [&](long v) { return GradedPoly::constant(ctx, Rational(v)); };
    const GradedPoly zero(ctx);
    const GradedPoly x2 = GradedPoly::variable(ctx, "x2");
    std::vector<Section> eta = {section({k(-1), zero, -x2}), section({zero, k(-1), zero}), section({zero, zero, k(-1)})};
    return example_gA(heisenberg_bracket(), a, eta);
  }
  if (name == "ga-sl2") {
    const auto a = sl2_action_algebroid();
    return example_gA(sl2_bracket(), a, frame(a));
  }
  if (name == "aff-line") {
    // affine maps of the line: e0 -> -x d/dx, e1 -> -d/dx
    const auto a = tangent_algebroid(1);
    const auto& ctx = a.context();
    std::vector<Section> eta = {section({-GradedPoly::variable(ctx, "x1")}), section({GradedPoly::constant(ctx, Rational(-1))})};
    return example_gA(aff1_bracket(), a, eta);
  }
  if (name == "gaa-sl2") {
    const auto a = lie_poisson_algebroid(sl2_bracket());
    return example_gA(sl2_bracket(), a, frame(a));
  }
  if (name == "zero") {
    const auto a = tangent_algebroid(2);
    StrictActionData s{gA_sl2_lie2(), a, {}, {}};
    for (std::size_t i = 0; i < 3; ++i) {
      s.mu_h.push_back(Section::zero(a.context(), 2));
      s.mu_g.push_back(Derivation(a.context()));
    }
    return s;
  }
  throw InputError("unknown catalog action \"" + std::string(name) + "\"");
}

}  // namespace g2kit::catalog
