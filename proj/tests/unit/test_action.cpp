#include <doctest.h>

#include "support/random_actions.hpp"

#include <g2kit/action.hpp>
#include <g2kit/catalog.hpp>

using namespace g2kit;

TEST_CASE("catalog actions validate three ways") {
  for (const auto& name : catalog::action_names()) {
    INFO(name);
    const StrictActionData s = catalog::action(name);
    REQUIRE(validate_lie2(s.L).passed());
    REQUIRE(check_homological(build_Q(s.A)).passed());
    const Report d = validate_action_dgla(s);
    CHECK(d.passed());
    for (const char* key : {"(c)", "(d)", "(a)", "(b)"}) CHECK(d.find(key) != nullptr);
    CHECK(validate_action_classical(s).passed());
    CHECK(check_double_q(s).passed());
    CHECK(check_mu_tilde_brackets(s).passed());
    const Derivation qt = build_Qtotal(s);
    CHECK(qt.degree() == 1);
    CHECK(gcommutator(qt, qt).is_zero());
  }
}

TEST_CASE("verdicts agree on perturbed actions") {
  std::mt19937_64 rng(12);
  const auto names = catalog::action_names();
  int failing = 0;
  for (int t = 0; t < 70; ++t) {
    const auto base = catalog::action(names[t % names.size()]);
    const auto p = support::perturb_action(base, rng);
    const bool dgla = validate_action_dgla(p).passed();
    INFO(names[t % names.size()]);
    CHECK(validate_action_classical(p).passed() == dgla);
    CHECK(check_double_q(p).passed() == dgla);
    failing += dgla ? 0 : 1;
  }
  CHECK(failing > 35);
}

TEST_CASE("field not commuting with Q_A fails at (d)") {
  StrictActionData s = catalog::action("adjoint");
  const auto& ctx = s.A.context();
  // xi1 d/dxi1 does not commute with the Chevalley-Eilenberg differential of sl2
  s.mu_g[1].set_component("xi1", s.mu_g[1].component("xi1") + GradedPoly::variable(ctx, "xi1"));
  const Report r = validate_action_dgla(s);
  CHECK_FALSE(r.find("(d)")->passed);
  CHECK_FALSE(validate_action_classical(s).passed());
  CHECK_FALSE(check_double_q(s).passed());
}

TEST_CASE("broken (c) is seen by the double Q check") {
  StrictActionData s = catalog::action("tm");
  s.mu_h[0].coeffs[0] = s.mu_h[0].coeffs[0] * Rational(2);
  CHECK_FALSE(validate_action_dgla(s).find("(c)")->passed);
  const Report q = check_double_q(s);
  CHECK_FALSE(q.find("[-Q_delta+Q_A, Q_br+Q_action]=0")->passed);
}

TEST_CASE("Q_action for the adjoint example has only eta- and P-linear terms") {
  const StrictActionData s = catalog::action("adjoint");
  const Derivation q = build_Qaction(s);
  const auto& ctx = q.context();
  for (std::size_t v = 0; v < ctx->size(); ++v)
    for (const auto& [mono, coef] : q.component(v).terms()) {
      int etas = 0, ps = 0;
      for (std::size_t i = 0; i < mono.size(); ++i) {
        if (ctx->var(i).name.rfind("eta", 0) == 0) etas += mono[i];
        if (ctx->var(i).name[0] == 'P') ps += mono[i];
      }
      CHECK(etas + ps == 1);
    }
}

TEST_CASE("mu tilde for the adjoint and translation examples") {
  const MuTilde adj = build_mu_tilde(catalog::action("adjoint"));
  // mu~(v_h) on y = (y_h, y_e, y_f): y' = -ad_h y = (0, -2 y_e, 2 y_f)
  const auto& c = adj.ctx;
  CHECK(adj.g_fields[0].component("y2") == GradedPoly::variable(c, "y2") * Rational(-2));
  CHECK(adj.g_fields[0].component("y3") == GradedPoly::variable(c, "y3") * Rational(2));
  CHECK(adj.h_fields[1].component("y2") == GradedPoly::constant(c, Rational(1)));
  const MuTilde tm = build_mu_tilde(catalog::action("tm"));
  CHECK(tm.g_fields[0].component("x1") == GradedPoly::constant(tm.ctx, Rational(1)));
  CHECK(tm.g_fields[0].component("y1").is_zero());
  const MuTilde zero = build_mu_tilde(catalog::action("zero"));
  for (std::size_t k = 0; k < zero.size(); ++k) CHECK(zero.field(k).is_zero());
}

TEST_CASE("example_gA rejects a map that does not preserve brackets") {
  const auto a = catalog::lie_algebra_over_point(catalog::sl2_bracket());
  std::vector<Section> eta;
  for (std::size_t i = 0; i < 3; ++i) eta.push_back(Section::basis(a.context(), 3, i));
  std::swap(eta[1], eta[2]);
  CHECK_THROWS_AS(example_gA(catalog::sl2_bracket(), a, eta), ValidationError);
  std::vector<Section> zero(3, Section::zero(a.context(), 3));
  const StrictActionData s = example_gA(catalog::sl2_bracket(), a, zero);
  CHECK(validate_action_dgla(s).passed());
  for (const auto& f : s.mu_g) CHECK(f.is_zero());
}
