#include <doctest.h>

#include <g2kit/catalog.hpp>
#include <g2kit/io.hpp>

#include <support/random_actions.hpp>
#include <support/random_algebroids.hpp>
#include <support/random_lie2.hpp>

#include <cmath>
#include <limits>

using namespace g2kit;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_bundle_text(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("minimal abelian lie2 bundle") {
  const Bundle b = parse_bundle_text(R"({"schema":"g2kit/1","kind":"lie2","dim_h":1,"dim_g":1,"delta":[[0,0,"1"]]})");
  CHECK(b.kind == "lie2");
  const auto& l = std::get<StrictLie2Data>(b.data);
  CHECK(l.dim_h == 1);
  CHECK(l.delta(0, 0) == 1);
  CHECK(validate_lie2(l).passed());
}

TEST_CASE("bracket entries are mirrored unless listed") {
  const Json j = Json::parse(R"({"dim_h":0,"dim_g":2,"bracket_g":[[0,1,1,"1/2"]]})");
  const StrictLie2Data l = lie2_from_json(j);
  CHECK(l.bracket_g(0, 1, 1) == Rational(1, 2));
  CHECK(l.bracket_g(1, 0, 1) == Rational(-1, 2));
  // both orders listed: taken literally, validation sees the asymmetry
  const StrictLie2Data bad = lie2_from_json(Json::parse(R"({"dim_h":0,"dim_g":2,"bracket_g":[[0,1,1,1],[1,0,1,1]]})"));
  CHECK(bad.bracket_g(1, 0, 1) == 1);
  CHECK_FALSE(validate_lie2(bad).passed());
  CHECK(lie2_from_json(lie2_to_json(bad)) == bad);
}

TEST_CASE("lie2 and crossed module json round trip") {
  for (const auto& s : support::valid_lie2_samples(11, 25)) {
    CAPTURE(s.family);
    CHECK(lie2_from_json(lie2_to_json(s.data)) == s.data);
    const CrossedModuleData c = to_crossed_module(s.data);
    CHECK(crossed_from_json(crossed_to_json(c)) == c);
    const Json b = bundle_to_json("crossed", crossed_to_json(c));
    CHECK(std::get<CrossedModuleData>(parse_bundle_text(b.dump(2)).data) == c);
  }
}

TEST_CASE("algebroid and action json round trip") {
  for (const auto& s : support::random_algebroids(5, 30)) {
    CAPTURE(s.family);
    CHECK(algebroid_from_json(algebroid_to_json(s.data)) == s.data);
  }
  std::mt19937_64 rng(9);
  for (const auto& name : catalog::action_names()) {
    CAPTURE(name);
    const StrictActionData a = catalog::action(name);
    for (const auto& s : {a, support::perturb_action(a, rng)}) {
      const StrictActionData back = action_from_json(action_to_json(s));
      CHECK(back.L == s.L);
      CHECK(back.A == s.A);
      CHECK(back.mu_h == s.mu_h);
      REQUIRE(back.mu_g.size() == s.mu_g.size());
      for (std::size_t i = 0; i < s.mu_g.size(); ++i) CHECK(back.mu_g[i] == s.mu_g[i].embed(s.A.context()));
    }
  }
}

TEST_CASE("polynomials") {
  const ContextPtr ctx = algebroid_context(2, 2);
  const GradedPoly p = poly_from_json(Json::parse(R"({"monomials":[{"exps":{"x1":2,"x2":1},"coef":"-3/4"},{"exps":{},"coef":5}]})"), ctx);
  Monomial m(4, 0);
  m[0] = 2;
  m[1] = 1;
  CHECK(p.coefficient(m) == Rational(-3, 4));
  CHECK(p.constant_term() == 5);
  CHECK(poly_from_json(poly_to_json(p), ctx) == p);
  CHECK(poly_from_json(Json("7/3"), ctx) == GradedPoly::constant(ctx, Rational(7, 3)));
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"monomials":[{"exps":{"y":1},"coef":"1"}]})"), ctx), InputError);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"monomials":[{"exps":{"xi1":2},"coef":"1"}]})"), ctx), InputError);
  CHECK_THROWS_AS(poly_from_json(Json(0.5), ctx), InputError);
}

TEST_CASE("malformed input is reported with a location") {
  const std::string zero_den = error_of(R"({"schema":"g2kit/1","kind":"lie2","dim_h":1,"dim_g":1,"delta":[[0,0,"1/0"]]})");
  CHECK(zero_den.find("$.delta[0][2]") != std::string::npos);
  CHECK(zero_den.find("zero denominator") != std::string::npos);

  const std::string syntax = error_of("{\"schema\":\"g2kit/1\",\n\"kind\": \"lie2\",\n  \"dim_h\": 1 2}");
  CHECK(syntax.find("line 3") != std::string::npos);

  CHECK(error_of(R"({"schema":"g2kit/1","kind":"lie2","dim_h":1,"dim_g":1,"delta":[[0,3,"1"]]})").find("$.delta[0][1]") !=
        std::string::npos);
  CHECK(error_of(R"({"schema":"g2kit/1","kind":"lie2","dim_h":1,"dim_g":1,"detla":[]})").find("$.detla") !=
        std::string::npos);
  CHECK(error_of(R"({"schema":"g2kit/0","kind":"lie2"})").find("$.schema") != std::string::npos);
  CHECK(error_of(R"({"schema":"g2kit/1","kind":"torus"})").find("$.kind") != std::string::npos);
  CHECK(error_of(R"({"schema":"g2kit/1","kind":"algebroid","base_dim":1,"rank":2,"c":[{"i":1,"j":0,"k":0,"poly":"1"}]})")
            .find("$.c[0]") != std::string::npos);
  CHECK(error_of(R"({"schema":"g2kit/1","kind":"algebroid","base_dim":1,"rank":1,"rho":[{"i":0,"alpha":0,"poly":{"monomials":[{"exps":{"xi1":1},"coef":"1"}]}}]})")
            .find("$.rho[0].poly") != std::string::npos);
  CHECK_THROWS_AS(parse_bundle("/nonexistent/file.json"), InputError);
}

TEST_CASE("poisson bundles give the cotangent algebroid") {
  const Bundle b = parse_bundle_text(
      R"({"schema":"g2kit/1","kind":"poisson","dim":3,"pi":[
          {"i":0,"j":1,"poly":{"monomials":[{"exps":{"x3":1},"coef":"1"}]}},
          {"i":1,"j":2,"poly":{"monomials":[{"exps":{"x1":1},"coef":"1"}]}},
          {"i":0,"j":2,"poly":{"monomials":[{"exps":{"x2":1},"coef":"-1"}]}}]})");
  const auto& a = std::get<LieAlgebroidData>(b.data);
  CHECK(a.rank() == 3);
  CHECK(a.rho(0, 1) == GradedPoly::variable(a.context(), "x3"));
  CHECK(check_homological(build_Q(a)).passed());
}

TEST_CASE("report json round trip") {
  Report r("sample");
  r.set_meta("seed", "7");
  r.add("exact", "a = b", true, "fine");
  r.add_residual("numeric", "|x - y|", 3.0000000000000004e-13, 1e-12);
  r.add_residual("broken", "|x - y|", std::numeric_limits<double>::infinity(), 1e-12);
  r.add("structural", "", false, "offending coefficient 1/3");
  const Report back = report_from_json(report_to_json(r));
  CHECK(back == r);
  CHECK(parse_report_text(report_to_json(r).dump()) == r);
  CHECK(report_to_json(r)["passed"] == false);

  Json tampered = report_to_json(r);
  tampered["passed"] = true;
  CHECK_THROWS_AS(report_from_json(tampered), InputError);
}
