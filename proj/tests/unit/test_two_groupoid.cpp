#include <doctest.h>

#include <g2kit/two_groupoid.hpp>

using namespace g2kit;

namespace {

SamplingOptions opts(std::size_t n, double tol) {
  SamplingOptions o;
  o.samples = n;
  o.tol = tol;
  return o;
}

Mat translation(double s) {
  Mat m = Mat::Identity(2, 2);
  m(0, 1) = s;
  return m;
}

Vec scalar(double v) {
  Vec x(1);
  x << v;
  return x;
}

}  // namespace

TEST_CASE("calibration adopts a unique vertical convention") {
  const Calibration cal = calibrate_vertical(opts(30, 1e-12));
  CHECK(cal.unique);
  CHECK(cal.adopted == VerticalConvention{VerticalReading::SourceMeetsTarget, GammaSlot::Second});
  CHECK(cal.report.checks().size() == vertical_candidates().size());
}

TEST_CASE("source and target on tm in closed form") {
  const ArtinMazur am(integration_setup("tm"), {});
  const TwoArrow a{translation(2), translation(0.5), {GroupoidKind::Pair, Mat(), scalar(1), scalar(-3)}};
  const OneArrow t = am.tgt(a);
  CHECK(t.g(0, 1) == doctest::Approx(2.5));
  CHECK(t.gamma.m1(0) == doctest::Approx(-1));
  CHECK(t.gamma.m2(0) == doctest::Approx(-3));
  CHECK(am.src0(am.src(a))(0) == doctest::Approx(-3));
  CHECK(am.tgt0(am.src(a))(0) == doctest::Approx(1.5));
  const TwoArrow unit{Mat::Identity(2, 2), a.g, a.gamma};
  CHECK(am.distance(am.src(unit), am.tgt(unit)) == 0.0);
  // horizontal product of translations composes additively
  const TwoArrow b{translation(-1), translation(0.25), {GroupoidKind::Pair, Mat(), scalar(-3.25), scalar(4)}};
  const TwoArrow p = am.horiz(a, b);
  CHECK(p.h(0, 1) == doctest::Approx(1));
  CHECK(p.g(0, 1) == doctest::Approx(0.75));
  CHECK(p.gamma.m1(0) == doctest::Approx(0.75));
  CHECK(p.gamma.m2(0) == doctest::Approx(4));
}

TEST_CASE("adjoint target is (hg, conjugated gamma)") {
  const IntegrationSetup s = integration_setup("adjoint");
  const ArtinMazur am(s, {});
  std::mt19937_64 rng(4);
  const TwoArrow a = am.random_two_arrow(rng);
  const OneArrow t = am.tgt(a);
  CHECK((t.g - a.h * a.g).cwiseAbs().maxCoeff() < 1e-14);
  const Mat hh = a.g.inverse() * a.h.inverse() * a.g;
  CHECK((t.gamma.g - hh * a.gamma.g).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("2-groupoid axioms on every setup") {
  for (const auto& name : integration_names()) {
    CAPTURE(name);
    const Report r = verify_two_groupoid(integration_setup(name), opts(40, name == "tm" ? 1e-12 : 1e-9));
    const std::string text = to_text(r);
    CAPTURE(text);
    CHECK(r.passed());
  }
}

TEST_CASE("non-composable 2-arrows are rejected") {
  const ArtinMazur am(integration_setup("heisenberg"), {});
  std::mt19937_64 rng(9);
  const TwoArrow a = am.random_two_arrow(rng), b = am.random_two_arrow(rng);
  CHECK_FALSE(am.vertically_composable(a, b));
  CHECK_THROWS_AS(am.vert(a, b), std::invalid_argument);
  CHECK_THROWS_AS(am.horiz(a, b), std::invalid_argument);
}

TEST_CASE("a Phi that is not an H-action breaks the 2-groupoid") {
  IntegrationSetup s = integration_setup("ga-sl2");
  s.phi_h = [](const Mat& h, const GroupoidElement& y) { return GroupoidElement{GroupoidKind::Action, Mat(y.g * h), y.m1, Vec()}; };
  CHECK_FALSE(verify_two_groupoid(s, opts(20, 1e-9)).passed());
}
