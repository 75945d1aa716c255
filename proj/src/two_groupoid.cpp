#include <g2kit/two_groupoid.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace g2kit {

namespace {

double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
double max_abs(const Vec& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Max residual over samples; a failed composition records NaN and the first message.
struct Tally {
  double value = 0.0;
  std::string first_error;
  void add(double r) { value = std::isnan(r) ? r : (std::isnan(value) ? value : std::max(value, r)); }
  template <class F>
  void run(F&& f) {
    try {
      add(f());
    } catch (const std::exception& e) {
      add(kNaN);
      if (first_error.empty()) first_error = e.what();
    }
  }
};

void add_tally(Report& r, const std::string& name, const std::string& anchor, const Tally& t, double tol) {
  r.add_residual(name, anchor, t.value, tol, t.first_error.empty() ? std::string{} : "first error: " + t.first_error);
}

bool reads_source_meets_target(const VerticalConvention& c) { return c.reading == VerticalReading::SourceMeetsTarget; }

}  // namespace

std::string VerticalConvention::describe() const {
  std::string s = reading == VerticalReading::SourceMeetsTarget ? "a.a' defined when s(a) = t(a')" : "a.a' defined when t(a) = s(a')";
  s += "; (h,g,gamma).(h',g',gamma') = (hh', g', ";
  s += slot == GammaSlot::Product ? "gamma gamma')" : slot == GammaSlot::Second ? "gamma')" : "gamma)";
  return s;
}

std::vector<VerticalConvention> vertical_candidates() {
  std::vector<VerticalConvention> out;
  for (auto r : {VerticalReading::SourceMeetsTarget, VerticalReading::TargetMeetsSource})
    for (auto s : {GammaSlot::Product, GammaSlot::Second, GammaSlot::First}) out.push_back({r, s});
  return out;
}

ArtinMazur::ArtinMazur(const IntegrationSetup& s, VerticalConvention conv) : phi_(build_phi(s)), conv_(conv) {}

OneArrow ArtinMazur::src(const TwoArrow& a) const { return {a.g, a.gamma}; }

OneArrow ArtinMazur::tgt(const TwoArrow& a) const {
  const GroupCrossedModule& cm = setup().cm;
  const Mat hh = cm.phi(a.g.inverse(), a.h.inverse());
  return {cm.t(a.h) * a.g, phi_({hh, cm.identity_g()}, a.gamma)};
}

Vec ArtinMazur::src0(const OneArrow& o) const { return setup().gamma.source(o.gamma); }

Vec ArtinMazur::tgt0(const OneArrow& o) const { return setup().psi_base(o.g, setup().gamma.target(o.gamma)); }

bool ArtinMazur::vertically_composable(const TwoArrow& a, const TwoArrow& b, double tol) const {
  const double gap = reads_source_meets_target(conv_) ? distance(src(a), tgt(b)) : distance(tgt(a), src(b));
  return gap <= tol;
}

TwoArrow ArtinMazur::vert(const TwoArrow& a, const TwoArrow& b, double tol) const {
  if (!vertically_composable(a, b, tol)) throw std::invalid_argument("2-arrows are not vertically composable");
  GroupoidElement gamma;
  switch (conv_.slot) {
    case GammaSlot::Product: gamma = setup().gamma.compose(a.gamma, b.gamma, tol); break;
    case GammaSlot::Second: gamma = b.gamma; break;
    case GammaSlot::First: gamma = a.gamma; break;
  }
  return {a.h * b.h, b.g, gamma};
}

TwoArrow ArtinMazur::vert_unit(const OneArrow& o) const { return {setup().cm.identity_h(), o.g, o.gamma}; }

TwoArrow ArtinMazur::vert_inverse(const TwoArrow& a) const {
  const OneArrow t = tgt(a);
  return {a.h.inverse(), t.g, t.gamma};
}

OneArrow ArtinMazur::horiz1(const OneArrow& o1, const OneArrow& o2, double tol) const {
  const double gap = max_abs(Vec(src0(o1) - tgt0(o2)));
  if (!(gap <= tol)) throw std::invalid_argument("1-arrows are not horizontally composable");
  const GroupCrossedModule& cm = setup().cm;
  const GroupoidElement moved = phi_({cm.identity_h(), o2.g.inverse()}, o1.gamma);
  return {o1.g * o2.g, setup().gamma.compose(moved, o2.gamma, tol)};
}

TwoArrow ArtinMazur::horiz(const TwoArrow& a1, const TwoArrow& a2, double tol) const {
  const OneArrow o = horiz1(src(a1), src(a2), tol);
  return {a1.h * setup().cm.phi(a1.g, a2.h), o.g, o.gamma};
}

OneArrow ArtinMazur::horiz1_unit(const Vec& m) const { return {setup().cm.identity_g(), setup().gamma.unit(m)}; }

OneArrow ArtinMazur::horiz1_inverse(const OneArrow& o) const {
  const GroupoidElement moved = phi_({setup().cm.identity_h(), o.g}, o.gamma);
  return {o.g.inverse(), setup().gamma.inverse(moved)};
}

TwoArrow ArtinMazur::horiz_unit(const Vec& m) const {
  return {setup().cm.identity_h(), setup().cm.identity_g(), setup().gamma.unit(m)};
}

double ArtinMazur::distance(const OneArrow& a, const OneArrow& b) const {
  return std::max(max_abs(Mat(a.g - b.g)), setup().gamma.distance(a.gamma, b.gamma));
}

double ArtinMazur::distance(const TwoArrow& a, const TwoArrow& b) const {
  return std::max({max_abs(Mat(a.h - b.h)), max_abs(Mat(a.g - b.g)), setup().gamma.distance(a.gamma, b.gamma)});
}

OneArrow ArtinMazur::random_one_arrow(std::mt19937_64& rng) const {
  return {random_group_element(setup().cm.g, rng, setup().cm.sample_scale), setup().gamma.random(rng)};
}

OneArrow ArtinMazur::random_one_arrow_from(std::mt19937_64& rng, const Vec& m) const {
  return {random_group_element(setup().cm.g, rng, setup().cm.sample_scale), setup().gamma.random_with_source(rng, m)};
}

TwoArrow ArtinMazur::random_two_arrow(std::mt19937_64& rng) const { return random_two_arrow_on(rng, random_one_arrow(rng)); }

TwoArrow ArtinMazur::random_two_arrow_on(std::mt19937_64& rng, const OneArrow& source) const {
  return {random_group_element(setup().cm.h, rng, setup().cm.sample_scale), source.g, source.gamma};
}

namespace {

// Vertically composable chain c[0].c[1]...c[n-1] whose 1-arrows all start at m
// (or anywhere when m is empty).
std::vector<TwoArrow> vertical_chain(const ArtinMazur& am, std::mt19937_64& rng, std::size_t n, const Vec* m = nullptr) {
  std::vector<TwoArrow> c(n);
  const OneArrow start = m ? am.random_one_arrow_from(rng, *m) : am.random_one_arrow(rng);
  if (reads_source_meets_target(am.convention())) {
    c[n - 1] = am.random_two_arrow_on(rng, start);
    for (std::size_t k = n - 1; k-- > 0;) c[k] = am.random_two_arrow_on(rng, am.tgt(c[k + 1]));
  } else {
    c[0] = am.random_two_arrow_on(rng, start);
    for (std::size_t k = 1; k < n; ++k) c[k] = am.random_two_arrow_on(rng, am.tgt(c[k - 1]));
  }
  return c;
}

// Source and target the product of a.b must have under the convention.
OneArrow expected_src(const ArtinMazur& am, const TwoArrow& a, const TwoArrow& b) {
  return reads_source_meets_target(am.convention()) ? am.src(b) : am.src(a);
}
OneArrow expected_tgt(const ArtinMazur& am, const TwoArrow& a, const TwoArrow& b) {
  return reads_source_meets_target(am.convention()) ? am.tgt(a) : am.tgt(b);
}

struct VerticalTallies {
  Tally unit, assoc, st;
};

VerticalTallies vertical_axioms(const ArtinMazur& am, std::mt19937_64& rng, std::size_t samples, double tol) {
  VerticalTallies t;
  const bool a_reading = reads_source_meets_target(am.convention());
  for (std::size_t k = 0; k < samples; ++k) {
    const auto c = vertical_chain(am, rng, 3);
    t.unit.run([&] {
      const TwoArrow& a = c[0];
      const TwoArrow left = a_reading ? am.vert(am.vert_unit(am.tgt(a)), a, tol) : am.vert(am.vert_unit(am.src(a)), a, tol);
      const TwoArrow right = a_reading ? am.vert(a, am.vert_unit(am.src(a)), tol) : am.vert(a, am.vert_unit(am.tgt(a)), tol);
      return std::max(am.distance(left, a), am.distance(right, a));
    });
    t.assoc.run([&] { return am.distance(am.vert(am.vert(c[0], c[1], tol), c[2], tol), am.vert(c[0], am.vert(c[1], c[2], tol), tol)); });
    t.st.run([&] {
      const TwoArrow p = am.vert(c[0], c[1], tol);
      return std::max(am.distance(am.src(p), expected_src(am, c[0], c[1])), am.distance(am.tgt(p), expected_tgt(am, c[0], c[1])));
    });
  }
  return t;
}

}  // namespace

Calibration calibrate_vertical(const SamplingOptions& opt) {
  const IntegrationSetup tm = integration_setup("tm");
  Calibration cal;
  cal.report = Report("vertical convention calibration on tm");
  std::size_t winners = 0;
  for (const auto& conv : vertical_candidates()) {
    const ArtinMazur am(tm, conv);
    std::mt19937_64 rng(opt.seed);
    const VerticalTallies t = vertical_axioms(am, rng, opt.samples, 1e-12);
    const double worst = std::max({std::isnan(t.unit.value) ? 1.0 : t.unit.value, std::isnan(t.assoc.value) ? 1.0 : t.assoc.value,
                                   std::isnan(t.st.value) ? 1.0 : t.st.value});
    const bool ok = worst <= 1e-12;
    cal.report.add(conv.describe(), "unit, associativity and source/target compatibility", ok,
                   ok ? "all pass" : "max residual " + std::to_string(worst));
    if (ok) {
      if (winners == 0) cal.adopted = conv;
      ++winners;
    }
  }
  cal.unique = winners == 1;
  return cal;
}

Report verify_two_groupoid(const IntegrationSetup& s, const SamplingOptions& opt) {
  const Calibration cal = calibrate_vertical(opt);
  Report r("codiagonal 2-groupoid: " + s.name);
  r.set_meta("example", s.name);
  r.set_meta("samples", std::to_string(opt.samples));
  r.set_meta("seed", std::to_string(opt.seed));
  r.set_meta("vertical convention", cal.adopted.describe());
  std::size_t passing = 0;
  for (const auto& c : cal.report.checks()) passing += c.passed ? 1 : 0;
  r.set_meta("calibration", std::to_string(passing) + " of " + std::to_string(cal.report.checks().size()) + " candidates pass on tm");
  r.add("vertical convention calibrated", "exactly one candidate passes on tm", cal.unique,
        cal.unique ? cal.adopted.describe() : "no unique candidate");

  const ArtinMazur am(s, cal.adopted);
  const double tol = opt.tol;
  const double ctol = std::max(1e-8, 10 * tol);  // composability gaps
  const bool a_reading = reads_source_meets_target(cal.adopted);
  std::mt19937_64 rng(opt.seed + 7);

  Tally id2, glob, vinv;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const TwoArrow a = am.random_two_arrow(rng);
    id2.run([&] {
      const TwoArrow u = am.vert_unit(am.src(a));
      return std::max(am.distance(am.src(u), am.src(a)), am.distance(am.tgt(u), am.src(a)));
    });
    glob.run([&] {
      const OneArrow s1 = am.src(a), t1 = am.tgt(a);
      return std::max(max_abs(Vec(am.src0(s1) - am.src0(t1))), max_abs(Vec(am.tgt0(s1) - am.tgt0(t1))));
    });
    vinv.run([&] {
      const TwoArrow ai = am.vert_inverse(a);
      const TwoArrow p = a_reading ? am.vert(a, ai, ctol) : am.vert(ai, a, ctol);
      const TwoArrow q = a_reading ? am.vert(ai, a, ctol) : am.vert(a, ai, ctol);
      return std::max(am.distance(p, am.vert_unit(am.tgt(a))), am.distance(q, am.vert_unit(am.src(a))));
    });
  }
  std::mt19937_64 vrng(opt.seed + 8);
  const VerticalTallies vt = vertical_axioms(am, vrng, opt.samples, ctol);

  Tally h1assoc, h1unit, h1inv, h1base, h2assoc, h2unit, h2st, h2id, interchange;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const OneArrow o3 = am.random_one_arrow(rng);
    const OneArrow o2 = am.random_one_arrow_from(rng, am.tgt0(o3));
    const OneArrow o1 = am.random_one_arrow_from(rng, am.tgt0(o2));
    h1assoc.run([&] { return am.distance(am.horiz1(am.horiz1(o1, o2, ctol), o3, ctol), am.horiz1(o1, am.horiz1(o2, o3, ctol), ctol)); });
    h1unit.run([&] {
      return std::max(am.distance(am.horiz1(am.horiz1_unit(am.tgt0(o3)), o3, ctol), o3),
                      am.distance(am.horiz1(o3, am.horiz1_unit(am.src0(o3)), ctol), o3));
    });
    h1inv.run([&] {
      const OneArrow inv = am.horiz1_inverse(o3);
      return std::max(am.distance(am.horiz1(o3, inv, ctol), am.horiz1_unit(am.tgt0(o3))),
                      am.distance(am.horiz1(inv, o3, ctol), am.horiz1_unit(am.src0(o3))));
    });
    h1base.run([&] {
      const OneArrow p = am.horiz1(o2, o3, ctol);
      return std::max(max_abs(Vec(am.src0(p) - am.src0(o3))), max_abs(Vec(am.tgt0(p) - am.tgt0(o2))));
    });

    const TwoArrow a3 = am.random_two_arrow_on(rng, o3), a2 = am.random_two_arrow_on(rng, o2), a1 = am.random_two_arrow_on(rng, o1);
    h2assoc.run([&] { return am.distance(am.horiz(am.horiz(a1, a2, ctol), a3, ctol), am.horiz(a1, am.horiz(a2, a3, ctol), ctol)); });
    h2unit.run([&] {
      return std::max(am.distance(am.horiz(am.horiz_unit(am.tgt0(o3)), a3, ctol), a3),
                      am.distance(am.horiz(a3, am.horiz_unit(am.src0(o3)), ctol), a3));
    });
    h2st.run([&] {
      const TwoArrow p = am.horiz(a2, a3, ctol);
      return std::max(am.distance(am.src(p), am.horiz1(am.src(a2), am.src(a3), ctol)),
                      am.distance(am.tgt(p), am.horiz1(am.tgt(a2), am.tgt(a3), ctol)));
    });
    h2id.run([&] { return am.distance(am.horiz(am.vert_unit(o2), am.vert_unit(o3), ctol), am.vert_unit(am.horiz1(o2, o3, ctol))); });

    interchange.run([&] {
      const auto right = vertical_chain(am, rng, 2);
      const Vec m = am.tgt0(am.src(right[0]));
      const auto left = vertical_chain(am, rng, 2, &m);
      const TwoArrow lhs = am.horiz(am.vert(left[0], left[1], ctol), am.vert(right[0], right[1], ctol), ctol);
      const TwoArrow rhs = am.vert(am.horiz(left[0], right[0], ctol), am.horiz(left[1], right[1], ctol), ctol);
      return am.distance(lhs, rhs);
    });
  }

  add_tally(r, "identity 2-arrows", "s(1_o) = t(1_o) = o with 1_o = (e, g, gamma)", id2, tol);
  add_tally(r, "globularity", "s0 s = s0 t and t0 s = t0 t", glob, tol);
  add_tally(r, "vertical unit laws", "1 . a = a = a . 1", vt.unit, tol);
  add_tally(r, "vertical associativity", "(a.b).c = a.(b.c)", vt.assoc, tol);
  add_tally(r, "vertical inverses", "a . a^-1 and a^-1 . a are units", vinv, tol);
  add_tally(r, "vertical source and target", "source and target of a.b", vt.st, tol);
  add_tally(r, "horizontal associativity on 1-arrows", "(o1 o2) o3 = o1 (o2 o3)", h1assoc, tol);
  add_tally(r, "horizontal units on 1-arrows", "(e, 1_m) is a unit", h1unit, tol);
  add_tally(r, "horizontal inverses on 1-arrows", "(g^-1, Phi((e,g), gamma)^-1) is inverse to (g, gamma)", h1inv, tol);
  add_tally(r, "horizontal base points", "s0(o1 o2) = s0(o2), t0(o1 o2) = t0(o1)", h1base, tol);
  add_tally(r, "horizontal associativity on 2-arrows", "(a1 a2) a3 = a1 (a2 a3)", h2assoc, tol);
  add_tally(r, "horizontal units on 2-arrows", "(e, e, 1_m) is a unit", h2unit, tol);
  add_tally(r, "horizontal product covers 1-arrows", "s(a1 a2) = s(a1) s(a2), t(a1 a2) = t(a1) t(a2)", h2st, tol);
  add_tally(r, "horizontal product of identities", "1_o1 1_o2 = 1_(o1 o2)", h2id, tol);
  add_tally(r, "interchange law", "(a1.a1')(a2.a2') = (a1 a2).(a1' a2')", interchange, tol);
  return r;
}

}  // namespace g2kit
