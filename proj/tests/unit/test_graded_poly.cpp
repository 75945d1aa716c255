#include <doctest.h>

#include <g2kit/graded_poly.hpp>

#include <random>

using namespace g2kit;

namespace {

ContextPtr mixed_ctx() {
  return make_context({{"x", 0}, {"y", 0}, {"a", 1}, {"b", 1}, {"c", 1}, {"P", 2}});
}

GradedPoly v(const ContextPtr& c, const char* n) { return GradedPoly::variable(c, n); }
GradedPoly k(const ContextPtr& c, long q) { return GradedPoly::constant(c, Rational(q)); }

// Random homogeneous field of the given degree with small integer coefficients.
Derivation random_field(const ContextPtr& ctx, int deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-2, 2);
  std::vector<GradedPoly> monos;
  const std::vector<GradedPoly> gens = {k(ctx, 1), v(ctx, "x"), v(ctx, "y"), v(ctx, "a"), v(ctx, "b"), v(ctx, "c"), v(ctx, "P")};
  for (const auto& g1 : gens)
    for (const auto& g2 : gens) monos.push_back(g1 * g2);
  Derivation d(ctx);
  for (std::size_t i = 0; i < ctx->size(); ++i) {
    GradedPoly comp(ctx);
    for (const auto& m : monos) {
      if (m.is_zero() || *m.degree() != ctx->degree(i) + deg) continue;
      if (rng() % 3 != 0) continue;
      comp += m * Rational(coef(rng));
    }
    d.set_component(i, comp);
  }
  return d;
}

}  // namespace

TEST_CASE("odd variables anticommute and square to zero") {
  auto c = mixed_ctx();
  CHECK(v(c, "a") * v(c, "b") == -(v(c, "b") * v(c, "a")));
  CHECK((v(c, "a") * v(c, "a")).is_zero());
  CHECK(v(c, "x") * v(c, "a") == v(c, "a") * v(c, "x"));
  CHECK(v(c, "P") * v(c, "a") == v(c, "a") * v(c, "P"));
  auto abc = v(c, "a") * v(c, "b") * v(c, "c");
  CHECK(v(c, "c") * v(c, "b") * v(c, "a") == -abc);
  CHECK(v(c, "b") * v(c, "c") * v(c, "a") == abc);
}

TEST_CASE("left partial derivatives carry Koszul signs") {
  auto c = mixed_ctx();
  auto ab = v(c, "a") * v(c, "b");
  CHECK(ab.partial(c->index("a")) == v(c, "b"));
  CHECK(ab.partial(c->index("b")) == -v(c, "a"));
  auto p = v(c, "x") * v(c, "x") * v(c, "P");
  CHECK(p.partial(c->index("x")) == k(c, 2) * v(c, "x") * v(c, "P"));
  CHECK(p.partial(c->index("P")) == v(c, "x") * v(c, "x"));
}

TEST_CASE("degree and homogeneity") {
  auto c = mixed_ctx();
  CHECK((v(c, "a") * v(c, "b")).degree() == 2);
  CHECK((v(c, "a") * v(c, "b") + v(c, "P")).degree() == 2);
  CHECK_FALSE((v(c, "a") + v(c, "P")).degree().has_value());
  CHECK(GradedPoly(c).is_homogeneous());
}

TEST_CASE("commutator of even fields") {
  auto c = make_context({{"x", 0}});
  auto dx = Derivation::partial(c, "x");
  auto xdx = v(c, "x") * dx;
  CHECK(gcommutator(dx, xdx) == dx);
  CHECK(gcommutator(xdx, dx) == -dx);
}

TEST_CASE("odd fields: [d/da, a*b d/dP-like] sign") {
  auto c = mixed_ctx();
  auto da = Derivation::partial(c, "a");
  auto db = Derivation::partial(c, "b");
  // odd-odd partials anticommute: [d/da, d/db] = 0 and d/da d/db = - d/db d/da on ab.
  CHECK(gcommutator(da, db).is_zero());
  auto ab = v(c, "a") * v(c, "b");
  CHECK(da.apply(db.apply(ab)) == -db.apply(da.apply(ab)));
  // Q = a*b d/dc has degree 1; [Q,Q] = 2 Q^2 vanishes here.
  Derivation q(c);
  q.set_component("c", ab);
  CHECK(q.degree() == 1);
  CHECK(gcommutator(q, q).is_zero());
}

TEST_CASE("derivation Leibniz rule on products") {
  std::mt19937_64 rng(7);
  auto c = mixed_ctx();
  const std::vector<GradedPoly> ps = {v(c, "a") * v(c, "x"), v(c, "b") * v(c, "c"), v(c, "P") + v(c, "a") * v(c, "b"), v(c, "y") * v(c, "y")};
  for (int deg = -2; deg <= 2; ++deg) {
    auto d = random_field(c, deg, rng);
    for (const auto& p : ps)
      for (const auto& q : ps) {
        const int sign = ((deg * *p.degree()) % 2 != 0) ? -1 : 1;
        CHECK(d.apply(p * q) == d.apply(p) * q + Rational(sign) * (p * d.apply(q)));
      }
  }
}

TEST_CASE("graded antisymmetry and Jacobi for random fields") {
  std::mt19937_64 rng(11);
  auto c = mixed_ctx();
  for (int trial = 0; trial < 12; ++trial) {
    const int p1 = int(rng() % 3) - 1, p2 = int(rng() % 3) - 1, p3 = int(rng() % 3) - 1;
    auto d1 = random_field(c, p1, rng), d2 = random_field(c, p2, rng), d3 = random_field(c, p3, rng);
    auto s = [](int a, int b) { return Rational(((a * b) % 2 != 0) ? -1 : 1); };
    CHECK(gcommutator(d1, d2) == -(s(p1, p2) * gcommutator(d2, d1)));
    // [d1,[d2,d3]] = [[d1,d2],d3] + (-1)^{p1 p2} [d2,[d1,d3]]
    auto lhs = gcommutator(d1, gcommutator(d2, d3));
    auto rhs = gcommutator(gcommutator(d1, d2), d3) + s(p1, p2) * gcommutator(d2, gcommutator(d1, d3));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("embed reorders odd variables with sign") {
  auto c1 = make_context({{"a", 1}, {"b", 1}});
  auto c2 = make_context({{"b", 1}, {"z", 0}, {"a", 1}});
  auto ab = v(c1, "a") * v(c1, "b");
  CHECK(ab.embed(c2) == v(c2, "a") * v(c2, "b"));
  CHECK(ab.embed(c2) == -(v(c2, "b") * v(c2, "a")));
}

TEST_CASE("evaluate and string form") {
  auto c = make_context({{"x", 0}, {"y", 0}});
  auto p = k(c, 3) * v(c, "x") * v(c, "y") - v(c, "y") * Rational(1, 2);
  std::vector<double> pt = {2.0, 4.0};
  CHECK(p.evaluate(pt) == doctest::Approx(22.0));
  CHECK(GradedPoly(c).to_string() == "0");
}
