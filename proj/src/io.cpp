#include <g2kit/io.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace g2kit {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw InputError(path + ": " + msg); }

std::string at_key(const std::string& path, const std::string& key) { return path + "." + key; }
std::string at_index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

void expect_object(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) fail(at_key(path, key), "unknown field");
  }
}

const Json& require(const Json& j, const std::string& path, const char* key) {
  if (!j.contains(key)) fail(at_key(path, key), "missing field");
  return j.at(key);
}

const Json& expect_array(const Json& j, const std::string& path, std::optional<std::size_t> size = std::nullopt) {
  if (!j.is_array()) fail(path, "expected an array");
  if (size && j.size() != *size)
    fail(path, "expected " + std::to_string(*size) + " entries, found " + std::to_string(j.size()));
  return j;
}

std::size_t get_size(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<long long>() < 0))
    fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::size_t get_index(const Json& j, const std::string& path, std::size_t bound) {
  const std::size_t i = get_size(j, path);
  if (i >= bound) fail(path, "index " + std::to_string(i) + " out of range (size " + std::to_string(bound) + ")");
  return i;
}

Rational get_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(mpz_class(j.dump()));
  if (!j.is_string()) fail(path, "expected a rational string \"p/q\" or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

std::string get_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

bool get_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected true or false");
  return j.get<bool>();
}

// --- structure constants -----------------------------------------------------

using Key3 = std::tuple<std::size_t, std::size_t, std::size_t>;

// Entries [i, j, k, q]. Each listed (i,j,k) is stored as given; the mirrored
// entry (j,i,k) gets -q unless it is listed too.
Tensor3 bracket_from_json(const Json& j, const std::string& path, std::size_t dim) {
  expect_array(j, path);
  std::map<Key3, Rational> listed;
  for (std::size_t e = 0; e < j.size(); ++e) {
    const std::string p = at_index(path, e);
    const Json& row = expect_array(j[e], p, 4);
    const Key3 key{get_index(row[0], at_index(p, 0), dim), get_index(row[1], at_index(p, 1), dim),
                   get_index(row[2], at_index(p, 2), dim)};
    if (!listed.emplace(key, get_rational(row[3], at_index(p, 3))).second) fail(p, "duplicate entry");
  }
  Tensor3 c(dim, dim, dim);
  for (const auto& [key, v] : listed) {
    const auto [a, b, k] = key;
    c(a, b, k) = v;
    if (a != b && !listed.contains({b, a, k})) c(b, a, k) = -v;
  }
  return c;
}

Json bracket_to_json(const Tensor3& c) {
  Json out = Json::array();
  const std::size_t n = c.dim0();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j) {
          if (c(i, i, k) != 0) out.push_back({i, i, k, format_rational(c(i, i, k))});
          continue;
        }
        const bool antisym = c(j, i, k) == -c(i, j, k);
        if (c(i, j, k) != 0 || !antisym) out.push_back({i, j, k, format_rational(c(i, j, k))});
        if (!antisym) out.push_back({j, i, k, format_rational(c(j, i, k))});
      }
  return out;
}

Tensor3 tensor_from_json(const Json& j, const std::string& path, std::size_t d0, std::size_t d1, std::size_t d2) {
  expect_array(j, path);
  Tensor3 t(d0, d1, d2);
  std::set<Key3> seen;
  for (std::size_t e = 0; e < j.size(); ++e) {
    const std::string p = at_index(path, e);
    const Json& row = expect_array(j[e], p, 4);
    const Key3 key{get_index(row[0], at_index(p, 0), d0), get_index(row[1], at_index(p, 1), d1),
                   get_index(row[2], at_index(p, 2), d2)};
    if (!seen.insert(key).second) fail(p, "duplicate entry");
    t(std::get<0>(key), std::get<1>(key), std::get<2>(key)) = get_rational(row[3], at_index(p, 3));
  }
  return t;
}

Json tensor_to_json(const Tensor3& t) {
  Json out = Json::array();
  for (std::size_t a = 0; a < t.dim0(); ++a)
    for (std::size_t b = 0; b < t.dim1(); ++b)
      for (std::size_t c = 0; c < t.dim2(); ++c)
        if (t(a, b, c) != 0) out.push_back({a, b, c, format_rational(t(a, b, c))});
  return out;
}

RMatrix matrix_from_json(const Json& j, const std::string& path, std::size_t rows, std::size_t cols) {
  expect_array(j, path);
  RMatrix m(rows, cols);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < j.size(); ++e) {
    const std::string p = at_index(path, e);
    const Json& row = expect_array(j[e], p, 3);
    const std::size_t a = get_index(row[0], at_index(p, 0), rows), i = get_index(row[1], at_index(p, 1), cols);
    if (!seen.insert({a, i}).second) fail(p, "duplicate entry");
    m(a, i) = get_rational(row[2], at_index(p, 2));
  }
  return m;
}

Json matrix_to_json(const RMatrix& m) {
  Json out = Json::array();
  for (std::size_t a = 0; a < m.rows(); ++a)
    for (std::size_t i = 0; i < m.cols(); ++i)
      if (m(a, i) != 0) out.push_back({a, i, format_rational(m(a, i))});
  return out;
}

std::vector<GradedPoly> polys_from_json(const Json& j, const std::string& path, const ContextPtr& ctx, std::size_t n) {
  expect_array(j, path, n);
  std::vector<GradedPoly> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(poly_from_json(j[i], ctx, at_index(path, i)));
  return out;
}

Json polys_to_json(const std::vector<GradedPoly>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(poly_to_json(p));
  return out;
}

Json residual_to_json(const std::optional<double>& r) {
  if (!r) return nullptr;
  if (std::isnan(*r)) return "nan";
  if (std::isinf(*r)) return *r > 0 ? "inf" : "-inf";
  return *r;
}

std::optional<double> residual_from_json(const Json& j, const std::string& path) {
  if (j.is_null()) return std::nullopt;
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  fail(path, "expected a number, null, \"nan\", \"inf\" or \"-inf\"");
}

std::string located_parse_error(const std::string& text, const nlohmann::json::parse_error& e) {
  std::size_t line = 1, col = 1;
  const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  std::string msg = e.what();
  if (const auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
  return "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg;
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(source + ": " + located_parse_error(text, e));
  }
}

}  // namespace

// --- polynomials ---------------------------------------------------------------

Json poly_to_json(const GradedPoly& p) {
  Json monos = Json::array();
  const auto& ctx = *p.context();
  for (const auto& [mono, coef] : p.terms()) {
    Json exps = Json::object();
    for (std::size_t v = 0; v < mono.size(); ++v)
      if (mono[v] != 0) exps[ctx.var(v).name] = mono[v];
    monos.push_back({{"exps", exps}, {"coef", format_rational(coef)}});
  }
  return {{"monomials", monos}};
}

GradedPoly poly_from_json(const Json& j, const ContextPtr& ctx, const std::string& path) {
  if (j.is_string() || j.is_number_integer()) return GradedPoly::constant(ctx, get_rational(j, path));
  expect_object(j, path, {"monomials"});
  const std::string mp = at_key(path, "monomials");
  const Json& monos = expect_array(require(j, path, "monomials"), mp);
  GradedPoly p(ctx);
  for (std::size_t e = 0; e < monos.size(); ++e) {
    const std::string tp = at_index(mp, e);
    expect_object(monos[e], tp, {"exps", "coef"});
    const Json& exps = require(monos[e], tp, "exps");
    const std::string ep = at_key(tp, "exps");
    if (!exps.is_object()) fail(ep, "expected an object mapping variable names to exponents");
    Monomial mono(ctx->size(), 0);
    for (const auto& [name, power] : exps.items()) {
      const auto v = ctx->find(name);
      if (!v) fail(at_key(ep, name), "unknown variable \"" + name + "\"");
      const std::size_t k = get_size(power, at_key(ep, name));
      if (k > std::numeric_limits<std::uint16_t>::max()) fail(at_key(ep, name), "exponent too large");
      if (ctx->is_odd(*v) && k > 1) fail(at_key(ep, name), "odd variable with exponent above 1");
      mono[*v] = static_cast<std::uint16_t>(k);
    }
    const Rational coef = get_rational(require(monos[e], tp, "coef"), at_key(tp, "coef"));
    try {
      p.add_term(mono, coef);
    } catch (const InputError& err) {
      fail(tp, err.what());
    } catch (const std::invalid_argument& err) {
      fail(tp, err.what());
    }
  }
  return p;
}

// --- Lie 2-algebras and crossed modules ------------------------------------

Json lie2_to_json(const StrictLie2Data& l) {
  return {{"dim_h", l.dim_h},
          {"dim_g", l.dim_g},
          {"bracket_g", bracket_to_json(l.bracket_g)},
          {"act", tensor_to_json(l.act)},
          {"delta", matrix_to_json(l.delta)}};
}

StrictLie2Data lie2_from_json(const Json& j, const std::string& path) {
  expect_object(j, path, {"dim_h", "dim_g", "bracket_g", "act", "delta"});
  const std::size_t h = get_size(require(j, path, "dim_h"), at_key(path, "dim_h"));
  const std::size_t g = get_size(require(j, path, "dim_g"), at_key(path, "dim_g"));
  StrictLie2Data l(h, g);
  if (j.contains("bracket_g")) l.bracket_g = bracket_from_json(j["bracket_g"], at_key(path, "bracket_g"), g);
  if (j.contains("act")) l.act = tensor_from_json(j["act"], at_key(path, "act"), g, h, h);
  if (j.contains("delta")) l.delta = matrix_from_json(j["delta"], at_key(path, "delta"), h, g);
  return l;
}

Json crossed_to_json(const CrossedModuleData& c) {
  return {{"dim_h", c.dim_h},
          {"dim_g", c.dim_g},
          {"bracket_h", bracket_to_json(c.bracket_h)},
          {"bracket_g", bracket_to_json(c.bracket_g)},
          {"alpha", tensor_to_json(c.alpha)},
          {"delta", matrix_to_json(c.delta)}};
}

CrossedModuleData crossed_from_json(const Json& j, const std::string& path) {
  expect_object(j, path, {"dim_h", "dim_g", "bracket_h", "bracket_g", "alpha", "delta"});
  const std::size_t h = get_size(require(j, path, "dim_h"), at_key(path, "dim_h"));
  const std::size_t g = get_size(require(j, path, "dim_g"), at_key(path, "dim_g"));
  CrossedModuleData c(h, g);
  if (j.contains("bracket_h")) c.bracket_h = bracket_from_json(j["bracket_h"], at_key(path, "bracket_h"), h);
  if (j.contains("bracket_g")) c.bracket_g = bracket_from_json(j["bracket_g"], at_key(path, "bracket_g"), g);
  if (j.contains("alpha")) c.alpha = tensor_from_json(j["alpha"], at_key(path, "alpha"), g, h, h);
  if (j.contains("delta")) c.delta = matrix_from_json(j["delta"], at_key(path, "delta"), h, g);
  return c;
}

// --- algebroids --------------------------------------------------------------

Json algebroid_to_json(const LieAlgebroidData& a) {
  Json c = Json::array(), rho = Json::array();
  const std::size_t n = a.base_dim(), r = a.rank();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        if (!a.c(i, j, k).is_zero()) c.push_back({{"i", i}, {"j", j}, {"k", k}, {"poly", poly_to_json(a.c(i, j, k))}});
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t al = 0; al < n; ++al)
      if (!a.rho(i, al).is_zero()) rho.push_back({{"i", i}, {"alpha", al}, {"poly", poly_to_json(a.rho(i, al))}});
  return {{"base_dim", n}, {"rank", r}, {"c", c}, {"rho", rho}};
}

LieAlgebroidData algebroid_from_json(const Json& j, const std::string& path) {
  expect_object(j, path, {"base_dim", "rank", "c", "rho"});
  const std::size_t n = get_size(require(j, path, "base_dim"), at_key(path, "base_dim"));
  const std::size_t r = get_size(require(j, path, "rank"), at_key(path, "rank"));
  LieAlgebroidData a(n, r);
  const auto& ctx = a.context();
  if (j.contains("c")) {
    const std::string cp = at_key(path, "c");
    const Json& cs = expect_array(j["c"], cp);
    std::set<Key3> seen;
    for (std::size_t e = 0; e < cs.size(); ++e) {
      const std::string p = at_index(cp, e);
      expect_object(cs[e], p, {"i", "j", "k", "poly"});
      const std::size_t i = get_index(require(cs[e], p, "i"), at_key(p, "i"), r);
      const std::size_t jj = get_index(require(cs[e], p, "j"), at_key(p, "j"), r);
      const std::size_t k = get_index(require(cs[e], p, "k"), at_key(p, "k"), r);
      if (i >= jj) fail(p, "entries of c need i < j");
      if (!seen.insert({i, jj, k}).second) fail(p, "duplicate entry");
      try {
        a.set_c(i, jj, k, poly_from_json(require(cs[e], p, "poly"), ctx, at_key(p, "poly")));
      } catch (const InputError& err) {
        fail(at_key(p, "poly"), err.what());
      }
    }
  }
  if (j.contains("rho")) {
    const std::string rp = at_key(path, "rho");
    const Json& rs = expect_array(j["rho"], rp);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < rs.size(); ++e) {
      const std::string p = at_index(rp, e);
      expect_object(rs[e], p, {"i", "alpha", "poly"});
      const std::size_t i = get_index(require(rs[e], p, "i"), at_key(p, "i"), r);
      const std::size_t al = get_index(require(rs[e], p, "alpha"), at_key(p, "alpha"), n);
      if (!seen.insert({i, al}).second) fail(p, "duplicate entry");
      try {
        a.set_rho(i, al, poly_from_json(require(rs[e], p, "poly"), ctx, at_key(p, "poly")));
      } catch (const InputError& err) {
        fail(at_key(p, "poly"), err.what());
      }
    }
  }
  return a;
}

LieAlgebroidData poisson_from_json(const Json& j, const std::string& path) {
  expect_object(j, path, {"dim", "pi"});
  const std::size_t n = get_size(require(j, path, "dim"), at_key(path, "dim"));
  std::vector<Variable> vars;
  for (std::size_t a = 0; a < n; ++a) vars.push_back({base_name(a), 0});
  const ContextPtr ctx = make_context(std::move(vars));
  std::vector<std::vector<GradedPoly>> pi(n, std::vector<GradedPoly>(n, GradedPoly(ctx)));
  const std::string pp = at_key(path, "pi");
  const Json& ps = expect_array(require(j, path, "pi"), pp);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < ps.size(); ++e) {
    const std::string p = at_index(pp, e);
    expect_object(ps[e], p, {"i", "j", "poly"});
    const std::size_t i = get_index(require(ps[e], p, "i"), at_key(p, "i"), n);
    const std::size_t jj = get_index(require(ps[e], p, "j"), at_key(p, "j"), n);
    if (i >= jj) fail(p, "entries of pi need i < j");
    if (!seen.insert({i, jj}).second) fail(p, "duplicate entry");
    pi[i][jj] = poly_from_json(require(ps[e], p, "poly"), ctx, at_key(p, "poly"));
    pi[jj][i] = -pi[i][jj];
  }
  return poisson_to_algebroid(pi);
}

// --- actions ---------------------------------------------------------------------

Json action_to_json(const StrictActionData& s) {
  Json mu_h = Json::array(), mu_g = Json::array();
  for (const auto& sec : s.mu_h) mu_h.push_back(polys_to_json(sec.coeffs));
  for (const auto& f : s.mu_g) {
    const CDOData y = vf_to_cdo(f.embed(s.A.context()), s.A.base_dim(), s.A.rank());
    Json fiber = Json::array();
    for (const auto& row : y.matrix) fiber.push_back(polys_to_json(row));
    mu_g.push_back({{"base", polys_to_json(y.symbol)}, {"fiber", fiber}});
  }
  return {{"lie2", lie2_to_json(s.L)}, {"algebroid", algebroid_to_json(s.A)}, {"mu_h", mu_h}, {"mu_g", mu_g}};
}

StrictActionData action_from_json(const Json& j, const std::string& path) {
  expect_object(j, path, {"lie2", "algebroid", "mu_h", "mu_g"});
  StrictActionData s{lie2_from_json(require(j, path, "lie2"), at_key(path, "lie2")),
                     algebroid_from_json(require(j, path, "algebroid"), at_key(path, "algebroid")),
                     {},
                     {}};
  const auto& ctx = s.A.context();
  const std::size_t n = s.A.base_dim(), r = s.A.rank();
  const std::string hp = at_key(path, "mu_h"), gp = at_key(path, "mu_g");
  const Json& mh = expect_array(require(j, path, "mu_h"), hp, s.L.dim_h);
  for (std::size_t a = 0; a < mh.size(); ++a) {
    s.mu_h.push_back(Section{polys_from_json(mh[a], at_index(hp, a), ctx, r)});
    for (std::size_t k = 0; k < r; ++k)
      if (!s.mu_h.back().coeffs[k].only_uses_degree_zero())
        fail(at_index(at_index(hp, a), k), "section coefficients must be functions on the base");
  }
  const Json& mg = expect_array(require(j, path, "mu_g"), gp, s.L.dim_g);
  for (std::size_t i = 0; i < mg.size(); ++i) {
    const std::string p = at_index(gp, i);
    expect_object(mg[i], p, {"base", "fiber"});
    CDOData y;
    y.symbol = polys_from_json(require(mg[i], p, "base"), at_key(p, "base"), ctx, n);
    const std::string fp = at_key(p, "fiber");
    const Json& fiber = expect_array(require(mg[i], p, "fiber"), fp, r);
    for (std::size_t a = 0; a < r; ++a) y.matrix.push_back(polys_from_json(fiber[a], at_index(fp, a), ctx, r));
    for (std::size_t a = 0; a < n; ++a)
      if (!y.symbol[a].only_uses_degree_zero()) fail(at_index(at_key(p, "base"), a), "must be a function on the base");
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b)
        if (!y.matrix[a][b].only_uses_degree_zero())
          fail(at_index(at_index(fp, a), b), "must be a function on the base");
    s.mu_g.push_back(cdo_to_vf(ctx, y));
  }
  try {
    check_action_shapes(s);
  } catch (const InputError& e) {
    fail(path, e.what());
  }
  return s;
}

// --- reports -------------------------------------------------------------------

Json report_to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks())
    checks.push_back({{"name", c.name},
                      {"anchor", c.anchor},
                      {"passed", c.passed},
                      {"residual", residual_to_json(c.residual)},
                      {"details", c.details}});
  Json meta = Json::object();
  for (const auto& [k, v] : r.meta()) meta[k] = v;
  return {{"schema", kSchema}, {"title", r.title()}, {"passed", r.passed()}, {"meta", meta}, {"checks", checks}};
}

Report report_from_json(const Json& j, const std::string& path) {
  expect_object(j, path, {"schema", "title", "passed", "meta", "checks"});
  if (get_string(require(j, path, "schema"), at_key(path, "schema")) != kSchema)
    fail(at_key(path, "schema"), std::string("expected \"") + kSchema + "\"");
  Report r(get_string(require(j, path, "title"), at_key(path, "title")));
  if (j.contains("meta")) {
    const std::string mp = at_key(path, "meta");
    if (!j["meta"].is_object()) fail(mp, "expected an object");
    for (const auto& [k, v] : j["meta"].items()) r.set_meta(k, get_string(v, at_key(mp, k)));
  }
  const std::string cp = at_key(path, "checks");
  const Json& cs = expect_array(require(j, path, "checks"), cp);
  for (std::size_t e = 0; e < cs.size(); ++e) {
    const std::string p = at_index(cp, e);
    expect_object(cs[e], p, {"name", "anchor", "passed", "residual", "details"});
    Check c;
    c.name = get_string(require(cs[e], p, "name"), at_key(p, "name"));
    c.anchor = cs[e].contains("anchor") ? get_string(cs[e]["anchor"], at_key(p, "anchor")) : "";
    c.passed = get_bool(require(cs[e], p, "passed"), at_key(p, "passed"));
    if (cs[e].contains("residual")) c.residual = residual_from_json(cs[e]["residual"], at_key(p, "residual"));
    c.details = cs[e].contains("details") ? get_string(cs[e]["details"], at_key(p, "details")) : "";
    r.add(std::move(c));
  }
  if (get_bool(require(j, path, "passed"), at_key(path, "passed")) != r.passed())
    fail(at_key(path, "passed"), "overall status disagrees with the checks");
  return r;
}

Report parse_report_text(const std::string& text) { return report_from_json(parse_json_text(text, "<report>")); }

// --- formatting ----------------------------------------------------------------

namespace {

void format_into(std::string& out, const Json& j, std::size_t indent, std::size_t width) {
  const std::string flat = j.dump();
  if (!j.is_structured() || j.empty() || indent + flat.size() <= width) {
    out += flat;
    return;
  }
  const std::string pad(indent + 2, ' ');
  const bool obj = j.is_object();
  out += obj ? "{\n" : "[\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (obj) out += Json(it.key()).dump() + ": ";
    format_into(out, *it, indent + 2, width);
  }
  out += "\n" + std::string(indent, ' ') + (obj ? "}" : "]");
}

}  // namespace

std::string format_json(const Json& j, std::size_t width) {
  std::string out;
  format_into(out, j, 0, width);
  return out;
}

// --- bundles -------------------------------------------------------------------

Json bundle_to_json(const std::string& kind, Json payload) {
  Json out = {{"schema", kSchema}, {"kind", kind}};
  for (auto& [k, v] : payload.items()) out[k] = v;
  return out;
}

Bundle bundle_from_json(const Json& j) {
  if (!j.is_object()) fail("$", "expected an object");
  if (get_string(require(j, "$", "schema"), "$.schema") != kSchema)
    fail("$.schema", std::string("expected \"") + kSchema + "\"");
  const std::string kind = get_string(require(j, "$", "kind"), "$.kind");
  Json payload = j;
  for (const char* k : {"schema", "kind", "name", "description"}) payload.erase(k);
  if (kind == "lie2") return {kind, lie2_from_json(payload)};
  if (kind == "crossed") return {kind, crossed_from_json(payload)};
  if (kind == "algebroid") return {kind, algebroid_from_json(payload)};
  if (kind == "poisson") return {kind, poisson_from_json(payload)};
  if (kind == "action") return {kind, action_from_json(payload)};
  fail("$.kind", "unknown kind \"" + kind + "\" (expected lie2, crossed, algebroid, poisson or action)");
}

Bundle parse_bundle_text(const std::string& text, const std::string& source) {
  const Json j = parse_json_text(text, source);
  try {
    return bundle_from_json(j);
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

Bundle parse_bundle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_bundle_text(ss.str(), path);
}

}  // namespace g2kit
