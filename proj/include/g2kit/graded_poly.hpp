#pragma once

// Exact graded-commutative polynomials on a single coordinate chart, and
// graded derivations (vector fields) acting on them.
//
// Variables carry degree 0, 1 or 2. Degree-1 variables anticommute and square
// to zero; everything else commutes. A monomial is stored as an exponent
// vector and always denotes the product of its variables taken in context
// order, so the Koszul sign of any reordering lives in the coefficient.

#include <g2kit/rational.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace g2kit {

struct Variable {
  std::string name;
  int degree = 0;
};

class GradedContext {
 public:
  explicit GradedContext(std::vector<Variable> vars);

  std::size_t size() const { return vars_.size(); }
  const Variable& var(std::size_t i) const { return vars_.at(i); }
  const std::vector<Variable>& vars() const { return vars_; }
  int degree(std::size_t i) const { return vars_.at(i).degree; }
  bool is_odd(std::size_t i) const { return vars_.at(i).degree % 2 != 0; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws InputError for unknown names.
  std::size_t index(std::string_view name) const;

  bool same_as(const GradedContext& other) const { return vars_.size() == other.vars_.size() && equal_vars(other); }

 private:
  bool equal_vars(const GradedContext& other) const;
  std::vector<Variable> vars_;
};

using ContextPtr = std::shared_ptr<const GradedContext>;

ContextPtr make_context(std::vector<Variable> vars);

using Monomial = std::vector<std::uint16_t>;

class GradedPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit GradedPoly(ContextPtr ctx);

  static GradedPoly constant(ContextPtr ctx, const Rational& c);
  static GradedPoly variable(ContextPtr ctx, std::string_view name);
  static GradedPoly variable(ContextPtr ctx, std::size_t index);

  const ContextPtr& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds coef times the canonical monomial. A monomial with an odd exponent above 1 is zero and is dropped.
  void add_term(const Monomial& mono, const Rational& coef);
  Rational coefficient(const Monomial& mono) const;
  /// Constant term (value at the origin).
  Rational constant_term() const;

  std::optional<int> degree() const;
  bool is_homogeneous() const { return is_zero() || degree().has_value(); }
  int monomial_degree(const Monomial& mono) const;
  /// True iff no variable outside `allowed` (by index) appears.
  bool only_uses(const std::vector<bool>& allowed) const;
  bool only_uses_degree_zero() const;

  /// Left derivative with respect to a coordinate; degree -deg(var).
  GradedPoly partial(std::size_t var) const;

  /// Numeric value for a polynomial in degree-0 variables only. `point` is
  /// indexed by context position; entries of other variables are ignored.
  double evaluate(std::span<const double> point) const;

  /// Re-expresses the polynomial in `target`, matching variables by name.
  /// Variables that do not occur need not exist in `target`.
  GradedPoly embed(const ContextPtr& target) const;

  GradedPoly& operator+=(const GradedPoly& other);
  GradedPoly& operator-=(const GradedPoly& other);
  GradedPoly& operator*=(const Rational& c);

  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(GradedPoly a, const Rational& c) { return a *= c; }
  friend GradedPoly operator*(const Rational& c, GradedPoly a) { return a *= c; }
  friend GradedPoly operator-(GradedPoly a) { return a *= Rational(-1); }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  friend bool operator==(const GradedPoly& a, const GradedPoly& b);

  std::string to_string() const;

 private:
  void check_same(const GradedPoly& other) const;

  ContextPtr ctx_;
  TermMap terms_;
};

/// Graded-commutative product.
GradedPoly mul(const GradedPoly& p, const GradedPoly& q);

/// Vector field sum_y D(y) d/dy on a graded chart.
class Derivation {
 public:
  explicit Derivation(ContextPtr ctx);

  /// The coordinate field d/d(name).
  static Derivation partial(ContextPtr ctx, std::string_view name);

  const ContextPtr& context() const { return ctx_; }
  const GradedPoly& component(std::size_t var) const { return components_.at(var); }
  const GradedPoly& component(std::string_view name) const { return component(ctx_->index(name)); }
  void set_component(std::size_t var, GradedPoly value);
  void set_component(std::string_view name, GradedPoly value) { set_component(ctx_->index(name), std::move(value)); }

  bool is_zero() const;
  /// Degree deg(D(y)) - deg(y), common to all nonzero components; nullopt if mixed.
  std::optional<int> degree() const;
  bool is_homogeneous() const { return is_zero() || degree().has_value(); }

  GradedPoly apply(const GradedPoly& p) const;
  Derivation embed(const ContextPtr& target) const;

  Derivation& operator+=(const Derivation& other);
  Derivation& operator-=(const Derivation& other);
  Derivation& operator*=(const Rational& c);
  friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
  friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
  friend Derivation operator*(Derivation a, const Rational& c) { return a *= c; }
  friend Derivation operator*(const Rational& c, Derivation a) { return a *= c; }
  friend Derivation operator-(Derivation a) { return a *= Rational(-1); }
  /// Left multiplication f * D.
  friend Derivation operator*(const GradedPoly& f, const Derivation& d);
  friend bool operator==(const Derivation& a, const Derivation& b);

  std::string to_string() const;

 private:
  void check_same(const Derivation& other) const;

  ContextPtr ctx_;
  std::vector<GradedPoly> components_;
};

/// D(p) with the graded Leibniz rule.
GradedPoly apply(const Derivation& d, const GradedPoly& p);

/// [D1, D2] = D1 o D2 - (-1)^{|D1||D2|} D2 o D1 for homogeneous fields.
/// Throws std::invalid_argument for non-homogeneous input.
Derivation gcommutator(const Derivation& d1, const Derivation& d2);

/// The derivation whose value on each coordinate y is D1(D2(y)).
Derivation compose_on_coordinates(const Derivation& d1, const Derivation& d2);

/// First nonzero coefficient of a field, for diagnostics.
struct NonzeroEntry {
  std::string variable;
  std::string monomial;
  Rational coefficient;
};
std::optional<NonzeroEntry> first_nonzero(const Derivation& d);

std::string monomial_to_string(const GradedContext& ctx, const Monomial& mono);

}  // namespace g2kit
