#pragma once

// Lie algebroids in local coordinates, viewed as degree-1 Q-manifolds A[1].
//
// Chart variables: base coordinates x1..xn (degree 0) followed by fiber
// coordinates xi1..xir (degree 1). Structure functions c_ij^k and anchor
// components rho_i^alpha are polynomials in the base coordinates. All
// indices are 0-based.

#include <g2kit/graded_poly.hpp>
#include <g2kit/report.hpp>

#include <vector>

namespace g2kit {

ContextPtr algebroid_context(std::size_t base_dim, std::size_t rank);
std::string base_name(std::size_t alpha);
std::string fiber_name(std::size_t i);

class LieAlgebroidData {
 public:
  LieAlgebroidData(std::size_t base_dim, std::size_t rank);

  std::size_t base_dim() const { return n_; }
  std::size_t rank() const { return r_; }
  const ContextPtr& context() const { return ctx_; }

  const GradedPoly& c(std::size_t i, std::size_t j, std::size_t k) const { return c_.at((i * r_ + j) * r_ + k); }
  /// Sets c_ij^k and c_ji^k = -c_ij^k. Requires i != j unless value is zero.
  void set_c(std::size_t i, std::size_t j, std::size_t k, GradedPoly value);
  const GradedPoly& rho(std::size_t i, std::size_t alpha) const { return rho_.at(i * n_ + alpha); }
  void set_rho(std::size_t i, std::size_t alpha, GradedPoly value);

  /// Variable index of x_alpha / xi^i in the chart context.
  std::size_t base_var(std::size_t alpha) const { return alpha; }
  std::size_t fiber_var(std::size_t i) const { return n_ + i; }

  friend bool operator==(const LieAlgebroidData& a, const LieAlgebroidData& b);

 private:
  GradedPoly check_base_poly(GradedPoly value) const;

  std::size_t n_, r_;
  ContextPtr ctx_;
  std::vector<GradedPoly> c_;
  std::vector<GradedPoly> rho_;
};

/// Section of A: components in the frame e_1..e_r, polynomials in x.
struct Section {
  std::vector<GradedPoly> coeffs;

  static Section zero(const ContextPtr& ctx, std::size_t rank);
  static Section basis(const ContextPtr& ctx, std::size_t rank, std::size_t i);
  friend bool operator==(const Section&, const Section&) = default;
};

/// Covariant differential operator on a vector bundle of rank r:
/// (Y s)^a = symbol(s^a) + sum_b matrix[a][b] s^b.
struct CDOData {
  std::vector<std::vector<GradedPoly>> matrix;
  std::vector<GradedPoly> symbol;

  friend bool operator==(const CDOData&, const CDOData&) = default;
};

/// Q = 1/2 xi^j xi^i c_ij^k d/dxi^k + rho_i^alpha xi^i d/dx^alpha.
Derivation build_Q(const LieAlgebroidData& a);

/// Reads c and rho back from a degree-1 field on an algebroid chart.
/// Throws InputError if Q does not have the algebroid shape.
LieAlgebroidData algebroid_from_Q(const Derivation& q, std::size_t base_dim, std::size_t rank);

/// [Q,Q] = 0, coefficient by coefficient. Throws std::invalid_argument if Q is not of degree 1.
Report check_homological(const Derivation& q);

/// Section as the degree -1 field a^i d/dxi^i.
Derivation section_to_vf(const ContextPtr& ctx, const Section& a);
/// Inverse of section_to_vf; throws InputError for fields of other shapes.
Section vf_to_section(const Derivation& d);

/// [[Q, a], b] read back as a section.
Section derived_bracket(const Derivation& q, const Section& a, const Section& b);
/// [Q, a](f) for f a function of the base.
GradedPoly derived_anchor(const Derivation& q, const Section& a, const GradedPoly& f);

/// [[Q,e_i],e_j] = c_ij^k e_k and [[Q,e_i],x^alpha] = rho_i^alpha for Q = build_Q(a),
/// plus [Q,Q] = 0.
Report derived_structure_report(const LieAlgebroidData& a);

/// Classical bracket [a,b]^k = a^i rho_i(b^k) - b^j rho_j(a^k) + a^i b^j c_ij^k.
Section section_bracket(const LieAlgebroidData& a, const Section& s, const Section& t);
/// rho(s)(f) = s^i rho_i^alpha df/dx^alpha.
GradedPoly anchor_apply(const LieAlgebroidData& a, const Section& s, const GradedPoly& f);

/// Base vector field g^alpha d/dx^alpha applied to f.
GradedPoly apply_symbol(const std::vector<GradedPoly>& symbol, const GradedPoly& f);

/// Dual operator on E*: same symbol, matrix -M^T.
CDOData dual_cdo(const CDOData& y);
Section apply_cdo(const CDOData& y, const Section& s);
/// Commutator of operators, again a CDO.
CDOData cdo_commutator(const CDOData& y1, const CDOData& y2);

/// Degree-0 field g^alpha d/dx^alpha + f_ab xi^a d/dxi^b on A[1] seen as a
/// CDO on A*: matrix[a][b] = f_ab, symbol g.
CDOData vf_to_cdo(const Derivation& x0, std::size_t base_dim, std::size_t rank);
Derivation cdo_to_vf(const ContextPtr& ctx, const CDOData& y);

/// Algebroid of a Poisson bivector pi on R^n: T*R^n with rho_i^alpha = pi_{i alpha}
/// and c_ij^k = d pi_ij / dx^k. Entries may use any context containing x1..xn.
LieAlgebroidData poisson_to_algebroid(const std::vector<std::vector<GradedPoly>>& pi);

}  // namespace g2kit
