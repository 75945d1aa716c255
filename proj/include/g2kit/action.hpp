#pragma once

// Strict actions of a Lie 2-algebra h -> g on a Lie algebroid A, given by
// mu(w_a) (sections of A, degree -1 fields) and mu(v_i) (degree-0 fields of
// the shape g^a d/dx^a + f_ab xi^a d/dxi^b on A[1]).

#include <g2kit/algebroid.hpp>
#include <g2kit/lie2.hpp>

namespace g2kit {

struct StrictActionData {
  StrictLie2Data L;
  LieAlgebroidData A;
  std::vector<Section> mu_h;
  std::vector<Derivation> mu_g;
};

/// Throws InputError unless dimensions and field shapes are consistent.
void check_action_shapes(const StrictActionData& s);

/// mu(w) as the degree -1 field and mu(delta w) = sum_i D_ai mu(v_i).
Derivation mu_of_h(const StrictActionData& s, std::size_t a);
Derivation mu_of_delta(const StrictActionData& s, std::size_t a);

/// The four defining equations: (c) mu(delta w) = [Q_A, mu(w)], (d) [Q_A, mu(v)] = 0,
/// (a) mu[v,w] = [mu v, mu w], (b) mu[v,v'] = [mu v, mu v'].
Report validate_action_dgla(const StrictActionData& s);

/// Equivalent conditions stated with the bracket and anchor of A and
/// operators on sections, without using Q_A.
Report validate_action_classical(const StrictActionData& s);

/// Chart (eta, P, x, xi).
ContextPtr product_context(const StrictActionData& s);

/// Q_action = eta^i mu(v_i) - P^a mu(w_a) on the product chart.
Derivation build_Qaction(const StrictActionData& s);

/// [-Q_delta + Q_A, Q_br + Q_action] = 0 together with the self-commutation of
/// both summands.
Report check_double_q(const StrictActionData& s);

/// Q_total = -Q_delta + Q_A + Q_br + Q_action.
Derivation build_Qtotal(const StrictActionData& s);

/// Vector fields on the total space of A, chart x1..xn, y1..yr (all degree 0).
struct MuTilde {
  ContextPtr ctx;
  std::vector<Derivation> h_fields;  // constant vertical: mu(w)^j d/dy^j
  std::vector<Derivation> g_fields;  // linear: g^a d/dx^a + f_ab y^a d/dy^b

  /// Field of the combined basis (w_0..w_{h-1}, v_0..v_{g-1}).
  const Derivation& field(std::size_t k) const { return k < h_fields.size() ? h_fields[k] : g_fields[k - h_fields.size()]; }
  std::size_t size() const { return h_fields.size() + g_fields.size(); }
};

ContextPtr total_space_context(std::size_t base_dim, std::size_t rank);
MuTilde build_mu_tilde(const StrictActionData& s);
/// [mu~ a, mu~ b] = mu~ [a,b] for the semidirect product h x| g.
Report check_mu_tilde_brackets(const StrictActionData& s);

/// Action of L = (g[1] + g, delta = id, adjoint) built from a bracket-preserving
/// map eta: g -> Gamma(A): mu(w) = eta(w), mu(v) = [Q_A, eta(v)].
/// Throws ValidationError if eta does not preserve brackets.
StrictActionData example_gA(const Tensor3& bracket_g, const LieAlgebroidData& a, const std::vector<Section>& eta);

}  // namespace g2kit
