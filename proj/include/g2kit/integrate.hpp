#pragma once

// Integrated actions of a strict action: the LA-group action Psi of h x| G on
// A and the 2-group action Phi of H x| G on a groupoid Gamma integrating A.
// Every catalog setup supplies psi, Gamma and Phi in closed form; the checks
// compare them with the algebraic data of the action.

#include <g2kit/action.hpp>
#include <g2kit/groups.hpp>

namespace g2kit {

/// A point a_x of the total space of A (frame coordinates).
struct BundlePoint {
  Vec x;
  Vec a;
};

struct IntegrationSetup {
  std::string name;
  StrictActionData S;
  GroupCrossedModule cm;
  /// G-action on M and on A (fiber part as an r x r matrix at x).
  std::function<Vec(const Mat&, const Vec&)> psi_base = {};
  std::function<Mat(const Mat&, const Vec&)> psi_fiber = {};
  /// Tangent lift of psi_base(g, .) at x applied to v.
  std::function<Vec(const Mat&, const Vec&, const Vec&)> base_tangent = {};
  Groupoid gamma = {};
  /// Groupoid automorphism integrating psi(g, .).
  std::function<GroupoidElement(const Mat&, const GroupoidElement&)> phi_g = {};
  /// Action of H on Gamma; closed form of the flow of the right-invariant
  /// extension of mu(w) for h = exp(w).
  std::function<GroupoidElement(const Mat&, const GroupoidElement&)> phi_h = {};
  double point_scale = 1.0;

  BundlePoint psi(const Mat& g, const BundlePoint& p) const;
  /// mu(w) evaluated at x.
  Vec mu_at(const Vec& w, const Vec& x) const;
  BundlePoint random_point(std::mt19937_64& rng) const;
};

std::vector<std::string> integration_names();
/// tm, adjoint, heisenberg, ga-sl2. Throws InputError for other names.
IntegrationSetup integration_setup(std::string_view name);

/// The Lie 2-algebra of the action is the one of the crossed module, and psi
/// differentiates to mu~ restricted to g.
Report check_setup(const IntegrationSetup& s, const SamplingOptions& opt);

struct PsiAction {
  IntegrationSetup setup;
  /// psi(g, a_x) + mu(w)|_{gx}
  BundlePoint operator()(const LAGroupElement& p, const BundlePoint& q) const;
};

PsiAction build_psi(const IntegrationSetup& s);
/// Action law and equivariance psi(g, mu(w)_x) = mu(g.w)_{gx}.
Report check_psi_action_law(const PsiAction& psi, const SamplingOptions& opt);
/// rho(Psi((w,g), a_x)) = (delta w)_M(gx) + g.rho(a_x).
Report check_psi_anchor(const PsiAction& psi, const SamplingOptions& opt);
/// Frame transport f(g,x) = matrix of g^-1 . a_{gx}: multiplicativity and
/// [w, phi(a)]_E = phi([mu(w), a]_A).
Report check_psi_bracket(const PsiAction& psi, const SamplingOptions& opt);

/// Matrix F(g,x) with F(g,x) e_i = g^-1 . (e_i)_{gx}; F(gh,x) = F(h,x) F(g,hx).
Mat frame_transport(const IntegrationSetup& s, const Mat& g, const Vec& x);

struct PhiAction {
  IntegrationSetup setup;
  /// Phi((h,g), gamma) = Phi((h,e), Phi((e,g), gamma)).
  GroupoidElement operator()(const TwoGroupElement& p, const GroupoidElement& gamma) const;
};

PhiAction build_phi(const IntegrationSetup& s);
/// Identity, action law, groupoid-morphism law, source/target covariance.
Report check_phi_2group_action(const PhiAction& phi, const SamplingOptions& opt);
/// Differentiating Phi along source-fiber curves at units gives Psi.
Report check_phi_differentiates_to_psi(const PhiAction& phi, const PsiAction& psi, const SamplingOptions& opt);
/// phi_h(exp(w), .) agrees with the RK4 time-1 flow of the right-invariant
/// extension of mu(w).
Report check_phi_h_flow(const IntegrationSetup& s, const SamplingOptions& opt, std::size_t steps = 200);
/// tm only: Phi((h,g),(m1,m2)) = (h+g+m1, g+m2) and the product action of
/// G x G after (h,g) -> (hg,g). Throws std::invalid_argument for other setups.
Report check_tm_closed_form(const PhiAction& phi, const SamplingOptions& opt);

/// All of the above (Phi checks skipped when psi_only).
Report integrate_report(const IntegrationSetup& s, const SamplingOptions& opt, bool psi_only = false);

/// Tangent at a unit of a source-fiber curve, as an element of A_x.
Vec unit_tangent(const Groupoid& G, const GroupoidElement& plus, const GroupoidElement& minus, double step);
/// Source-fiber curve through the unit at x with velocity a.
GroupoidElement source_fiber_curve(const Groupoid& G, const Vec& x, const Vec& a, double t);

}  // namespace g2kit
