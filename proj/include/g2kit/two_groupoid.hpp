#pragma once

// Codiagonal 2-groupoid of an integrated action: objects M, 1-arrows G x Gamma,
// 2-arrows H x G x Gamma.

#include <g2kit/integrate.hpp>

namespace g2kit {

struct OneArrow {
  Mat g;
  GroupoidElement gamma;
};

struct TwoArrow {
  Mat h;
  Mat g;
  GroupoidElement gamma;
};

/// Which pairs are vertically composable: s(a) = t(a') or t(a) = s(a').
enum class VerticalReading { SourceMeetsTarget, TargetMeetsSource };
/// Gamma component of (h,g,gamma) . (h',g',gamma'): gamma o gamma', gamma' or gamma.
enum class GammaSlot { Product, Second, First };

struct VerticalConvention {
  VerticalReading reading = VerticalReading::SourceMeetsTarget;
  GammaSlot slot = GammaSlot::Second;

  std::string describe() const;
  friend bool operator==(const VerticalConvention&, const VerticalConvention&) = default;
};

std::vector<VerticalConvention> vertical_candidates();

class ArtinMazur {
 public:
  ArtinMazur(const IntegrationSetup& s, VerticalConvention conv);

  const IntegrationSetup& setup() const { return phi_.setup; }
  const VerticalConvention& convention() const { return conv_; }

  OneArrow src(const TwoArrow& a) const;
  /// (t(h) g, Phi((phi(g^-1)(h^-1), e), gamma))
  OneArrow tgt(const TwoArrow& a) const;
  Vec src0(const OneArrow& o) const;
  /// psi(g, t(gamma))
  Vec tgt0(const OneArrow& o) const;

  bool vertically_composable(const TwoArrow& a, const TwoArrow& b, double tol = 1e-8) const;
  /// Throws std::invalid_argument if not composable.
  TwoArrow vert(const TwoArrow& a, const TwoArrow& b, double tol = 1e-8) const;
  TwoArrow vert_unit(const OneArrow& o) const;
  TwoArrow vert_inverse(const TwoArrow& a) const;

  /// (g1 g2, Phi((e, g2^-1), gamma1) gamma2); defined when src0(o1) = tgt0(o2).
  OneArrow horiz1(const OneArrow& o1, const OneArrow& o2, double tol = 1e-8) const;
  /// (h1 phi(g1)(h2), g1 g2, Phi((e, g2^-1), gamma1) gamma2)
  TwoArrow horiz(const TwoArrow& a1, const TwoArrow& a2, double tol = 1e-8) const;
  OneArrow horiz1_unit(const Vec& m) const;
  OneArrow horiz1_inverse(const OneArrow& o) const;
  TwoArrow horiz_unit(const Vec& m) const;

  double distance(const OneArrow& a, const OneArrow& b) const;
  double distance(const TwoArrow& a, const TwoArrow& b) const;

  OneArrow random_one_arrow(std::mt19937_64& rng) const;
  /// A 1-arrow with src0 = m.
  OneArrow random_one_arrow_from(std::mt19937_64& rng, const Vec& m) const;
  TwoArrow random_two_arrow(std::mt19937_64& rng) const;
  /// A 2-arrow with src(a) = source.
  TwoArrow random_two_arrow_on(std::mt19937_64& rng, const OneArrow& source) const;

 private:
  PhiAction phi_;
  VerticalConvention conv_;
};

struct Calibration {
  VerticalConvention adopted;
  bool unique = false;
  Report report;
};

/// Runs unit, associativity and source/target compatibility for every
/// candidate convention on the tm setup.
Calibration calibrate_vertical(const SamplingOptions& opt);

/// Vertical and horizontal groupoid axioms, globularity, compatibility of
/// the products with source and target, and the interchange law.
Report verify_two_groupoid(const IntegrationSetup& s, const SamplingOptions& opt);

}  // namespace g2kit
