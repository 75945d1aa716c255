#pragma once

// Matrix Lie groups, crossed modules of Lie groups and the catalog groupoids.
// Abstract Lie algebra bases are realized by matrices V_i with
// [V_i, V_j] = -c_ij^k V_k (Lie algebra of right-invariant vector fields), so
// the flow of the generator of v is left multiplication by exp(t V).

#include <g2kit/lie2.hpp>
#include <g2kit/report.hpp>

#include <Eigen/Dense>

#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace g2kit {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

struct MatrixAlgebra {
  std::string tag;
  std::size_t matrix_size = 0;
  std::vector<Mat> basis;
  bool nilpotent = false;

  std::size_t dim() const { return basis.size(); }
  Mat element(const Vec& coords) const;
  /// Coordinates of a matrix in the span of the basis (least squares).
  Vec coords(const Mat& m) const;
};

/// Tags: abelian1, abelian2, abelian3 (unipotent translations), heisenberg
/// (-E12, -E23, -E13), sl2 (-H, -E, -F).
MatrixAlgebra matrix_algebra(std::string_view tag);

struct MatrixGroupElement {
  Mat matrix;
  std::string group_tag;
};

/// Finite sum for nilpotent input, scaling and squaring otherwise.
Mat expm(const Mat& a, bool nilpotent);
MatrixGroupElement exp_to_group(const Vec& xi, std::string_view tag);

/// exp of a random algebra element with coordinates uniform in [-scale, scale].
Mat random_group_element(const MatrixAlgebra& alg, std::mt19937_64& rng, double scale);
Vec random_vector(std::size_t n, std::mt19937_64& rng, double scale);

/// Crossed module of matrix Lie groups t: H -> G with G acting on H by phi.
struct GroupCrossedModule {
  std::string name;
  MatrixAlgebra g, h;
  std::function<Mat(const Mat&)> t;
  std::function<Mat(const Mat&, const Mat&)> phi;
  /// Integrated action of G on h in abstract coordinates.
  std::function<Vec(const Mat&, const Vec&)> act_h;
  /// The strict Lie 2-algebra it integrates (abstract bases).
  StrictLie2Data lie2;
  double sample_scale = 1.0;

  Mat identity_g() const { return Mat::Identity(g.matrix_size, g.matrix_size); }
  Mat identity_h() const { return Mat::Identity(h.matrix_size, h.matrix_size); }
  Mat exp_g(const Vec& v) const { return expm(g.element(v), g.nilpotent); }
  Mat exp_h(const Vec& w) const { return expm(h.element(w), h.nilpotent); }
};

/// Catalog: abelian (G = H = R, t = id, trivial action), heisenberg and sl2
/// (G = H, t = id, conjugation), heisenberg-center (H = center of H3).
std::vector<std::string> crossed_module_names();
GroupCrossedModule group_crossed_module(std::string_view name);

struct TwoGroupElement {
  Mat h;
  Mat g;
};

/// (h1 phi(g1)(h2), g1 g2)
TwoGroupElement twogroup_mul(const GroupCrossedModule& cm, const TwoGroupElement& a, const TwoGroupElement& b);
TwoGroupElement twogroup_identity(const GroupCrossedModule& cm);
Mat twogroup_source(const TwoGroupElement& a);
Mat twogroup_target(const GroupCrossedModule& cm, const TwoGroupElement& a);
/// Vertical composition in H x G => G: defined when s(a) = t(b); gives (h_a h_b, g_b).
/// Throws std::invalid_argument if not composable within tol.
TwoGroupElement twogroup_compose(const GroupCrossedModule& cm, const TwoGroupElement& a, const TwoGroupElement& b,
                                 double tol = 1e-8);
TwoGroupElement twogroup_unit(const GroupCrossedModule& cm, const Mat& g);

struct LAGroupElement {
  Vec w;
  Mat g;
};

/// (w1 + g1 . w2, g1 g2)
LAGroupElement la_group_mul(const GroupCrossedModule& cm, const LAGroupElement& a, const LAGroupElement& b);
LAGroupElement la_group_inverse(const GroupCrossedModule& cm, const LAGroupElement& a);

struct SamplingOptions {
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  double tol = 1e-9;
  double fd_tol = 1e-6;
  double fd_step = 1e-4;
};

/// Group axioms, equivariance, Peiffer, morphism properties and consistency of
/// the integrated data with the strict Lie 2-algebra.
Report validate_group_crossed_module(const GroupCrossedModule& cm, const SamplingOptions& opt);

// --- groupoids -------------------------------------------------------------

enum class GroupoidKind { Pair, Action, Group };

/// Pair: (m1, m2) with target m1, source m2. Action: (g, m1) with source m1,
/// target g.m1. Group: g over a point.
struct GroupoidElement {
  GroupoidKind kind = GroupoidKind::Pair;
  Mat g;
  Vec m1, m2;
};

struct Groupoid {
  std::string name;
  GroupoidKind kind = GroupoidKind::Pair;
  std::size_t base_dim = 0;
  MatrixAlgebra algebra;  // for Action and Group
  /// Action groupoids: the left action on the base.
  std::function<Vec(const Mat&, const Vec&)> base_action;
  double sample_scale = 1.0;

  Vec source(const GroupoidElement& x) const;
  Vec target(const GroupoidElement& x) const;
  /// x o y, defined when source(x) = target(y); throws std::invalid_argument otherwise.
  GroupoidElement compose(const GroupoidElement& x, const GroupoidElement& y, double tol = 1e-8) const;
  GroupoidElement unit(const Vec& m) const;
  GroupoidElement inverse(const GroupoidElement& x) const;
  double distance(const GroupoidElement& x, const GroupoidElement& y) const;
  Vec flatten(const GroupoidElement& x) const;

  GroupoidElement random(std::mt19937_64& rng) const;
  GroupoidElement random_with_source(std::mt19937_64& rng, const Vec& m) const;
  Vec random_point(std::mt19937_64& rng) const;
};

Groupoid pair_groupoid(std::size_t n);
Groupoid action_groupoid(const MatrixAlgebra& alg, std::size_t base_dim, std::function<Vec(const Mat&, const Vec&)> action);
Groupoid group_as_groupoid(const MatrixAlgebra& alg);

}  // namespace g2kit
