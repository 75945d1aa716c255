#pragma once

// Strict Lie 2-algebras h -> g (two-term DGLAs in degrees -1, 0) and crossed
// modules of Lie algebras. Basis: w_0..w_{h-1} of h, v_0..v_{g-1} of g.

#include <g2kit/graded_poly.hpp>
#include <g2kit/report.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace g2kit {

/// Dense rank-3 array of rationals.
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t a, std::size_t b, std::size_t c) : a_(a), b_(b), c_(c), v_(a * b * c, Rational(0)) {}
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return v_.at((i * b_ + j) * c_ + k); }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const { return v_.at((i * b_ + j) * c_ + k); }
  std::size_t dim0() const { return a_; }
  std::size_t dim1() const { return b_; }
  std::size_t dim2() const { return c_; }
  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t a_ = 0, b_ = 0, c_ = 0;
  std::vector<Rational> v_;
};

class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), v_(rows * cols, Rational(0)) {}
  Rational& operator()(std::size_t i, std::size_t j) { return v_.at(i * c_ + j); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return v_.at(i * c_ + j); }
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  friend bool operator==(const RMatrix&, const RMatrix&) = default;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Rational> v_;
};

/// Structure constants c(i,j,k) of a Lie bracket [e_i,e_j] = c_ij^k e_k.
void set_antisymmetric(Tensor3& c, std::size_t i, std::size_t j, std::size_t k, const Rational& value);

struct StrictLie2Data {
  std::size_t dim_h = 0, dim_g = 0;
  Tensor3 bracket_g;  // (i,j,k): [v_i,v_j] = c v_k
  Tensor3 act;        // (i,a,b): [v_i,w_a] = act w_b
  RMatrix delta;      // (a,i): delta w_a = D v_i

  StrictLie2Data() = default;
  StrictLie2Data(std::size_t h, std::size_t g) : dim_h(h), dim_g(g), bracket_g(g, g, g), act(g, h, h), delta(h, g) {}
  friend bool operator==(const StrictLie2Data&, const StrictLie2Data&) = default;
};

struct CrossedModuleData {
  std::size_t dim_h = 0, dim_g = 0;
  Tensor3 bracket_h;  // (a,b,c): [w_a,w_b]_h
  Tensor3 bracket_g;
  Tensor3 alpha;      // (i,a,b): alpha(v_i) w_a = alpha w_b
  RMatrix delta;

  CrossedModuleData() = default;
  CrossedModuleData(std::size_t h, std::size_t g)
      : dim_h(h), dim_g(g), bracket_h(h, h, h), bracket_g(g, g, g), alpha(g, h, h), delta(h, g) {}
  friend bool operator==(const CrossedModuleData&, const CrossedModuleData&) = default;
};

/// Thrown by conversions whose input fails validation.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& what, Report r) : std::runtime_error(what), report_(std::move(r)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

/// Antisymmetry and Jacobi for one set of structure constants.
Report check_lie_bracket(const Tensor3& c, const std::string& label);

Report validate_lie2(const StrictLie2Data& l);
Report validate_crossed_module(const CrossedModuleData& c);

CrossedModuleData to_crossed_module(const StrictLie2Data& l);
StrictLie2Data from_crossed_module(const CrossedModuleData& c);

/// Chart eta1..eta_g (degree 1) then P1..P_h (degree 2).
ContextPtr lie2_context(std::size_t dim_h, std::size_t dim_g);

struct Lie2Fields {
  Derivation q_delta;
  Derivation q_br;
};

/// Q_delta = -P^a D_ak d/deta^k;
/// Q_br = 1/2 eta^j eta^i c_ij^k d/deta^k - act_ia^b eta^i P^a d/dP^b.
Lie2Fields build_Qdelta_Qbr(const StrictLie2Data& l);

/// Reads delta and both brackets back from a degree-1 field at most
/// quadratic on lie2_context. Throws InputError if the field has any other shape.
StrictLie2Data lie2_from_Q(const Derivation& q, std::size_t dim_h, std::size_t dim_g);

/// Self-commutation of Q_br and Q_delta and [Q_br, Q_delta] = 0.
Report check_qalgebra(const StrictLie2Data& l);

/// Structure constants of h x| g in the basis (w_0..w_{h-1}, v_0..v_{g-1}):
/// [(w1,v1),(w2,v2)] = ([v1,w2] - [v2,w1], [v1,v2]).
Tensor3 h_semidirect_g(const StrictLie2Data& l);

/// g with h = g, act = adjoint, delta = identity.
StrictLie2Data identity_lie2(const Tensor3& bracket_g);

}  // namespace g2kit
