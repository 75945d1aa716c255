#pragma once

// Named example data. Abstract bases are the ones used by the matrix
// realizations in groups.hpp (sl2: h, e, f; heisenberg: X, Y, Z with [X,Y] = Z).

#include <g2kit/action.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace g2kit::catalog {

Tensor3 abelian_bracket(std::size_t n);
Tensor3 sl2_bracket();
Tensor3 heisenberg_bracket();
/// [e0, e1] = e1
Tensor3 aff1_bracket();

/// L = (sl2[1] + sl2, delta = id, adjoint action).
StrictLie2Data gA_sl2_lie2();

LieAlgebroidData lie_algebra_over_point(const Tensor3& c);
LieAlgebroidData tangent_algebroid(std::size_t n);
/// sl2 x R^2 with rho_i(x) = V_i x for the matrices V = (-H, -E, -F).
LieAlgebroidData sl2_action_algebroid();
/// Cotangent algebroid of the linear Poisson structure pi_ij = c_ij^k x_k on g*.
LieAlgebroidData lie_poisson_algebroid(const Tensor3& c);

/// Catalog actions: adjoint, tm, heisenberg, ga-sl2, aff-line, gaa-sl2, zero.
std::vector<std::string> action_names();
/// Throws InputError for unknown names.
StrictActionData action(std::string_view name);

}  // namespace g2kit::catalog
