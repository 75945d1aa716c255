#pragma once

#include <g2kit/algebroid.hpp>

#include <gmpxx.h>

#include <random>
#include <string>
#include <vector>

namespace support {

using QMat = std::vector<std::vector<mpq_class>>;

QMat identity(std::size_t d);
QMat matmul(const QMat& a, const QMat& b);
QMat inverse(const QMat& a);
/// Unit lower times unit upper triangular with entries in {-1,0,1}.
QMat random_unimodular(std::size_t d, std::mt19937_64& rng);

/// Real Lie algebra with structure constants and a representation
/// [B_i, B_j] = c_ij^k B_k on R^m (m <= 3).
struct LieAlgebraSample {
  std::string name;
  std::size_t dim = 0;
  std::vector<mpq_class> c;  // (i*dim + j)*dim + k
  std::vector<QMat> rep;
  mpq_class& at(std::size_t i, std::size_t j, std::size_t k) { return c[(i * dim + j) * dim + k]; }
  const mpq_class& at(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * dim + j) * dim + k]; }
};

std::vector<LieAlgebraSample> small_lie_algebras();
/// New basis e'_i = sum_a P[a][i] e_a.
LieAlgebraSample change_basis(const LieAlgebraSample& g, const QMat& p);

g2kit::GradedPoly random_poly(const g2kit::ContextPtr& ctx, std::size_t nvars, int max_deg, std::mt19937_64& rng,
                              bool nonzero = true);

struct AlgebroidSample {
  g2kit::LieAlgebroidData data;
  std::string family;
  bool perturbed = false;
};

AlgebroidSample random_algebroid(std::mt19937_64& rng, double perturb_probability = 0.4);
std::vector<AlgebroidSample> random_algebroids(std::uint64_t seed, std::size_t count, double perturb_probability = 0.4);

/// Poisson bivector families used by the cotangent fixtures.
std::vector<std::vector<g2kit::GradedPoly>> random_poisson(std::size_t n, std::mt19937_64& rng);

}  // namespace support
