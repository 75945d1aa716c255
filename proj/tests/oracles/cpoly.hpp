#pragma once

// Plain commutative polynomials over Q in n variables. Test-only; shares no
// arithmetic with the library.

#include <g2kit/graded_poly.hpp>

#include <gmpxx.h>

#include <map>
#include <vector>

namespace oracle {

class CPoly {
 public:
  using Exps = std::vector<int>;

  CPoly() = default;
  explicit CPoly(std::size_t nvars) : n_(nvars) {}
  static CPoly constant(std::size_t nvars, const mpq_class& c);
  static CPoly var(std::size_t nvars, std::size_t i);
  /// From a library polynomial whose first `nvars` context variables are the
  /// commuting coordinates; throws if any other variable occurs.
  static CPoly from(const g2kit::GradedPoly& p, std::size_t nvars);

  std::size_t nvars() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<Exps, mpq_class>& terms() const { return t_; }

  CPoly d(std::size_t i) const;
  CPoly operator+(const CPoly& o) const;
  CPoly operator-(const CPoly& o) const;
  CPoly operator*(const CPoly& o) const;
  CPoly operator*(const mpq_class& c) const;
  CPoly& operator+=(const CPoly& o) { return *this = *this + o; }
  CPoly& operator-=(const CPoly& o) { return *this = *this - o; }
  bool operator==(const CPoly& o) const { return n_ == o.n_ && t_ == o.t_; }

 private:
  void add(const Exps& e, const mpq_class& c);
  std::size_t n_ = 0;
  std::map<Exps, mpq_class> t_;
};

}  // namespace oracle
