#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace g2kit {

/// Arbitrary-precision rational used by every exact computation.
using Rational = mpq_class;

/// Raised for malformed user input (bad rationals, wrong shapes, unknown names).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p", "-p" or "p/q". Rejects a zero denominator and trailing junk.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers are written without a denominator.
std::string format_rational(const Rational& q);

}  // namespace g2kit
