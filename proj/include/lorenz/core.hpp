#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace lorenz {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Malformed word or pair text.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Pair failed the admissibility conditions.
struct InadmissiblePairError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Orbit set with a non-primitive word or two rotation-equivalent words,
/// or a product that does not define the expected number of components.
struct InvalidOrbitError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Degenerate pair passed to an operation that needs distinct closed orbits.
struct DegeneratePairError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Symbol budget or retry budget exhausted.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lorenz
