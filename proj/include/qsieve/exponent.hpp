#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qsieve {

using Rational = boost::multiprecision::cpp_rational;

// "p/q" or an integer; throws InvalidArgument otherwise.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& x);

// xi -> (9 xi - 6) / (4 xi - 1).
Rational exponent_map(const Rational& xi);

// Fixed points of exponent_map, solved exactly: {1, 3/2}.
std::vector<Rational> exponent_map_fixed_points();

struct ExponentTrace {
  std::vector<Rational> xi_history;  // xi_0, xi_1, ..., xi_steps
};

// Exact orbit of exponent_map from xi0 in (3/2, 2].
ExponentTrace exponent_iteration(const Rational& xi0, unsigned steps);

}  // namespace qsieve
