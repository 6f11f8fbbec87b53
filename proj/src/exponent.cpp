#include "qsieve/exponent.hpp"

#include <cctype>

#include "qsieve/errors.hpp"

namespace qsieve {
namespace {

using boost::multiprecision::cpp_int;

cpp_int parse_int(std::string_view s, std::string_view whole) {
  std::size_t k = 0;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) k = 1;
  if (k == s.size()) throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
  for (std::size_t j = k; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
    }
  }
  return cpp_int(std::string(s[0] == '+' ? s.substr(1) : s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const cpp_int den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash), text), den);
}

std::string to_string(const Rational& x) {
  const cpp_int n = boost::multiprecision::numerator(x);
  const cpp_int d = boost::multiprecision::denominator(x);
  return d == 1 ? n.str() : n.str() + "/" + d.str();
}

Rational exponent_map(const Rational& xi) {
  const Rational den = 4 * xi - 1;
  if (den == 0) throw InvalidArgument("exponent map undefined at 1/4");
  return (9 * xi - 6) / den;
}

std::vector<Rational> exponent_map_fixed_points() {
  // xi (4 xi - 1) = 9 xi - 6  <=>  4 xi^2 - 10 xi + 6 = 0.
  const cpp_int a = 4, b = -10, c = 6;
  const cpp_int disc = b * b - 4 * a * c;
  const cpp_int root = boost::multiprecision::sqrt(disc);
  if (root * root != disc) return {};
  std::vector<Rational> out{Rational(-b - root, 2 * a), Rational(-b + root, 2 * a)};
  if (out[0] == out[1]) out.pop_back();
  return out;
}

ExponentTrace exponent_iteration(const Rational& xi0, unsigned steps) {
  if (xi0 <= Rational(3, 2) || xi0 > 2) {
    throw InvalidArgument("xi0 must lie in (3/2, 2], got " + to_string(xi0));
  }
  ExponentTrace trace;
  trace.xi_history.reserve(steps + 1);
  trace.xi_history.push_back(xi0);
  for (unsigned k = 0; k < steps; ++k) trace.xi_history.push_back(exponent_map(trace.xi_history.back()));
  return trace;
}

}  // namespace qsieve
