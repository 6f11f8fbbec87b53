#include "qsieve/quartic_symbol.hpp"

#include "qsieve/errors.hpp"

namespace qsieve {

std::complex<double> QuarticSymbolValue::to_complex() const {
  switch (exponent_) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    case 3: return {0.0, -1.0};
    default: return {0.0, 0.0};
  }
}

std::string QuarticSymbolValue::to_string() const {
  switch (exponent_) {
    case 0: return "1";
    case 1: return "i";
    case 2: return "-1";
    case 3: return "-i";
    default: return "0";
  }
}

void require_primary_modulus(const GaussianInteger& n) {
  if (!n.is_odd() || !is_primary(n)) {
    throw InvalidArgument("modulus must be odd primary, got " + n.to_string());
  }
}

QuarticSymbolValue quartic_symbol_prime(const GaussianInteger& a, const GaussianInteger& pi) {
  if (divides(pi, a)) return QuarticSymbolValue::zero();
  const GaussianInteger v = powmod(a, (pi.norm() - 1) / 4, pi);
  for (int k = 0; k < 4; ++k) {
    if (divides(pi, v - GaussianInteger::unit(k))) return QuarticSymbolValue::root(k);
  }
  throw std::logic_error("power residue of " + a.to_string() + " modulo " + pi.to_string() +
                         " is not a fourth root of unity; modulus is not prime");
}

QuarticSymbolEvaluator::QuarticSymbolEvaluator(const GaussianInteger& n) : modulus_(n) {
  require_primary_modulus(n);
  factorization_ = factor(n);
}

QuarticSymbolValue QuarticSymbolEvaluator::operator()(const GaussianInteger& a) const {
  QuarticSymbolValue value = QuarticSymbolValue::root(0);
  for (const auto& [p, e] : factorization_.primes) {
    value *= quartic_symbol_prime(a, p).pow(e);
    if (value.is_zero()) break;
  }
  return value;
}

QuarticSymbolValue quartic_symbol(const GaussianInteger& a, const GaussianInteger& n) {
  return QuarticSymbolEvaluator(n)(a);
}

int reciprocity_sign(const GaussianInteger& m, const GaussianInteger& n) {
  require_primary_modulus(m);
  require_primary_modulus(n);
  if (m.is_unit() || n.is_unit()) throw InvalidArgument("reciprocity_sign requires non-units");
  if (!gcd(m, n).is_unit()) {
    throw InvalidArgument("reciprocity_sign requires coprime arguments, got " + m.to_string() + " and " +
                          n.to_string());
  }
  const Integer product = ((m.norm() - 1) / 4) * ((n.norm() - 1) / 4);
  return (product & 1) == 0 ? 1 : -1;
}

QuarticSymbolValue chi_eval(const GaussianInteger& n, const Integer& m) {
  return quartic_symbol(GaussianInteger{m, Integer(0)}, n);
}

}  // namespace qsieve
