#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsieve/factorization.hpp"
#include "qsieve/gaussian.hpp"

namespace qsieve {

// A value in {0, 1, i, -1, -i}: Zero, or i^k stored as k mod 4.
class QuarticSymbolValue {
 public:
  constexpr QuarticSymbolValue() = default;  // Zero
  static constexpr QuarticSymbolValue zero() { return {}; }
  static constexpr QuarticSymbolValue root(int k) { return QuarticSymbolValue(k); }

  constexpr bool is_zero() const { return exponent_ < 0; }
  // k in {0,1,2,3}; only meaningful for non-zero values.
  constexpr int exponent() const { return exponent_; }

  constexpr QuarticSymbolValue conj() const { return is_zero() ? *this : root(-exponent_); }
  constexpr QuarticSymbolValue pow(unsigned e) const {
    if (is_zero()) return e == 0 ? root(0) : *this;
    return root(static_cast<int>((static_cast<unsigned>(exponent_) * e) % 4));
  }
  std::complex<double> to_complex() const;
  // "0", "1", "i", "-1", "-i"
  std::string to_string() const;

  friend constexpr QuarticSymbolValue operator*(QuarticSymbolValue x, QuarticSymbolValue y) {
    if (x.is_zero() || y.is_zero()) return zero();
    return root(x.exponent_ + y.exponent_);
  }
  QuarticSymbolValue& operator*=(QuarticSymbolValue o) { return *this = *this * o; }
  friend constexpr bool operator==(QuarticSymbolValue, QuarticSymbolValue) = default;

 private:
  constexpr explicit QuarticSymbolValue(int k) : exponent_(((k % 4) + 4) % 4) {}
  int exponent_ = -1;
};

// Symbol (a/pi)_4 for a primary prime pi: a^{(N(pi)-1)/4} mod pi matched to
// the unique power of i it is congruent to.
QuarticSymbolValue quartic_symbol_prime(const GaussianInteger& a, const GaussianInteger& pi);

// (a/n)_4 for odd primary n, extended multiplicatively over factor(n).
// Throws InvalidArgument for even or non-primary n.
QuarticSymbolValue quartic_symbol(const GaussianInteger& a, const GaussianInteger& n);

// Factors the modulus once for repeated evaluation with varying numerators.
class QuarticSymbolEvaluator {
 public:
  explicit QuarticSymbolEvaluator(const GaussianInteger& n);
  QuarticSymbolValue operator()(const GaussianInteger& a) const;
  const GaussianInteger& modulus() const { return modulus_; }
  const GaussianFactorization& factorization() const { return factorization_; }

 private:
  GaussianInteger modulus_;
  GaussianFactorization factorization_;
};

// (-1)^{((N(n)-1)/4)((N(m)-1)/4)} for coprime primary non-units m, n.
int reciprocity_sign(const GaussianInteger& m, const GaussianInteger& n);

// chi_n(m) = (m/n)_4 for a rational integer m.
QuarticSymbolValue chi_eval(const GaussianInteger& n, const Integer& m);

// Throws InvalidArgument unless n is odd and primary.
void require_primary_modulus(const GaussianInteger& n);

}  // namespace qsieve
