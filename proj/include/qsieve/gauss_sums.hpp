#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qsieve/gaussian.hpp"
#include "qsieve/quartic_symbol.hpp"

namespace qsieve {

using ComplexValue = std::complex<double>;

// Complete residue system {s + t i : 0 <= s < d, 0 <= t < N(n)/d} for the
// lattice n Z[i], where d is the least positive rational integer in (n).
// Representative s + t i has index s + d t.
class ResidueSystem {
 public:
  explicit ResidueSystem(const GaussianInteger& modulus);

  const GaussianInteger& modulus() const { return modulus_; }
  std::uint64_t size() const { return size_; }
  std::uint64_t rational_period() const { return d_; }  // d
  GaussianInteger rep(std::uint64_t index) const;
  std::vector<GaussianInteger> reps() const;

  std::uint64_t index_of(const GaussianInteger& z) const;
  // Fast path for coordinates that fit in 64 bits.
  std::uint64_t index_of(std::int64_t re, std::int64_t im) const;

 private:
  GaussianInteger modulus_;
  std::uint64_t size_ = 0;
  std::int64_t d_ = 0;      // lattice contains d
  std::int64_t e_ = 0;      // and c + e i, with d e = N(n)
  std::int64_t c_ = 0;
};

ResidueSystem residues_mod(const GaussianInteger& n);

// Quartic symbol (x/n)_4 tabulated over a residue system mod n, raised to a
// fixed power. Lookups are O(1) for 64-bit coordinates.
class SymbolTable {
 public:
  explicit SymbolTable(const GaussianInteger& n, unsigned power = 1);
  const ResidueSystem& residues() const { return residues_; }
  QuarticSymbolValue operator()(const GaussianInteger& x) const { return values_[residues_.index_of(x)]; }
  QuarticSymbolValue at(std::int64_t re, std::int64_t im) const { return values_[residues_.index_of(re, im)]; }
  QuarticSymbolValue at_index(std::uint64_t index) const { return values_[index]; }

 private:
  ResidueSystem residues_;
  std::vector<QuarticSymbolValue> values_;
};

// exp(2 pi i t) for the exact rational t = num/den reduced mod 1.
ComplexValue e_rational(const Integer& num, const Integer& den);

// e~(z) = exp(2 pi i (z + conj z)) for z = num/den; z + conj z = 2 Re(z) is
// formed exactly before the single trigonometric evaluation.
ComplexValue e_tilde(const GaussianInteger& num, const GaussianInteger& den);

// g(r, n) = sum_{x mod n} (x/n)_4 e~(r x / n), n primary non-unit.
ComplexValue gauss_sum(const GaussianInteger& r, const GaussianInteger& n);

// tau(chi_n^power) = sum_{1 <= x <= N(n)} chi_n(x)^power e(x / N(n)) for
// n == +-1 mod (1+i)^3 with (n, conj n) = 1. power is 1 or 2.
ComplexValue tau(const GaussianInteger& n, unsigned power = 1);

// n == +-1 mod (1+i)^3 and gcd(n, conj n) = 1.
bool tau_admissible(const GaussianInteger& n);

}  // namespace qsieve
