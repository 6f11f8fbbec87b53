#pragma once

#include <cstdint>
#include <vector>

#include "qsieve/gaussian.hpp"

namespace qsieve {

struct PrimePower {
  GaussianInteger prime;  // primary prime
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// z = i^unit_exp * (1+i)^two_exp * prod p^e, primes primary, pairwise
// non-associate, sorted canonically by (norm, re, im).
struct GaussianFactorization {
  int unit_exp = 0;
  unsigned two_exp = 0;
  std::vector<PrimePower> primes;

  GaussianInteger recompose() const;
  friend bool operator==(const GaussianFactorization&, const GaussianFactorization&) = default;
};

// Trial division over rational primes up to the square root of the norm.
GaussianFactorization factor(const GaussianInteger& z);

// The primary prime above a rational prime p == 1 mod 4 whose conjugate is the
// other one; the returned element is the canonically smaller of the two.
GaussianInteger split_prime_above(const Integer& p);

bool is_rational_prime(const Integer& n);

bool is_squarefree(const GaussianInteger& z);
// Mobius function on odd elements: 0 unless square-free, else (-1)^{#primes}.
int mu_zi(const GaussianInteger& z);

// True iff no rational prime divides z, i.e. gcd(re, im) == 1.
bool has_no_rational_prime_divisor(const GaussianInteger& z);

struct EnumerationConstraints {
  bool squarefree = false;
  bool no_rational_prime_divisor = false;
  // Accept n with -n primary (n == -1 mod (1+i)^3) as well.
  bool allow_negated = false;
};

// Every n with lo < norm(n) <= hi that is primary (or whose negative is, with
// allow_negated) and satisfies the constraints, in canonical (norm, re, im)
// order. An empty range yields an empty list.
std::vector<GaussianInteger> enumerate_primary(const Integer& lo, const Integer& hi,
                                               const EnumerationConstraints& constraints = {});

// Rational integer factorization by trial division: (prime, exponent) pairs.
std::vector<std::pair<std::uint64_t, unsigned>> factor_rational(std::uint64_t n);

}  // namespace qsieve
