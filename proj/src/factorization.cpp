#include "qsieve/factorization.hpp"

#include <algorithm>

#include "qsieve/errors.hpp"

namespace qsieve {
namespace {

// Divide z by prime as many times as possible; returns the multiplicity.
unsigned strip(GaussianInteger& z, const GaussianInteger& prime) {
  unsigned e = 0;
  while (divides(prime, z)) {
    z = exact_div(z, prime);
    ++e;
  }
  return e;
}

// x with x^2 == -1 mod p for a prime p == 1 mod 4.
Integer sqrt_minus_one(const Integer& p) {
  const Integer exponent = (p - 1) / 4;
  for (Integer c = 2; c < p; ++c) {
    Integer x = boost::multiprecision::powm(c, exponent, p);
    if ((x * x) % p == p - 1) return x;
  }
  throw std::logic_error("no square root of -1 modulo " + p.str());
}

}  // namespace

GaussianInteger GaussianFactorization::recompose() const {
  GaussianInteger z = GaussianInteger::unit(unit_exp) * pow(GaussianInteger::one_plus_i(), two_exp);
  for (const auto& [p, e] : primes) z *= pow(p, e);
  return z;
}

bool is_rational_prime(const Integer& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Integer d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

GaussianInteger split_prime_above(const Integer& p) {
  if (p % 4 != 1 || !is_rational_prime(p)) {
    throw InvalidArgument("split_prime_above requires a prime p == 1 mod 4, got " + p.str());
  }
  const Integer x = sqrt_minus_one(p);
  // gcd(p, x + i) has norm p.
  GaussianInteger pi = gcd(GaussianInteger{p, 0}, GaussianInteger{x, 1});
  GaussianInteger other = primary_associate(pi.conj()).value;
  return canonical_compare(pi, other) < 0 ? pi : other;
}

GaussianFactorization factor(const GaussianInteger& z) {
  if (z.is_zero()) throw InvalidArgument("cannot factor zero");
  GaussianFactorization f;
  GaussianInteger rest = z;

  f.two_exp = two_valuation(rest);
  rest = exact_div(rest, pow(GaussianInteger::one_plus_i(), f.two_exp));

  Integer remaining = rest.norm();
  for (Integer p = 3; p * p <= remaining; p += 2) {
    if (remaining % p != 0) continue;
    if (p % 4 == 3) {
      const GaussianInteger inert{-p, Integer(0)};
      const unsigned e = strip(rest, inert);
      f.primes.push_back({inert, e});
    } else {
      const GaussianInteger pi = split_prime_above(p);
      const GaussianInteger pi_bar = primary_associate(pi.conj()).value;
      for (const GaussianInteger& q : {pi, pi_bar}) {
        const unsigned e = strip(rest, q);
        if (e != 0) f.primes.push_back({q, e});
      }
    }
    remaining = rest.norm();
  }
  if (remaining > 1) {
    // What is left has prime norm: it is a prime up to a unit.
    const PrimaryAssociate pa = primary_associate(rest);
    f.primes.push_back({pa.value, 1});
    rest = exact_div(rest, pa.value);
  }
  // rest is now a unit i^u.
  for (int u = 0; u < 4; ++u) {
    if (rest == GaussianInteger::unit(u)) f.unit_exp = u;
  }
  std::sort(f.primes.begin(), f.primes.end(),
            [](const PrimePower& a, const PrimePower& b) { return CanonicalLess{}(a.prime, b.prime); });
  return f;
}

bool is_squarefree(const GaussianInteger& z) {
  const GaussianFactorization f = factor(z);
  if (f.two_exp > 1) return false;
  return std::all_of(f.primes.begin(), f.primes.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

int mu_zi(const GaussianInteger& z) {
  if (!z.is_odd()) throw InvalidArgument("mu_zi requires an odd element, got " + z.to_string());
  const GaussianFactorization f = factor(z);
  for (const auto& pp : f.primes) {
    if (pp.exponent > 1) return 0;
  }
  return f.primes.size() % 2 == 0 ? 1 : -1;
}

bool has_no_rational_prime_divisor(const GaussianInteger& z) {
  return boost::multiprecision::gcd(z.re(), z.im()) == 1;
}

std::vector<GaussianInteger> enumerate_primary(const Integer& lo, const Integer& hi,
                                               const EnumerationConstraints& constraints) {
  std::vector<GaussianInteger> out;
  if (hi <= lo || hi < 1) return out;
  const Integer radius = boost::multiprecision::sqrt(hi);
  for (Integer a = -radius; a <= radius; ++a) {
    const Integer a2 = a * a;
    for (Integer b = -radius; b <= radius; ++b) {
      const Integer n = a2 + b * b;
      if (n <= lo || n > hi) continue;
      GaussianInteger z{a, b};
      if (!is_primary(z) && !(constraints.allow_negated && is_primary(-z))) continue;
      if (constraints.no_rational_prime_divisor && !has_no_rational_prime_divisor(z)) continue;
      if (constraints.squarefree && !is_squarefree(z)) continue;
      out.push_back(std::move(z));
    }
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_rational(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("cannot factor zero");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace qsieve
