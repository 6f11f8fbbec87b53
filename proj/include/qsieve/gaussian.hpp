#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qsieve {

using Integer = boost::multiprecision::cpp_int;

// Floor and ceiling division for signed arbitrary-precision integers.
Integer floor_div(const Integer& num, const Integer& den);
Integer ceil_div(const Integer& num, const Integer& den);
// Least non-negative residue of x modulo m (m > 0).
Integer mod_floor(const Integer& x, const Integer& m);

// Exact element a + bi of Z[i].
class GaussianInteger {
 public:
  GaussianInteger() = default;
  GaussianInteger(long long re, long long im = 0) : re_(re), im_(im) {}
  GaussianInteger(Integer re, Integer im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianInteger unit(int exponent);  // i^exponent
  static GaussianInteger one_plus_i() { return {1, 1}; }

  const Integer& re() const { return re_; }
  const Integer& im() const { return im_; }

  Integer norm() const { return re_ * re_ + im_ * im_; }
  GaussianInteger conj() const { return {re_, -im_}; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_unit() const { return norm() == 1; }
  // Coprime to 1 + i, i.e. odd norm.
  bool is_odd() const;

  GaussianInteger operator-() const { return {-re_, -im_}; }
  GaussianInteger& operator+=(const GaussianInteger& o);
  GaussianInteger& operator-=(const GaussianInteger& o);
  GaussianInteger& operator*=(const GaussianInteger& o);

  friend GaussianInteger operator+(GaussianInteger x, const GaussianInteger& y) { return x += y; }
  friend GaussianInteger operator-(GaussianInteger x, const GaussianInteger& y) { return x -= y; }
  friend GaussianInteger operator*(GaussianInteger x, const GaussianInteger& y) { return x *= y; }
  friend bool operator==(const GaussianInteger&, const GaussianInteger&) = default;

  // Text form `a+bi`, `a-bi`, `3`, `2i`, `-i`; whitespace is ignored.
  static GaussianInteger parse(std::string_view text);
  std::string to_string() const;

 private:
  Integer re_;
  Integer im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianInteger& z);

// Canonical order used for deterministic output: (norm, re, im).
std::strong_ordering canonical_compare(const GaussianInteger& x, const GaussianInteger& y);
struct CanonicalLess {
  bool operator()(const GaussianInteger& x, const GaussianInteger& y) const {
    return canonical_compare(x, y) < 0;
  }
};

struct DivRem {
  GaussianInteger quotient;
  GaussianInteger remainder;
};

// Euclidean division x = q*d + r with norm(r) <= norm(d)/2. Each coordinate of
// x/d is rounded to the nearest integer, halves to the even neighbour.
DivRem divrem(const GaussianInteger& x, const GaussianInteger& d);
GaussianInteger mod(const GaussianInteger& x, const GaussianInteger& d);
bool divides(const GaussianInteger& d, const GaussianInteger& x);
// Exact quotient; throws InvalidArgument if d does not divide x.
GaussianInteger exact_div(const GaussianInteger& x, const GaussianInteger& d);
GaussianInteger pow(GaussianInteger base, std::uint64_t exponent);
GaussianInteger powmod(GaussianInteger base, const Integer& exponent, const GaussianInteger& m);

// n == 1 mod (1+i)^3: (a,b) == (1,0) or (3,2) mod 4.
bool is_primary(const GaussianInteger& n);

struct PrimaryAssociate {
  int unit_exp;  // u in {0,1,2,3}
  GaussianInteger value;  // i^u * z
};
PrimaryAssociate primary_associate(const GaussianInteger& z);

// Largest j with (1+i)^j | z, for z != 0.
unsigned two_valuation(const GaussianInteger& z);
// (1+i)^j * primary associate of z / (1+i)^j; zero maps to zero.
GaussianInteger canonical_associate(const GaussianInteger& z);

GaussianInteger gcd(const GaussianInteger& x, const GaussianInteger& y);

}  // namespace qsieve
