#include "qsieve/gaussian.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "qsieve/errors.hpp"

namespace qsieve {

Integer floor_div(const Integer& num, const Integer& den) {
  Integer q = num / den;  // truncates toward zero
  Integer r = num - q * den;
  if (r != 0 && ((r < 0) != (den < 0))) --q;
  return q;
}

Integer ceil_div(const Integer& num, const Integer& den) { return -floor_div(-num, den); }

Integer mod_floor(const Integer& x, const Integer& m) {
  Integer r = x % m;
  if (r < 0) r += m;
  return r;
}

namespace {

// Nearest integer to num/den (den > 0), halves to the even neighbour.
Integer round_half_even(const Integer& num, const Integer& den) {
  Integer q = floor_div(num, den);
  Integer twice_rem = 2 * (num - q * den);
  if (twice_rem > den || (twice_rem == den && (q & 1) != 0)) ++q;
  return q;
}

Integer parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw InvalidArgument("malformed Gaussian integer literal '" + std::string(whole) + "'");
  }
  return Integer(std::string(digits));
}

// Signed coefficient: "", "+", "-" stand for +1/-1 when implicit_one is set.
Integer parse_coefficient(std::string_view text, std::string_view whole, bool implicit_one) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Integer value = (implicit_one && text.empty()) ? Integer(1) : parse_integer(text, whole);
  return negative ? Integer(-value) : value;
}

}  // namespace

GaussianInteger GaussianInteger::unit(int exponent) {
  switch (((exponent % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

bool GaussianInteger::is_odd() const { return ((re_ + im_) & 1) != 0; }

GaussianInteger& GaussianInteger::operator+=(const GaussianInteger& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianInteger& GaussianInteger::operator-=(const GaussianInteger& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianInteger& GaussianInteger::operator*=(const GaussianInteger& o) {
  Integer re = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  return *this;
}

GaussianInteger GaussianInteger::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  std::string_view s = compact;
  if (s.empty()) throw InvalidArgument("malformed Gaussian integer literal '" + std::string(text) + "'");

  if (s.back() != 'i') return {parse_coefficient(s, text, false), Integer(0)};

  s.remove_suffix(1);
  // Split point: the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {Integer(0), parse_coefficient(s, text, true)};
  return {parse_coefficient(s.substr(0, split), text, false),
          parse_coefficient(s.substr(split), text, true)};
}

std::string GaussianInteger::to_string() const {
  if (im_ == 0) return re_.str();
  std::string imag;
  Integer mag = abs(im_);
  if (mag != 1) imag = mag.str();
  imag += 'i';
  if (re_ == 0) return (im_ < 0 ? "-" : "") + imag;
  return re_.str() + (im_ < 0 ? "-" : "+") + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianInteger& z) { return os << z.to_string(); }

std::strong_ordering canonical_compare(const GaussianInteger& x, const GaussianInteger& y) {
  const Integer nx = x.norm();
  const Integer ny = y.norm();
  if (nx != ny) return nx < ny ? std::strong_ordering::less : std::strong_ordering::greater;
  if (x.re() != y.re()) return x.re() < y.re() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (x.im() != y.im()) return x.im() < y.im() ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

DivRem divrem(const GaussianInteger& x, const GaussianInteger& d) {
  if (d.is_zero()) throw InvalidArgument("division by zero Gaussian integer");
  const Integer n = d.norm();
  const GaussianInteger num = x * d.conj();
  GaussianInteger q{round_half_even(num.re(), n), round_half_even(num.im(), n)};
  GaussianInteger r = x - q * d;
  return {std::move(q), std::move(r)};
}

GaussianInteger mod(const GaussianInteger& x, const GaussianInteger& d) { return divrem(x, d).remainder; }

bool divides(const GaussianInteger& d, const GaussianInteger& x) {
  if (d.is_zero()) return x.is_zero();
  const Integer n = d.norm();
  const GaussianInteger num = x * d.conj();
  return num.re() % n == 0 && num.im() % n == 0;
}

GaussianInteger exact_div(const GaussianInteger& x, const GaussianInteger& d) {
  if (d.is_zero()) throw InvalidArgument("division by zero Gaussian integer");
  const Integer n = d.norm();
  const GaussianInteger num = x * d.conj();
  if (num.re() % n != 0 || num.im() % n != 0) {
    throw InvalidArgument(d.to_string() + " does not divide " + x.to_string());
  }
  return {num.re() / n, num.im() / n};
}

GaussianInteger pow(GaussianInteger base, std::uint64_t exponent) {
  GaussianInteger result{1, 0};
  while (exponent != 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

GaussianInteger powmod(GaussianInteger base, const Integer& exponent, const GaussianInteger& m) {
  GaussianInteger result = mod(GaussianInteger{1, 0}, m);
  base = mod(base, m);
  for (unsigned bit = exponent == 0 ? 0 : msb(exponent) + 1; bit-- > 0;) {
    result = mod(result * result, m);
    if (bit_test(exponent, bit)) result = mod(result * base, m);
  }
  return result;
}

bool is_primary(const GaussianInteger& n) {
  const Integer a = mod_floor(n.re(), 4);
  const Integer b = mod_floor(n.im(), 4);
  return (a == 1 && b == 0) || (a == 3 && b == 2);
}

PrimaryAssociate primary_associate(const GaussianInteger& z) {
  if (!z.is_odd()) {
    throw InvalidArgument("primary associate requires an odd element, got " + z.to_string());
  }
  GaussianInteger candidate = z;
  const GaussianInteger i{0, 1};
  for (int u = 0; u < 4; ++u) {
    if (is_primary(candidate)) return {u, candidate};
    candidate *= i;
  }
  // Unreachable for odd z: exactly one associate is primary.
  throw std::logic_error("no primary associate for " + z.to_string());
}

unsigned two_valuation(const GaussianInteger& z) {
  if (z.is_zero()) throw InvalidArgument("two_valuation of zero");
  unsigned j = 0;
  GaussianInteger w = z;
  while (!w.is_odd()) {
    // w / (1+i) = w (1-i) / 2
    w = GaussianInteger{(w.re() + w.im()) / 2, (w.im() - w.re()) / 2};
    ++j;
  }
  return j;
}

GaussianInteger canonical_associate(const GaussianInteger& z) {
  if (z.is_zero()) return z;
  const unsigned j = two_valuation(z);
  const GaussianInteger two_part = pow(GaussianInteger::one_plus_i(), j);
  const GaussianInteger odd_part = exact_div(z, two_part);
  return two_part * primary_associate(odd_part).value;
}

GaussianInteger gcd(const GaussianInteger& x, const GaussianInteger& y) {
  if (x.is_zero() && y.is_zero()) throw InvalidArgument("gcd(0, 0) is undefined");
  GaussianInteger a = x;
  GaussianInteger b = y;
  while (!b.is_zero()) {
    GaussianInteger r = divrem(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return canonical_associate(a);
}

}  // namespace qsieve
