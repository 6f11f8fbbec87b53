#include "qsieve/gauss_sums.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qsieve/errors.hpp"

namespace qsieve {
namespace {

using i128 = __int128;

std::int64_t to_i64(const Integer& x, const char* what) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
    throw InvalidArgument(std::string(what) + " exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(x);
}

std::int64_t floor_div64(i128 a, std::int64_t b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return static_cast<std::int64_t>(q);
}

std::int64_t mod64(i128 a, std::int64_t m) {
  i128 r = a % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

// Solves b x + a y = g = gcd(a, b) > 0.
void extended_gcd(std::int64_t a, std::int64_t b, std::int64_t& g, std::int64_t& x, std::int64_t& y) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r, r = tmp;
    tmp = old_s - q * s;
    old_s = s, s = tmp;
    tmp = old_t - q * t;
    old_t = t, t = tmp;
  }
  if (old_r < 0) old_r = -old_r, old_s = -old_s, old_t = -old_t;
  g = old_r;
  x = old_s;  // coefficient of a
  y = old_t;  // coefficient of b
}

ComplexValue unit_phase(std::int64_t num, std::int64_t den) {
  // Reduce to [-1/2, 1/2) turns before the trig call.
  std::int64_t r = mod64(num, den);
  if (2 * static_cast<i128>(r) >= den) r -= den;
  const double angle = 2.0 * std::numbers::pi * (static_cast<double>(r) / static_cast<double>(den));
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

ResidueSystem::ResidueSystem(const GaussianInteger& modulus) : modulus_(modulus) {
  if (modulus.is_zero()) throw InvalidArgument("residue system of zero modulus");
  const Integer norm = modulus.norm();
  if (norm > (Integer(1) << 40)) throw InvalidArgument("modulus norm too large for residue tables");
  const std::int64_t a = to_i64(modulus.re(), "modulus");
  const std::int64_t b = to_i64(modulus.im(), "modulus");
  const std::int64_t n = to_i64(norm, "modulus norm");
  size_ = static_cast<std::uint64_t>(n);

  // Imaginary parts of n (x + y i) are b x + a y; their gcd is e.
  std::int64_t g = 0, x = 0, y = 0;
  extended_gcd(b, a, g, x, y);  // b x + a y = g
  e_ = g;
  d_ = n / g;
  c_ = mod64(static_cast<i128>(a) * x - static_cast<i128>(b) * y, d_);
}

GaussianInteger ResidueSystem::rep(std::uint64_t index) const {
  const auto d = static_cast<std::uint64_t>(d_);
  return {static_cast<long long>(index % d), static_cast<long long>(index / d)};
}

std::vector<GaussianInteger> ResidueSystem::reps() const {
  std::vector<GaussianInteger> out;
  out.reserve(size_);
  for (std::uint64_t k = 0; k < size_; ++k) out.push_back(rep(k));
  return out;
}

std::uint64_t ResidueSystem::index_of(std::int64_t re, std::int64_t im) const {
  const std::int64_t k = floor_div64(im, e_);
  const std::int64_t t = im - k * e_;
  const std::int64_t s = mod64(static_cast<i128>(re) - static_cast<i128>(k) * c_, d_);
  return static_cast<std::uint64_t>(s) + static_cast<std::uint64_t>(d_) * static_cast<std::uint64_t>(t);
}

std::uint64_t ResidueSystem::index_of(const GaussianInteger& z) const {
  // Reduce by the modulus first so coordinates are small.
  const GaussianInteger r = mod(z, modulus_);
  return index_of(to_i64(r.re(), "residue"), to_i64(r.im(), "residue"));
}

ResidueSystem residues_mod(const GaussianInteger& n) { return ResidueSystem(n); }

SymbolTable::SymbolTable(const GaussianInteger& n, unsigned power) : residues_(n) {
  const QuarticSymbolEvaluator symbol(n);
  values_.reserve(residues_.size());
  for (std::uint64_t k = 0; k < residues_.size(); ++k) values_.push_back(symbol(residues_.rep(k)).pow(power));
}

ComplexValue e_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidArgument("zero denominator in additive character");
  Integer n = num, d = den;
  if (d < 0) n = -n, d = -d;
  const Integer r = mod_floor(n, d);
  const Integer g = boost::multiprecision::gcd(r, d);
  if (g != 0 && d / g <= std::numeric_limits<std::int64_t>::max()) {
    return unit_phase(static_cast<std::int64_t>(r / g), static_cast<std::int64_t>(d / g));
  }
  const double angle = 2.0 * std::numbers::pi * (static_cast<double>(r) / static_cast<double>(d));
  return {std::cos(angle), std::sin(angle)};
}

ComplexValue e_tilde(const GaussianInteger& num, const GaussianInteger& den) {
  if (den.is_zero()) throw InvalidArgument("zero denominator in e_tilde");
  // z + conj z = 2 Re(num conj(den)) / N(den)
  const GaussianInteger w = num * den.conj();
  return e_rational(2 * w.re(), den.norm());
}

ComplexValue gauss_sum(const GaussianInteger& r, const GaussianInteger& n) {
  require_primary_modulus(n);
  if (n.is_unit()) throw InvalidArgument("gauss_sum requires a non-unit modulus");
  const SymbolTable chi(n);
  const ResidueSystem& residues = chi.residues();
  const std::int64_t norm = static_cast<std::int64_t>(residues.size());
  // 2 Re(r x conj(n)) mod N(n) with w = r conj(n) reduced mod N(n).
  const GaussianInteger w = r * n.conj();
  const std::int64_t w_re = static_cast<std::int64_t>(mod_floor(w.re(), norm));
  const std::int64_t w_im = static_cast<std::int64_t>(mod_floor(w.im(), norm));
  const auto d = residues.rational_period();

  ComplexValue sum{0.0, 0.0};
  for (std::uint64_t k = 0; k < residues.size(); ++k) {
    const QuarticSymbolValue v = chi.at_index(k);
    if (v.is_zero()) continue;
    const auto s = static_cast<i128>(k % d);
    const auto t = static_cast<i128>(k / d);
    const i128 phase = 2 * (w_re * s - w_im * t);
    sum += v.to_complex() * unit_phase(mod64(phase, norm), norm);
  }
  return sum;
}

bool tau_admissible(const GaussianInteger& n) {
  if (!n.is_odd() || n.is_unit()) return false;
  if (!is_primary(n) && !is_primary(-n)) return false;
  return gcd(n, n.conj()).is_unit();
}

ComplexValue tau(const GaussianInteger& n, unsigned power) {
  if (power != 1 && power != 2) throw InvalidArgument("tau power must be 1 or 2");
  if (!tau_admissible(n)) {
    throw InvalidArgument("tau requires n == +-1 mod (1+i)^3 with no rational prime divisor, got " +
                          n.to_string());
  }
  const GaussianInteger p = is_primary(n) ? n : -n;  // same ideal, same character
  const SymbolTable chi(p, power);
  const std::int64_t norm = static_cast<std::int64_t>(chi.residues().size());
  ComplexValue sum{0.0, 0.0};
  for (std::int64_t x = 1; x <= norm; ++x) {
    const QuarticSymbolValue v = chi.at(x, 0);
    if (!v.is_zero()) sum += v.to_complex() * unit_phase(x, norm);
  }
  return sum;
}

}  // namespace qsieve
