#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qsieve/gaussian.hpp"
#include "qsieve/quartic_symbol.hpp"

namespace qsieve {

// m -> (m/n)_4 for a primary square-free n with no rational prime divisor;
// conductor q = N(n). Values are tabulated for m in [0, q).
class QuarticCharacter {
 public:
  explicit QuarticCharacter(GaussianInteger generator);

  std::uint64_t conductor() const { return conductor_; }
  const GaussianInteger& generator() const { return generator_; }
  QuarticSymbolValue operator()(std::int64_t m) const;
  const std::vector<QuarticSymbolValue>& table() const { return table_; }

 private:
  GaussianInteger generator_;
  std::uint64_t conductor_ = 0;
  std::vector<QuarticSymbolValue> table_;
};

// All characters m -> (m/n)_4 with n primary, square-free, free of rational
// prime divisors and N(n) = q. Throws InvalidArgument for even q.
std::vector<QuarticCharacter> enumerate_quartic_family(std::uint64_t q);

// (Z/qZ)^* as a product of cyclic factors, one per prime-power component of q,
// each with its generator and a discrete-log table.
class DirichletGroup {
 public:
  struct Component {
    std::uint64_t prime = 0;
    unsigned exponent = 0;
    std::uint64_t modulus = 0;  // prime^exponent
    std::uint64_t order = 0;    // phi(modulus); 1 for the trivial group mod 2
    std::uint64_t generator = 0;
    std::vector<std::int64_t> log;  // log[r] for r in [0, modulus), -1 off units
  };

  // Throws UnsupportedModulus when 8 | q, InvalidArgument for q == 0 or
  // q > 10^6.
  explicit DirichletGroup(std::uint64_t q);

  std::uint64_t modulus() const { return modulus_; }
  const std::vector<Component>& components() const { return components_; }
  std::uint64_t order() const;

 private:
  std::uint64_t modulus_;
  std::vector<Component> components_;
};

// chi(g_j) = exp(2 pi i exponents[j] / order_j) on the generators of a group.
class DirichletCharacter {
 public:
  DirichletCharacter(const DirichletGroup& group, std::vector<std::uint64_t> exponents);

  std::uint64_t modulus() const { return group_->modulus(); }
  const std::vector<std::uint64_t>& exponents() const { return exponents_; }
  std::uint64_t order() const;
  bool is_primitive() const;

  // Common denominator of the value exponents: lcm of the component orders.
  std::uint64_t denominator() const;
  // chi(m) = exp(2 pi i k / denominator()); nullopt if gcd(m, q) > 1.
  std::optional<std::uint64_t> value_exponent(std::int64_t m) const;
  std::complex<double> value(std::int64_t m) const;
  // For characters with order dividing 4.
  QuarticSymbolValue value4(std::int64_t m) const;

 private:
  const DirichletGroup* group_;
  std::vector<std::uint64_t> exponents_;
};

// Owns the group so the characters stay valid.
struct CharacterList {
  std::shared_ptr<const DirichletGroup> group;
  std::vector<DirichletCharacter> characters;
};

DirichletGroup dirichlet_group(std::uint64_t q);
// Primitive characters mod q of order exactly 4.
CharacterList list_order4_primitive(std::uint64_t q);

struct MatchReport {
  std::uint64_t q = 0;
  std::size_t family_count = 0;
  std::size_t oracle_count = 0;
  // (family generator, index into oracle list) for every matched pair.
  std::vector<std::pair<GaussianInteger, std::size_t>> matches;
  std::vector<std::string> mismatches;
  bool ok = false;
};

// Compares the (m/n)_4 family at odd prime q with the group-theoretic list,
// pointwise on [1, q]. A mismatch is reported, not thrown.
MatchReport match_family_to_oracle(std::uint64_t q);

}  // namespace qsieve
