#include "qsieve/characters.hpp"

#include <numbers>
#include <numeric>

#include "qsieve/errors.hpp"
#include "qsieve/factorization.hpp"
#include "qsieve/gauss_sums.hpp"

namespace qsieve {
namespace {

constexpr std::uint64_t kMaxModulus = 1'000'000;

std::uint64_t powmod64(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 result = 1 % m, b = base % m;
  while (e != 0) {
    if (e & 1) result = result * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t mod_signed(std::int64_t m, std::uint64_t q) {
  const auto sq = static_cast<std::int64_t>(q);
  std::int64_t r = m % sq;
  if (r < 0) r += sq;
  return static_cast<std::uint64_t>(r);
}

// Smallest primitive root modulo p^e, p odd.
std::uint64_t primitive_root(std::uint64_t p, std::uint64_t modulus, std::uint64_t order) {
  const auto order_primes = factor_rational(order);
  for (std::uint64_t g = 2; g < modulus; ++g) {
    if (g % p == 0) continue;
    bool generates = true;
    for (const auto& [ell, unused] : order_primes) {
      if (powmod64(g, order / ell, modulus) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
  throw std::logic_error("no primitive root modulo " + std::to_string(modulus));
}

std::vector<std::int64_t> log_table(std::uint64_t modulus, std::uint64_t generator, std::uint64_t order) {
  std::vector<std::int64_t> log(modulus, -1);
  std::uint64_t x = 1 % modulus;
  for (std::uint64_t k = 0; k < order; ++k) {
    log[x] = static_cast<std::int64_t>(k);
    x = x * generator % modulus;
  }
  return log;
}

}  // namespace

QuarticCharacter::QuarticCharacter(GaussianInteger generator) : generator_(std::move(generator)) {
  require_primary_modulus(generator_);
  if (generator_.is_unit() || !is_squarefree(generator_) || !has_no_rational_prime_divisor(generator_)) {
    throw InvalidArgument("quartic character generator must be a square-free non-unit with no rational prime "
                          "divisor, got " + generator_.to_string());
  }
  conductor_ = static_cast<std::uint64_t>(generator_.norm());
  const SymbolTable symbol(generator_);
  table_.reserve(conductor_);
  for (std::uint64_t m = 0; m < conductor_; ++m) table_.push_back(symbol.at(static_cast<std::int64_t>(m), 0));
}

QuarticSymbolValue QuarticCharacter::operator()(std::int64_t m) const { return table_[mod_signed(m, conductor_)]; }

std::vector<QuarticCharacter> enumerate_quartic_family(std::uint64_t q) {
  if (q % 2 == 0) throw InvalidArgument("quartic family requires odd conductor, got " + std::to_string(q));
  std::vector<QuarticCharacter> out;
  if (q == 1) return out;
  const EnumerationConstraints constraints{.squarefree = true, .no_rational_prime_divisor = true};
  for (auto& n : enumerate_primary(Integer(q - 1), Integer(q), constraints)) out.emplace_back(std::move(n));
  return out;
}

DirichletGroup::DirichletGroup(std::uint64_t q) : modulus_(q) {
  if (q == 0 || q > kMaxModulus) {
    throw InvalidArgument("Dirichlet group modulus must lie in [1, 10^6], got " + std::to_string(q));
  }
  for (const auto& [p, e] : factor_rational(q)) {
    Component c;
    c.prime = p;
    c.exponent = e;
    c.modulus = 1;
    for (unsigned k = 0; k < e; ++k) c.modulus *= p;
    if (p == 2) {
      if (e >= 3) throw UnsupportedModulus("Dirichlet oracle does not support 8 | q (q = " + std::to_string(q) + ")");
      c.order = e == 1 ? 1 : 2;
      c.generator = e == 1 ? 1 : 3;
    } else {
      c.order = c.modulus / p * (p - 1);
      c.generator = primitive_root(p, c.modulus, c.order);
    }
    c.log = log_table(c.modulus, c.generator, c.order);
    components_.push_back(std::move(c));
  }
}

std::uint64_t DirichletGroup::order() const {
  std::uint64_t n = 1;
  for (const auto& c : components_) n *= c.order;
  return n;
}

DirichletGroup dirichlet_group(std::uint64_t q) { return DirichletGroup(q); }

DirichletCharacter::DirichletCharacter(const DirichletGroup& group, std::vector<std::uint64_t> exponents)
    : group_(&group), exponents_(std::move(exponents)) {
  if (exponents_.size() != group.components().size()) {
    throw InvalidArgument("character needs one exponent per cyclic component");
  }
  for (std::size_t j = 0; j < exponents_.size(); ++j) exponents_[j] %= group.components()[j].order;
}

std::uint64_t DirichletCharacter::order() const {
  std::uint64_t result = 1;
  const auto& comps = group_->components();
  for (std::size_t j = 0; j < comps.size(); ++j) {
    const std::uint64_t n = comps[j].order;
    result = std::lcm(result, n / std::gcd(exponents_[j], n));
  }
  return result;
}

bool DirichletCharacter::is_primitive() const {
  const auto& comps = group_->components();
  for (std::size_t j = 0; j < comps.size(); ++j) {
    const auto& c = comps[j];
    if (c.modulus == 2) return false;  // (Z/2)^* is trivial
    if (c.exponent == 1 || c.modulus == 4) {
      if (exponents_[j] == 0) return false;
    } else if (exponents_[j] % c.prime == 0) {
      return false;  // trivial on 1 + p^{e-1} Z, induced from p^{e-1}
    }
  }
  return true;
}

std::uint64_t DirichletCharacter::denominator() const {
  std::uint64_t l = 1;
  for (const auto& c : group_->components()) l = std::lcm(l, c.order);
  return l;
}

std::optional<std::uint64_t> DirichletCharacter::value_exponent(std::int64_t m) const {
  const std::uint64_t l = denominator();
  unsigned __int128 k = 0;
  const auto& comps = group_->components();
  for (std::size_t j = 0; j < comps.size(); ++j) {
    const std::int64_t lg = comps[j].log[mod_signed(m, comps[j].modulus)];
    if (lg < 0) return std::nullopt;
    k += static_cast<unsigned __int128>(exponents_[j]) * static_cast<std::uint64_t>(lg) * (l / comps[j].order);
  }
  return static_cast<std::uint64_t>(k % l);
}

std::complex<double> DirichletCharacter::value(std::int64_t m) const {
  const auto k = value_exponent(m);
  if (!k) return {0.0, 0.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(*k) / static_cast<double>(denominator());
  return {std::cos(angle), std::sin(angle)};
}

QuarticSymbolValue DirichletCharacter::value4(std::int64_t m) const {
  const std::uint64_t l = denominator();
  const std::uint64_t ord = order();
  if (4 % ord != 0) throw InvalidArgument("value4 requires a character of order dividing 4");
  const auto k = value_exponent(m);
  if (!k) return QuarticSymbolValue::zero();
  // k / l is a multiple of 1/ord, hence of 1/4.
  return QuarticSymbolValue::root(static_cast<int>((*k * 4 / l) % 4));
}

CharacterList list_order4_primitive(std::uint64_t q) {
  CharacterList out;
  out.group = std::make_shared<const DirichletGroup>(q);
  const auto& comps = out.group->components();

  // Exponents with 4 e == 0 mod order_j, per component.
  std::vector<std::vector<std::uint64_t>> choices;
  for (const auto& c : comps) {
    const std::uint64_t g = std::gcd<std::uint64_t>(c.order, 4);
    std::vector<std::uint64_t> es;
    for (std::uint64_t t = 0; t < g; ++t) es.push_back(t * (c.order / g));
    choices.push_back(std::move(es));
  }
  std::vector<std::size_t> pick(comps.size(), 0);
  while (true) {
    std::vector<std::uint64_t> exps(comps.size());
    for (std::size_t j = 0; j < comps.size(); ++j) exps[j] = choices[j][pick[j]];
    DirichletCharacter chi(*out.group, std::move(exps));
    if (chi.order() == 4 && chi.is_primitive()) out.characters.push_back(std::move(chi));

    std::size_t j = comps.size();
    while (j > 0) {
      --j;
      if (++pick[j] < choices[j].size()) break;
      pick[j] = 0;
      if (j == 0) return out;
    }
    if (comps.empty()) return out;
  }
}

MatchReport match_family_to_oracle(std::uint64_t q) {
  MatchReport report;
  report.q = q;
  const auto family = enumerate_quartic_family(q);
  const auto oracle = list_order4_primitive(q);
  report.family_count = family.size();
  report.oracle_count = oracle.characters.size();

  std::vector<int> used(oracle.characters.size(), 0);
  for (const auto& chi : family) {
    std::vector<std::size_t> hits;
    for (std::size_t k = 0; k < oracle.characters.size(); ++k) {
      bool equal = true;
      for (std::uint64_t m = 1; m <= q && equal; ++m) {
        equal = chi(static_cast<std::int64_t>(m)) == oracle.characters[k].value4(static_cast<std::int64_t>(m));
      }
      if (equal) hits.push_back(k);
    }
    if (hits.size() != 1) {
      report.mismatches.push_back("generator " + chi.generator().to_string() + " matches " +
                                  std::to_string(hits.size()) + " oracle characters");
      continue;
    }
    ++used[hits.front()];
    report.matches.emplace_back(chi.generator(), hits.front());
  }
  for (std::size_t k = 0; k < used.size(); ++k) {
    if (used[k] != 1) {
      report.mismatches.push_back("oracle character " + std::to_string(k) + " matched " + std::to_string(used[k]) +
                                  " family members");
    }
  }
  if (report.family_count != report.oracle_count) {
    report.mismatches.push_back("family count " + std::to_string(report.family_count) + " != oracle count " +
                                std::to_string(report.oracle_count));
  }
  report.ok = report.mismatches.empty();
  return report;
}

}  // namespace qsieve
