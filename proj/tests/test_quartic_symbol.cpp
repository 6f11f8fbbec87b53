#include <doctest.h>

#include <random>

#include "qsieve/errors.hpp"
#include "qsieve/factorization.hpp"
#include "qsieve/gauss_sums.hpp"
#include "qsieve/quartic_symbol.hpp"

using namespace qsieve;
using G = GaussianInteger;

namespace {
std::string sym(const G& a, const G& n) { return quartic_symbol(a, n).to_string(); }
}  // namespace

TEST_CASE("value arithmetic") {
  const auto i = QuarticSymbolValue::root(1);
  CHECK((i * i).to_string() == "-1");
  CHECK((i * QuarticSymbolValue::zero()).is_zero());
  CHECK(i.conj().to_string() == "-i");
  CHECK(i.pow(4).to_string() == "1");
  for (int k = 0; k < 4; ++k) CHECK(std::abs(QuarticSymbolValue::root(k).to_complex()) == doctest::Approx(1.0));
}

TEST_CASE("spec values") {
  CHECK(sym(1, G(-1, 2)) == "1");
  CHECK(sym(G(-1, 2), G(-1, 2)) == "0");
  CHECK(sym(2, G(-1, 2)) == "-i");
  CHECK(quartic_symbol(2, G(-1, 2)).exponent() == 3);
  const char* expect[] = {"1", "-i", "i", "-1", "0"};
  for (int m = 1; m <= 5; ++m) CHECK(chi_eval(G(-1, 2), m).to_string() == expect[m - 1]);
  CHECK(chi_eval(G(3, 2), 1).to_string() == "1");
  CHECK_THROWS_AS(quartic_symbol(2, G(1, 1)), InvalidArgument);
  CHECK_THROWS_AS(quartic_symbol(2, G(1, 2)), InvalidArgument);
}

TEST_CASE("composite moduli against an independent oracle") {
  // Frozen from a plain-Python evaluation of a^{(N(p)-1)/4} mod p over the
  // prime factors.
  const G n1 = G(-7, 4);  // (-1+2i)(3+2i)
  CHECK(sym(2, n1) == "-1");
  CHECK(sym(G(1, 1), n1) == "i");
  CHECK(sym(G(3, -4), n1) == "1");
  CHECK(sym(G(7, 2), n1) == "-i");
  CHECK(sym(5, n1) == "0");
  const G n2 = G(3, -6);  // -3 (-1+2i)
  CHECK(sym(2, n2) == "-i");
  CHECK(sym(G(1, 1), n2) == "i");
  CHECK(sym(G(3, -4), n2) == "-1");
  CHECK(sym(G(7, 2), n2) == "-1");
}

TEST_CASE("reciprocity sign") {
  CHECK(reciprocity_sign(G(-1, 2), G(3, 2)) == -1);
  CHECK(reciprocity_sign(G(-1, 2), G(-3, 0)) == 1);
  CHECK(reciprocity_sign(G(3, 2), G(-1, 2)) == reciprocity_sign(G(-1, 2), G(3, 2)));
  CHECK_THROWS_AS(reciprocity_sign(G(-1, 2), G(-1, 2) * G(3, 2)), InvalidArgument);
}

TEST_CASE("multiplicativity in the numerator, exhaustive to norm 200") {
  for (const auto& n : enumerate_primary(1, 200)) {
    const ResidueSystem res(n);
    const QuarticSymbolEvaluator chi(n);
    const auto reps = res.reps();
    std::vector<QuarticSymbolValue> v;
    for (const auto& x : reps) v.push_back(chi(x));
    for (std::size_t a = 0; a < reps.size(); a += 3) {
      for (std::size_t b = 0; b < reps.size(); b += 2) {
        REQUIRE(chi(reps[a] * reps[b]) == v[a] * v[b]);
      }
    }
  }
}

TEST_CASE("multiplicativity in the modulus, periodicity and conjugation") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long long> d(-200, 200);
  const auto ns = enumerate_primary(1, 150);
  for (int k = 0; k < 400; ++k) {
    const G& n1 = ns[rng() % ns.size()];
    const G& n2 = ns[rng() % ns.size()];
    const G a(d(rng), d(rng)), z(d(rng), d(rng));
    CHECK(quartic_symbol(a + z * n1, n1) == quartic_symbol(a, n1));
    CHECK(quartic_symbol(a, n1) == quartic_symbol(a.conj(), n1.conj()).conj());
    if (gcd(n1, n2).is_unit()) {
      CHECK(quartic_symbol(a, n1 * n2) == quartic_symbol(a, n1) * quartic_symbol(a, n2));
    }
  }
}

TEST_CASE("chi_eval periodicity") {
  for (const G& n : {G(-1, 2), G(3, 2), G(-7, 4), G(1, 4)}) {
    const long long q = static_cast<long long>(n.norm());
    for (long long m = -30; m < 30; ++m) CHECK(chi_eval(n, m + q) == chi_eval(n, m));
  }
}

TEST_CASE("quartic reciprocity, primes of norm <= 300") {
  std::vector<G> primes;
  for (const auto& z : enumerate_primary(1, 300)) {
    const auto f = factor(z);
    if (f.primes.size() == 1 && f.primes[0].exponent == 1) primes.push_back(z);
  }
  CHECK(primes.size() > 30);
  for (const auto& m : primes) {
    for (const auto& n : primes) {
      if (m == n) continue;
      const auto sign = QuarticSymbolValue::root(reciprocity_sign(m, n) < 0 ? 2 : 0);
      REQUIRE(quartic_symbol(m, n) == quartic_symbol(n, m) * sign);
    }
  }
}
