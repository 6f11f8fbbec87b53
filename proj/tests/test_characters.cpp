#include <doctest.h>

#include <numeric>

#include "qsieve/characters.hpp"
#include "qsieve/errors.hpp"
#include "qsieve/factorization.hpp"

using namespace qsieve;
using G = GaussianInteger;

namespace {
// Order and primitivity read off the value table alone.
int table_order(const std::vector<QuarticSymbolValue>& v, std::uint64_t q) {
  for (int d : {1, 2, 4}) {
    bool trivial = true;
    for (std::uint64_t m = 1; m < q; ++m) {
      if (std::gcd(m, q) == 1 && v[m].pow(static_cast<unsigned>(d)) != QuarticSymbolValue::root(0)) trivial = false;
    }
    if (trivial) return d;
  }
  return 0;
}
bool table_primitive(const std::vector<QuarticSymbolValue>& v, std::uint64_t q) {
  for (std::uint64_t d = 1; d < q; ++d) {
    if (q % d) continue;
    bool induced = true;
    for (std::uint64_t m = 1; m < q && induced; ++m) {
      if (std::gcd(m, q) == 1 && m % d == 1 % d && v[m] != QuarticSymbolValue::root(0)) induced = false;
    }
    if (induced) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("quartic family") {
  const auto f5 = enumerate_quartic_family(5);
  REQUIRE(f5.size() == 2);
  CHECK(f5[0].generator() == G(-1, -2));
  CHECK(f5[1].generator() == G(-1, 2));
  CHECK(enumerate_quartic_family(3).empty());
  CHECK(enumerate_quartic_family(9).empty());
  CHECK_THROWS_AS(enumerate_quartic_family(10), InvalidArgument);
  CHECK_THROWS_AS(QuarticCharacter(G(-3, 0)), InvalidArgument);

  for (std::uint64_t q : {5u, 13u, 17u, 29u, 65u, 85u}) {
    for (const auto& chi : enumerate_quartic_family(q)) {
      CHECK(table_order(chi.table(), q) == 4);
      CHECK(table_primitive(chi.table(), q));
      for (std::uint64_t m = 0; m < q; ++m) {
        CHECK(chi(static_cast<std::int64_t>(m)).is_zero() == (std::gcd(m, q) != 1));
        CHECK(chi(static_cast<std::int64_t>(m + q)) == chi(static_cast<std::int64_t>(m)));
      }
      for (std::int64_t a = 1; a < 40; a += 3)
        for (std::int64_t b = 1; b < 40; b += 5) CHECK(chi(a * b) == chi(a) * chi(b));
    }
  }
}

TEST_CASE("conjugate generators give conjugate characters") {
  for (std::uint64_t q : {5u, 13u, 17u, 37u, 41u}) {
    const auto fam = enumerate_quartic_family(q);
    REQUIRE(fam.size() == 2);
    CHECK(primary_associate(fam[0].generator().conj()).value == fam[1].generator());
    for (std::int64_t m = 0; m < static_cast<std::int64_t>(q); ++m) CHECK(fam[0](m) == fam[1](m).conj());
  }
}

TEST_CASE("Dirichlet oracle") {
  CHECK(list_order4_primitive(5).characters.size() == 2);
  CHECK(list_order4_primitive(7).characters.size() == 0);
  CHECK(list_order4_primitive(13).characters.size() == 2);
  CHECK(list_order4_primitive(65).characters.size() == 8);
  CHECK_THROWS_AS(DirichletGroup(8), UnsupportedModulus);
  CHECK_THROWS_AS(DirichletGroup(24), UnsupportedModulus);
  CHECK_THROWS_AS(DirichletGroup(0), InvalidArgument);
  CHECK(DirichletGroup(4).order() == 2);
  CHECK(DirichletGroup(1).order() == 1);

  // Brute-force order and primitivity on the value tables.
  for (std::uint64_t q = 3; q <= 120; ++q) {
    if (q % 8 == 0) continue;
    const DirichletGroup g(q);
    std::uint64_t phi = 0;
    for (std::uint64_t m = 1; m < q; ++m) phi += std::gcd(m, q) == 1;
    CHECK(g.order() == phi);
    const auto list = list_order4_primitive(q);
    for (const auto& chi : list.characters) {
      std::vector<QuarticSymbolValue> v(q);
      for (std::uint64_t m = 0; m < q; ++m) v[m] = chi.value4(static_cast<std::int64_t>(m));
      CHECK(table_order(v, q) == 4);
      CHECK(table_primitive(v, q));
      for (std::int64_t a = 1; a < 30; a += 2)
        for (std::int64_t b = 1; b < 30; b += 3) CHECK(chi.value4(a * b) == chi.value4(a) * chi.value4(b));
    }
  }
}

TEST_CASE("family matches the oracle at primes") {
  for (std::uint64_t q : {5u, 13u, 17u, 101u, 397u}) {
    const auto r = match_family_to_oracle(q);
    CHECK(r.ok);
    CHECK(r.family_count == 2);
    CHECK(r.oracle_count == 2);
  }
  for (std::uint64_t q : {3u, 7u, 11u, 499u}) {
    const auto r = match_family_to_oracle(q);
    CHECK(r.family_count == 0);
    CHECK(r.oracle_count == 0);
    CHECK(r.ok);
  }
  // Composite conductors: the family is a strict subset of the oracle list.
  const auto r65 = match_family_to_oracle(65);
  CHECK_FALSE(r65.ok);
  CHECK(r65.family_count == 4);
  CHECK(r65.oracle_count == 8);
  CHECK(r65.matches.size() == 4);
}
