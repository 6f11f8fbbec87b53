#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "qsieve/errors.hpp"
#include "qsieve/factorization.hpp"
#include "qsieve/gauss_sums.hpp"

using namespace qsieve;
using G = GaussianInteger;

namespace {
void check_close(ComplexValue got, double re, double im, double tol = 1e-9) {
  CHECK(std::abs(got.real() - re) <= tol);
  CHECK(std::abs(got.imag() - im) <= tol);
}
}  // namespace

TEST_CASE("residue systems") {
  const ResidueSystem r3(G(-3, 0));
  CHECK(r3.size() == 9);
  std::set<std::pair<long long, long long>> reps;
  for (const auto& z : r3.reps()) reps.emplace(static_cast<long long>(z.re()), static_cast<long long>(z.im()));
  CHECK(reps.size() == 9);
  for (long long s = 0; s < 3; ++s)
    for (long long t = 0; t < 3; ++t) CHECK(reps.count({s, t}) == 1);

  const ResidueSystem r5(G(-1, 2));
  CHECK(r5.size() == 5);
  CHECK(r5.rational_period() == 5);
  for (std::uint64_t k = 0; k < 5; ++k) CHECK(r5.rep(k) == G(static_cast<long long>(k), 0));

  CHECK(ResidueSystem(G(1, 0)).size() == 1);

  // Completeness: every s + t i with 0 <= s, t < N lands on each rep N times.
  for (const G& n : {G(-1, 2), G(3, 2), G(-3, 0), G(2, 2), G(-7, 4)}) {
    const ResidueSystem res(n);
    const auto N = static_cast<long long>(n.norm());
    std::vector<int> hits(res.size(), 0);
    for (long long s = 0; s < N; ++s) {
      for (long long t = 0; t < N; ++t) {
        const auto idx = res.index_of(s, t);
        REQUIRE(idx < res.size());
        REQUIRE(divides(n, G(s, t) - res.rep(idx)));
        ++hits[idx];
      }
    }
    for (int h : hits) CHECK(h == N);
    for (long long s = -40; s < 40; s += 7)
      for (long long t = -40; t < 40; t += 5) CHECK(res.index_of(G(s, t)) == res.index_of(s, t));
  }
}

TEST_CASE("additive character") {
  check_close(e_tilde(G(0, 0), G(1, 0)), 1.0, 0.0, 1e-15);
  check_close(e_tilde(G(0, 7), G(3, 0)), 1.0, 0.0, 1e-15);
  check_close(e_tilde(G(1, 0), G(4, 0)), -1.0, 0.0, 1e-15);
  check_close(e_rational(1, 4), 0.0, 1.0, 1e-15);
  check_close(e_rational(Integer("1000000000000000000000000001"), Integer("1000000000000000000000000000")),
              std::cos(2 * std::numbers::pi * 1e-27), std::sin(2 * std::numbers::pi * 1e-27), 1e-15);
}

TEST_CASE("Gauss sums against an independent oracle") {
  // Brute-force sums over explicit residue systems (plain Python).
  check_close(gauss_sum(1, G(-1, 2)), 1.902113032590, -1.175570504585);
  check_close(gauss_sum(1, G(3, 2)), -1.044831606913, 3.450844376844);
  check_close(gauss_sum(1, G(-3, 0)), -3.0, 0.0);
  check_close(gauss_sum(1, G(1, 4)), -2.537409542662, 3.249854275627);
  check_close(gauss_sum(1, G(-7, 4)), -2.069323048960, -7.792169281981);
  check_close(gauss_sum(G(2, 1), G(3, 2)), 3.450844376844, 1.044831606913);
  CHECK_THROWS_AS(gauss_sum(1, G(1, 0)), InvalidArgument);
  CHECK_THROWS_AS(gauss_sum(1, G(1, 2)), InvalidArgument);
}

TEST_CASE("Gauss-sum magnitude, orthogonality and twist") {
  for (const auto& n : enumerate_primary(1, 200, {.squarefree = true})) {
    const double N = static_cast<double>(n.norm());
    CHECK(std::abs(std::norm(gauss_sum(1, n)) - N) <= 1e-9 * N);
    CHECK(std::abs(gauss_sum(0, n)) <= 1e-9 * N);
  }
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long long> d(-50, 50);
  for (const auto& n : enumerate_primary(1, 120)) {
    const QuarticSymbolEvaluator chi(n);
    for (int k = 0; k < 5; ++k) {
      const G r(d(rng), d(rng)), s(d(rng), d(rng));
      if (s.is_zero() || !gcd(s, n).is_unit()) continue;
      const ComplexValue diff = gauss_sum(r * s, n) - chi(s).conj().to_complex() * gauss_sum(r, n);
      CHECK(std::abs(diff) <= 1e-9 * static_cast<double>(n.norm()));
    }
  }
}

TEST_CASE("tau against an independent oracle") {
  check_close(tau(G(-1, 2), 1), 1.175570504585, 1.902113032590);
  check_close(tau(G(-1, 2), 2), 2.236067977500, 0.0);
  check_close(tau(G(3, 2), 1), 3.450844376844, 1.044831606913);
  check_close(tau(G(3, 2), 2), 3.605551275464, 0.0);
  check_close(tau(G(1, -2), 1), 1.175570504585, 1.902113032590);  // -(−1+2i)
  check_close(tau(G(-7, 4), 1), 2.069323048960, 7.792169281981);
  check_close(tau(G(-7, 4), 2), 8.062257748299, 0.0);
  CHECK_THROWS_AS(tau(G(-3, 0)), InvalidArgument);        // rational prime divisor
  CHECK_THROWS_AS(tau(G(-1, 2), 3), InvalidArgument);
  CHECK_THROWS_AS(tau(G(5, 0)), InvalidArgument);
  CHECK_FALSE(tau_admissible(G(2, 1)));
  CHECK(tau_admissible(G(1, -2)));
}

TEST_CASE("tau identities on small moduli") {
  const auto ns = enumerate_primary(1, 120, {.no_rational_prime_divisor = true, .allow_negated = true});
  for (const auto& n : ns) {
    const G p = is_primary(n) ? n : -n;
    const double sq = std::sqrt(static_cast<double>(n.norm()));
    const ComplexValue bridge = quartic_symbol(n.conj(), p).to_complex() * gauss_sum(is_primary(n) ? 1 : -1, p);
    CHECK(std::abs(tau(n) - bridge) <= 1e-9 * sq);
  }
  const G n1(-1, 2), n2(3, 2);
  const ComplexValue lhs = tau(n1 * n2);
  const ComplexValue rhs = (quartic_symbol(G(n2.norm(), 0), n1) * quartic_symbol(G(n1.norm(), 0), n2)).to_complex() *
                           tau(n1) * tau(n2);
  CHECK(std::abs(lhs - rhs) <= 1e-9);
}
