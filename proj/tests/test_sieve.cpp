#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "qsieve/errors.hpp"
#include "qsieve/exponent.hpp"
#include "qsieve/regime.hpp"
#include "qsieve/report.hpp"
#include "qsieve/sieve.hpp"

using namespace qsieve;
using G = GaussianInteger;

namespace {
ComplexVector random_unit(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  ComplexVector v(static_cast<Eigen::Index>(n));
  for (auto& x : v) x = {d(rng), d(rng)};
  return v / v.norm();
}
}  // namespace

TEST_CASE("symbol matrix shape") {
  const auto empty = symbol_matrix(1, 1);
  CHECK(empty.m.empty());
  CHECK(empty.entries.rows == 0);

  const auto s = symbol_matrix(4, 4);
  CHECK(s.m.size() == 2);
  CHECK(s.n.size() == 2);
  for (std::size_t r = 0; r < s.m.size(); ++r) {
    for (std::size_t c = 0; c < s.n.size(); ++c) {
      if (s.m[r] == s.n[c]) CHECK(s.entries.at(r, c).is_zero());
      else CHECK_FALSE(s.entries.at(r, c).is_zero());
    }
  }
  for (const auto& m : squarefree_primary_dyadic(32)) {
    CHECK(is_primary(m));
    CHECK(m.norm() > 32);
    CHECK(m.norm() <= 64);
  }
  CHECK(squarefree_dyadic(8) == std::vector<std::int64_t>{10, 11, 13, 14, 15});
  CHECK(squarefree_dyadic(8, true) == std::vector<std::int64_t>{11, 13, 15});
}

TEST_CASE("empirical B1 against dense oracle") {
  struct Case { std::int64_t M, N; std::size_t rows, cols; double sigma; };
  // numpy SVD of the same matrices, frozen.
  for (const Case& c : {Case{4, 4, 2, 2, 1.0}, Case{8, 8, 3, 3, 3.0}, Case{4, 16, 2, 5, 6.828427124746},
                        Case{16, 4, 5, 2, 6.828427124746}, Case{16, 32, 5, 11, 24.896537377615},
                        Case{32, 16, 11, 5, 30.830017248377}}) {
    const auto r = empirical_B1(c.M, c.N);
    CHECK(r.rows == c.rows);
    CHECK(r.cols == c.cols);
    CHECK(r.empirical_norm == doctest::Approx(c.sigma).epsilon(1e-10));
    CHECK(r.bound_terms.size() == 3);
    CHECK(r.ratio > 0);
    CHECK(std::isfinite(*r.ratio_initial_estimate));
    CHECK(*r.initial_estimate == doctest::Approx(double(c.M) + double(c.N) * double(c.N)));
  }
}

TEST_CASE("empirical theorem 2 against dense oracle") {
  struct Case { std::int64_t Q, M; std::size_t rows, cols; double sigma; };
  for (const Case& c : {Case{4, 4, 2, 3, 2.0}, Case{8, 8, 4, 5, 6.828427124746}, Case{16, 8, 6, 5, 10.0},
                        Case{8, 32, 4, 19, 21.837045198746}}) {
    const auto r = empirical_theorem2(c.Q, c.M);
    CHECK(r.rows == c.rows);
    CHECK(r.cols == c.cols);
    CHECK(r.empirical_norm == doctest::Approx(c.sigma).epsilon(1e-10));
    CHECK(r.selected_bound == "min");
  }
  CHECK(empirical_theorem2(4, 4).skipped_conductors == std::vector<std::uint64_t>{8});
  CHECK_THROWS_AS(empirical_theorem2(4000, 4), InvalidArgument);
}

TEST_CASE("duality") {
  for (auto [M, N] : {std::pair<std::int64_t, std::int64_t>{16, 32}, {32, 16}, {64, 8}, {8, 64}, {48, 48}}) {
    const auto d = duality_checks(M, N);
    CHECK_MESSAGE(d.ok, (d.failures.empty() ? "" : d.failures.front()));
    CHECK(d.adjoint_rel_diff <= 1e-9);
    REQUIRE(d.svd_rel_diff);
    CHECK(*d.svd_rel_diff <= 1e-7);
  }
}

TEST_CASE("quadratic form equals the matrix form") {
  std::mt19937_64 rng(20240611);
  for (auto [M, N] : {std::pair<std::int64_t, std::int64_t>{16, 16}, {32, 8}, {8, 64}}) {
    const auto cols = symbol_matrix(M, N).n.size();
    for (int k = 0; k < 10; ++k) {
      const auto r = quadratic_form_check(M, N, random_unit(cols, rng));
      CHECK(r.rel_diff < 1e-10);
      CHECK(r.within_norm);
      CHECK(r.norm_sq == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("transformation between characters and symbols") {
  std::mt19937_64 rng(7);
  for (std::uint64_t q : {5u, 13u, 29u}) {
    const auto cols = transformation_columns(100).size();
    const auto r = transformation_check(q, 100, random_unit(cols, rng));
    CHECK(r.characters == 2);
    CHECK(r.generators == 2);
    CHECK(r.rel_err_primary < 1e-12);
    CHECK(r.rel_err_half < 1e-12);
  }
}

TEST_CASE("coefficient files") {
  std::istringstream ok("index,re,im\n1+2i,0.5,0\n3,0,-1\n");
  const auto v = parse_coefficients(ok);
  REQUIRE(v.entries.size() == 2);
  CHECK(v.entries[0].first == G(1, 2));
  CHECK(v.norm_sq() == doctest::Approx(1.25));
  const auto dense = coefficients_on(v, std::vector<G>{G(3, 0), G(1, 2), G(-1, 2)});
  CHECK(dense(0) == ComplexValue(0, -1));
  CHECK(dense(1) == ComplexValue(0.5, 0));
  CHECK(dense(2) == ComplexValue(0, 0));
  CHECK_THROWS_AS(coefficients_on(v, std::vector<std::int64_t>{3, 5}), InvalidArgument);

  std::istringstream no_header("1,2,3\n");
  CHECK_THROWS_AS(parse_coefficients(no_header), InvalidArgument);
  std::istringstream dup("index,re,im\n3,1,0\n3,0,1\n");
  CHECK_THROWS_AS(parse_coefficients(dup), InvalidArgument);
  std::istringstream bad("index,re,im\n3,x,0\n");
  CHECK_THROWS_AS(parse_coefficients(bad), InvalidArgument);
  CHECK_THROWS(read_coefficients("/nonexistent/coeffs.csv"));
}

TEST_CASE("exponent iteration") {
  CHECK(exponent_map(Rational(2)) == Rational(12, 7));
  CHECK(exponent_map(Rational(3, 2)) == Rational(3, 2));
  CHECK(exponent_map_fixed_points() == std::vector<Rational>{Rational(1), Rational(3, 2)});
  CHECK_THROWS_AS(exponent_iteration(Rational(3, 2), 3), InvalidArgument);
  CHECK_THROWS_AS(exponent_iteration(Rational(5, 2), 3), InvalidArgument);
  const auto t = exponent_iteration(Rational(2), 12);
  REQUIRE(t.xi_history.size() == 13);
  for (std::size_t k = 1; k < t.xi_history.size(); ++k) {
    CHECK(t.xi_history[k] < t.xi_history[k - 1]);
    CHECK(t.xi_history[k] > Rational(3, 2));
  }
  CHECK(parse_rational("12/7") == Rational(12, 7));
  CHECK(to_string(Rational(24, 14)) == "12/7");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("x"), InvalidArgument);
}

TEST_CASE("regime table") {
  const double M = 1e6;
  CHECK(piecewise_regime(std::sqrt(M), M).label == "M");
  CHECK(piecewise_regime(std::pow(M, 0.7), M).label == "Q^{7/4}");
  CHECK(piecewise_regime(std::pow(M, 3.0), M).label == "Q");
  for (const auto& row : regime_table()) {
    if (!row.upper) continue;
    const auto r = piecewise_regime_alpha(*row.upper);
    CHECK(r.boundary);
    CHECK(r.label.empty());
    CHECK(r.boundary_at == to_string(*row.upper));
  }
  for (const char* a : {"1/2", "7/10", "1", "13/10", "8/5", "9/5", "11/5", "3"}) {
    const auto r = piecewise_regime_alpha(parse_rational(a));
    CHECK_FALSE(r.boundary);
    CHECK_MESSAGE(r.agrees, a);
  }
  CHECK_THROWS_AS(piecewise_regime(1.0, 10.0), InvalidArgument);
}

TEST_CASE("reports") {
  const auto a = empirical_B1(16, 32);
  const auto b = empirical_B1(16, 32);
  CHECK(dump_json(to_json(a)) == dump_json(to_json(b)));
  const auto text = dump_json(to_json(a));
  CHECK(text.back() == '\n');
  const auto parsed = Json::parse(text);
  CHECK(parsed["rows"] == 5);
  CHECK(parsed["cols"] == 11);
  CHECK(parsed["empirical_norm"].get<double>() == doctest::Approx(24.896537377615).epsilon(1e-11));

  const auto header = sieve_csv_header(a);
  CHECK(header.front() == "kind");
  CHECK(header.back() == "ratio_initial_estimate");
  const auto csv = sieve_csv({a, b});
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(sieve_csv_header(empirical_theorem2(4, 4)).back() == "skipped_conductors");
  CHECK_THROWS(sieve_csv({a, empirical_theorem2(4, 4)}));
}
