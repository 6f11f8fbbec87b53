#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsieve/gauss_sums.hpp"
#include "qsieve/gaussian.hpp"
#include "qsieve/quartic_symbol.hpp"
#include "qsieve/spectral.hpp"

namespace qsieve {

// Row-major matrix of values in {0, 1, i, -1, -i}, stored as exponent codes
// (-1 for zero). Complex entries are only formed by to_complex().
struct CodedMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int8_t> codes;

  CodedMatrix() = default;
  CodedMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), codes(r * c, -1) {}
  QuarticSymbolValue at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, QuarticSymbolValue v);
  ComplexMatrix to_complex() const;
};

// Square-free primary elements with norm in (lo, 2 lo].
std::vector<GaussianInteger> squarefree_primary_dyadic(std::int64_t lo);
// Square-free rational integers in (lo, 2 lo], optionally odd only.
std::vector<std::int64_t> squarefree_dyadic(std::int64_t lo, bool odd_only = false);

// Rows m, columns n, entry (n/m)_4.
struct SymbolMatrix {
  std::vector<GaussianInteger> m;
  std::vector<GaussianInteger> n;
  CodedMatrix entries;
};

SymbolMatrix symbol_matrix(std::int64_t M, std::int64_t N, unsigned threads = 0);

struct SieveReport {
  std::string kind;  // "theorem1" or "theorem2"
  std::vector<std::pair<std::string, std::int64_t>> ranges;
  std::size_t rows = 0;
  std::size_t cols = 0;
  double empirical_norm = 0.0;
  std::string method;
  double power_norm = 0.0;
  std::size_t power_iterations = 0;
  std::optional<double> svd_norm;
  std::vector<std::pair<std::string, double>> bound_terms;
  std::string selected_bound;
  double bound = 0.0;
  double ratio = 0.0;
  double eps = 0.1;
  double bound_eps = 0.0;  // bound * (MN)^eps or (QM)^eps
  double ratio_eps = 0.0;
  // theorem1: the shape M + N^2, reported only.
  std::optional<double> initial_estimate;
  std::optional<double> ratio_initial_estimate;
  // theorem2: conductors the character oracle could not handle.
  std::vector<std::uint64_t> skipped_conductors;
  // Set when a coefficient vector was supplied: sum / |a|^2.
  std::optional<double> quadratic_form;
};

// sigma_max(T)^2 for T = symbol_matrix(M, N), with the bound terms
// M, N, (MN)^{3/4}.
SieveReport empirical_B1(std::int64_t M, std::int64_t N, double eps = 0.1, unsigned threads = 0);

struct DualityReport {
  std::int64_t M = 0;
  std::int64_t N = 0;
  double b_mn = 0.0;
  double b_nm = 0.0;
  double sigma_t = 0.0;          // sigma_max(T)^2 by power iteration on T* T
  double sigma_t_adjoint = 0.0;  // same for T*, i.e. on T T*
  double adjoint_rel_diff = 0.0;
  std::optional<double> svd_rel_diff;  // |power - svd| / svd when dense
  bool ok = false;
  std::vector<std::string> failures;
};

// B1(M,N) <= 2 B1(N,M) + 1e-6 in both directions, sigma_max(T) = sigma_max(T*)
// to 1e-9 and power iteration against dense SVD to 1e-7. Failures are listed,
// not thrown.
DualityReport duality_checks(std::int64_t M, std::int64_t N, unsigned threads = 0);

// Rows (q, character) for Q < q <= 2Q from list_order4_primitive(q), columns
// square-free m in (M, 2M], entry chi(m).
struct CharacterMatrix {
  std::vector<std::pair<std::uint64_t, std::size_t>> rows;  // (q, index in the oracle list)
  std::vector<std::int64_t> m;
  CodedMatrix entries;
  std::vector<std::uint64_t> skipped_conductors;
};

CharacterMatrix character_matrix(std::int64_t Q, std::int64_t M, unsigned threads = 0);

// Bound terms Q^{7/4}+M, Q^{11/8}+Q^{1/2}M, Q^{5/4}+Q^{2/3}M,
// Q+Q^{1/2}M+M^{17/7} and their minimum. Requires Q, M <= 2000.
SieveReport empirical_theorem2(std::int64_t Q, std::int64_t M, double eps = 0.1, unsigned threads = 0);

// Sparse coefficient vector; index is a Gaussian integer (rational integers
// have zero imaginary part).
struct CoefficientVector {
  std::vector<std::pair<GaussianInteger, ComplexValue>> entries;
  double norm_sq() const;
};

// CSV with header "index,re,im"; index is a Gaussian-integer literal or a
// rational integer. Duplicate indices are rejected.
CoefficientVector parse_coefficients(std::istream& in);
CoefficientVector read_coefficients(const std::string& path);

// Dense vector over the columns of a matrix. Throws InvalidArgument when an
// index lies outside the columns.
ComplexVector coefficients_on(const CoefficientVector& a, const std::vector<GaussianInteger>& columns);
ComplexVector coefficients_on(const CoefficientVector& a, const std::vector<std::int64_t>& columns);

struct QuadraticFormCheck {
  double direct = 0.0;  // sum over m of |sum_n a_n (n/m)_4|^2, symbol by symbol
  double matrix = 0.0;  // |T a|^2
  double norm_sq = 0.0;
  double empirical_norm = 0.0;
  double rel_diff = 0.0;
  bool within_norm = false;  // direct <= empirical_norm |a|^2 (1 + 1e-7)
};

QuadraticFormCheck quadratic_form_check(std::int64_t M, std::int64_t N, const ComplexVector& a);

struct TransformationCheck {
  std::uint64_t q = 0;
  std::int64_t M = 0;
  double dirichlet_side = 0.0;  // over primitive order-4 chi mod q
  double primary_side = 0.0;    // over n == 1 mod (1+i)^3, N(n) = q
  double half_side = 0.0;       // half the sum over n == +-1 mod (1+i)^3
  double rel_err_primary = 0.0;
  double rel_err_half = 0.0;
  std::size_t characters = 0;
  std::size_t generators = 0;
};

// Both sides of the reduction from Dirichlet characters of conductor q to
// quartic symbols, for coefficients a on the odd square-free m in (M, 2M].
TransformationCheck transformation_check(std::uint64_t q, std::int64_t M, const ComplexVector& a);
std::vector<std::int64_t> transformation_columns(std::int64_t M);

}  // namespace qsieve
