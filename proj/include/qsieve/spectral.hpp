#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>

#include <Eigen/Dense>

namespace qsieve {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

struct PowerIterationResult {
  double sigma_max_sq = 0.0;
  std::size_t iterations = 0;
};

// Deterministic unit start vector with irrational phase and modulus steps.
ComplexVector start_vector(Eigen::Index n);

// Largest eigenvalue of T* T by power iteration from start_vector(). Stops once the Rayleigh quotient moves by less than rel_tol (relative)
// and the geometric extrapolation of the remaining increments is below rel_tol
// as well. Throws ComputationError after max_iterations.
PowerIterationResult power_iteration_sigma_sq(const ComplexMatrix& t, double rel_tol = 1e-9,
                                              std::size_t max_iterations = 100000);

// sigma_max(T)^2 from a dense SVD.
double dense_sigma_max_sq(const ComplexMatrix& t);

inline constexpr std::size_t kDenseLimit = 200;

struct SpectralNorm {
  double value = 0.0;  // sigma_max^2
  std::string method;  // "svd" or "power"
  double power_value = 0.0;
  std::size_t power_iterations = 0;
  std::optional<double> svd_value;  // when both dims <= kDenseLimit
};

// Power iteration always; dense SVD as well when both dimensions are at most
// kDenseLimit, in which case the SVD value is the reported one.
SpectralNorm spectral_norm_sq(const ComplexMatrix& t);

}  // namespace qsieve
