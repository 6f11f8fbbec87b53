#include "qsieve/spectral.hpp"

#include <cmath>
#include <numbers>

#include "qsieve/errors.hpp"

namespace qsieve {

ComplexVector start_vector(Eigen::Index n) {
  // Golden-ratio phases and moduli: deterministic, and not confined to the
  // symmetric subspaces where the all-ones vector can sit.
  constexpr double phi = 0.6180339887498949;
  constexpr double root2 = 0.4142135623730951;
  ComplexVector v(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double turn = std::fmod(static_cast<double>(k + 1) * phi, 1.0);
    const double mod = 1.0 + std::fmod(static_cast<double>(k + 1) * root2, 1.0);
    v(k) = std::polar(mod, 2.0 * std::numbers::pi * turn);
  }
  return v / v.norm();
}

PowerIterationResult power_iteration_sigma_sq(const ComplexMatrix& t, double rel_tol, std::size_t max_iterations) {
  PowerIterationResult out;
  if (t.rows() == 0 || t.cols() == 0) return out;

  ComplexVector v = start_vector(t.cols());
  double lambda = (t * v).squaredNorm();
  double prev_step = -1.0;
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    ComplexVector w = t.adjoint() * (t * v);
    const double n = w.norm();
    if (n == 0.0) {
      out.iterations = it;
      return out;  // the start vector lies in the kernel
    }
    v = w / n;
    const double next = (t * v).squaredNorm();
    const double step = std::abs(next - lambda);
    lambda = next;
    if (step <= rel_tol * lambda) {
      // Increments shrink roughly geometrically; bound what is left of them.
      bool done = step == 0.0;
      if (!done && prev_step > 0.0) {
        const double rho = step / prev_step;
        done = rho < 1.0 && step * rho / (1.0 - rho) <= rel_tol * lambda;
      }
      if (done) {
        out.sigma_max_sq = lambda;
        out.iterations = it;
        return out;
      }
    }
    prev_step = step;
  }
  throw ComputationError("power iteration did not converge in " + std::to_string(max_iterations) +
                         " iterations (" + std::to_string(t.rows()) + "x" + std::to_string(t.cols()) +
                         " matrix, last estimate " + std::to_string(lambda) + ")");
}

double dense_sigma_max_sq(const ComplexMatrix& t) {
  if (t.rows() == 0 || t.cols() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(t);
  const double s = svd.singularValues()(0);
  return s * s;
}

SpectralNorm spectral_norm_sq(const ComplexMatrix& t) {
  SpectralNorm out;
  const auto power = power_iteration_sigma_sq(t);
  out.power_value = power.sigma_max_sq;
  out.power_iterations = power.iterations;
  if (static_cast<std::size_t>(t.rows()) <= kDenseLimit && static_cast<std::size_t>(t.cols()) <= kDenseLimit) {
    out.svd_value = dense_sigma_max_sq(t);
    out.value = *out.svd_value;
    out.method = "svd";
  } else {
    out.value = out.power_value;
    out.method = "power";
  }
  return out;
}

}  // namespace qsieve
