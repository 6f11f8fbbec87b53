#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qsieve/gauss_sums.hpp"
#include "qsieve/gaussian.hpp"

namespace qsieve {

// W(x) = exp(-1 / ((2x - 1)(5 - 2x))) on (1/2, 5/2), zero elsewhere.
double weight_W(double x);

// Inner integral I(y) = int W(x^2 + y^2) dx over the real line.
double weight_W_slice(double y);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

// W~(t) = int int W(x^2 + y^2) e~(t (x + y i) / (2i)) dx dy. The phase is
// e(t y), so W~(t) = int int W(x^2 + y^2) cos(2 pi t y) dx dy, evaluated by
// nested adaptive Gauss-Kronrod quadrature over the annulus. Throws
// ComputationError if the error estimate exceeds abs_tol.
QuadratureResult weight_W_tilde_quadrature(double t, double abs_tol = 1e-9);
double weight_W_tilde(double t);

// Bulk evaluator for W~ on [0, t_max]: I(y) sampled once on a uniform grid
// whose spacing resolves frequencies up to t_max + guard, then each W~(t) is a
// trapezoid sum evaluated with Clenshaw's recurrence. The integrand is smooth
// and compactly supported, so the trapezoid error is of size |W~(guard)|.
class WTildeTable {
 public:
  explicit WTildeTable(double t_max, double guard = 600.0);
  double operator()(double t) const;
  double t_max() const { return t_max_; }
  std::size_t nodes() const { return slices_.size(); }

 private:
  double t_max_;
  double step_;
  std::vector<double> slices_;  // I(j h), j >= 0
};

// Character for theta sums: principal mod f, or a -> (a/f)_4^power.
struct ThetaCharacter {
  bool principal = true;
  unsigned power = 1;  // 1..3 when not principal; 3 is the conjugate

  static ThetaCharacter parse(const std::string& spec);  // "principal", "quartic", "quartic2", "quartic3"
  std::string to_string() const;
};

struct ThetaSum {
  double w = 0.0;
  GaussianInteger modulus;
  ThetaCharacter chi;
  ComplexValue value;
  std::uint64_t truncation_norm = 0;  // largest norm(a) included
  std::uint64_t terms = 0;
  double tail_bound = 0.0;
  // E(chi)/w + N(f)^{1/2 + eps} and |value| divided by it.
  double eps = 0.1;
  double comparison = 0.0;
  double comparison_ratio = 0.0;
};

// theta(w, chi) = sum over primary a coprime to f of chi(a) exp(-2 pi N(a) w),
// truncated where exp(-2 pi T w) T < 1e-12 (or at truncation_override when
// non-zero). Requires 0 < w <= 1 and f not a unit.
ThetaSum theta_sum(double w, const GaussianInteger& f, const ThetaCharacter& chi,
                   std::uint64_t truncation_override = 0);

struct PoissonOptions {
  // Stop doubling the cutoff once successive tapered sums differ by less than
  // tail_tol * max(1, |rhs|).
  double tail_tol = 1e-6;
  double initial_t = 64.0;
  double max_t = 2048.0;
};

struct PoissonCheckReport {
  GaussianInteger n1;
  GaussianInteger n2;
  double M = 0.0;
  ComplexValue lhs;
  ComplexValue rhs;
  ComplexValue prefactor;
  GaussianInteger unit_sum;  // sum of conj(chi) over the four units
  double abs_err = 0.0;
  double rel_err = 0.0;
  std::uint64_t lhs_max_norm = 0;
  std::uint64_t lhs_terms = 0;
  double rhs_t_max = 0.0;
  std::uint64_t rhs_max_norm = 0;
  std::uint64_t rhs_terms = 0;
  double rhs_tail_bound = 0.0;
};

// Checks sum_{m in Z[i]} W(N(m)/M) chi(m) against its dual
//   chi(-2i) g(n1) conj(g(n2)) M / N(q) (n2/n1)_4 conj((n1/n2)_4) (-1/n2)_4
//     * sum_k W~(sqrt(N(k) M / N(q))) conj(chi(k)),
// chi(m) = (m/n1)_4 conj((m/n2)_4), q = n1 n2. n2 = 1 is allowed.
PoissonCheckReport poisson_identity_check(const GaussianInteger& n1, const GaussianInteger& n2, double M,
                                          const PoissonOptions& options = {});

}  // namespace qsieve
