#include "qsieve/analysis.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "qsieve/errors.hpp"
#include "qsieve/factorization.hpp"

namespace qsieve {
namespace {

using boost::math::quadrature::gauss_kronrod;
constexpr double kPi = std::numbers::pi;
constexpr double kOuterRadius2 = 2.5;
constexpr double kInnerRadius2 = 0.5;

QuadratureResult slice_with_error(double y) {
  const double y2 = y * y;
  if (y2 >= kOuterRadius2) return {};
  const double hi = std::sqrt(kOuterRadius2 - y2);
  const double lo = y2 < kInnerRadius2 ? std::sqrt(kInnerRadius2 - y2) : 0.0;
  double err = 0.0;
  const double half = gauss_kronrod<double, 31>::integrate([y2](double x) { return weight_W(x * x + y2); }, lo, hi,
                                                           10, 1e-12, &err);
  return {2.0 * half, 2.0 * err};
}

// Smooth step: 1 on [0, 1/2], 0 on [1, inf), C-infinity in between.
double taper(double s) {
  if (s <= 0.5) return 1.0;
  if (s >= 1.0) return 0.0;
  const double a = std::exp(-1.0 / (1.0 - s));
  const double b = std::exp(-1.0 / (s - 0.5));
  return a / (a + b);
}

ComplexValue to_complex(const GaussianInteger& z) {
  return {static_cast<double>(z.re()), static_cast<double>(z.im())};
}

}  // namespace

double weight_W(double x) {
  if (x <= 0.5 || x >= 2.5) return 0.0;
  return std::exp(-1.0 / ((2.0 * x - 1.0) * (5.0 - 2.0 * x)));
}

double weight_W_slice(double y) { return slice_with_error(y).value; }

QuadratureResult weight_W_tilde_quadrature(double t, double abs_tol) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidArgument("W~ requires a finite t >= 0");
  const double y_max = std::sqrt(kOuterRadius2);
  // Panels no wider than a quarter period of cos(2 pi t y).
  const auto panels = static_cast<int>(std::max(4.0, std::ceil(4.0 * t * y_max)));
  const double width = y_max / panels;
  QuadratureResult total;
  for (int k = 0; k < panels; ++k) {
    double err = 0.0;
    double slice_err = 0.0;
    const double v = gauss_kronrod<double, 31>::integrate(
        [&](double y) {
          const QuadratureResult s = slice_with_error(y);
          slice_err = std::max(slice_err, s.error_estimate);
          return std::cos(2.0 * kPi * t * y) * s.value;
        },
        k * width, (k + 1) * width, 8, 1e-11, &err);
    total.value += v;
    total.error_estimate += err + slice_err * width;
  }
  // Even in y.
  total.value *= 2.0;
  total.error_estimate *= 2.0;
  if (total.error_estimate > abs_tol) {
    throw ComputationError("W~(" + std::to_string(t) + ") quadrature did not converge: error estimate " +
                           std::to_string(total.error_estimate));
  }
  return total;
}

double weight_W_tilde(double t) { return weight_W_tilde_quadrature(t).value; }

WTildeTable::WTildeTable(double t_max, double guard) : t_max_(t_max), step_(1.0 / (t_max + guard)) {
  if (!(t_max >= 0.0) || !(guard > 0.0)) throw InvalidArgument("W~ table needs t_max >= 0 and guard > 0");
  const double y_max = std::sqrt(kOuterRadius2);
  for (std::size_t j = 0; j * step_ < y_max; ++j) slices_.push_back(weight_W_slice(j * step_));
}

double WTildeTable::operator()(double t) const {
  if (t < 0.0 || t > t_max_) throw InvalidArgument("W~ table queried outside [0, t_max]");
  // h [I(0) + 2 sum_{j>=1} I(jh) cos(j theta)], with cos(j theta) from a
  // rotating phasor re-anchored every 64 steps.
  const double theta = 2.0 * kPi * t * step_;
  const std::complex<double> rotation = std::polar(1.0, theta);
  std::complex<double> phasor{1.0, 0.0};
  double sum = slices_.empty() ? 0.0 : slices_[0];
  for (std::size_t j = 1; j < slices_.size(); ++j) {
    phasor = (j % 64 == 0) ? std::polar(1.0, theta * static_cast<double>(j)) : phasor * rotation;
    sum += 2.0 * slices_[j] * phasor.real();
  }
  return step_ * sum;
}

ThetaCharacter ThetaCharacter::parse(const std::string& spec) {
  if (spec == "principal") return {true, 1};
  if (spec == "quartic" || spec == "quartic1") return {false, 1};
  if (spec == "quartic2") return {false, 2};
  if (spec == "quartic3") return {false, 3};
  throw InvalidArgument("unknown character spec '" + spec + "' (principal|quartic|quartic2|quartic3)");
}

std::string ThetaCharacter::to_string() const {
  if (principal) return "principal";
  return power == 1 ? "quartic" : "quartic" + std::to_string(power);
}

ThetaSum theta_sum(double w, const GaussianInteger& f, const ThetaCharacter& chi, std::uint64_t truncation_override) {
  if (!(w > 0.0 && w <= 1.0)) throw InvalidArgument("theta sum requires 0 < w <= 1");
  if (f.is_zero() || f.is_unit()) throw InvalidArgument("theta sum requires a non-unit modulus, got " + f.to_string());
  if (!chi.principal && (chi.power < 1 || chi.power > 3)) throw InvalidArgument("quartic power must be 1, 2 or 3");

  ThetaSum out;
  out.w = w;
  out.modulus = f;
  out.chi = chi;

  std::uint64_t truncation = truncation_override;
  if (truncation == 0) {
    truncation = 1;
    while (std::exp(-2.0 * kPi * static_cast<double>(truncation) * w) * static_cast<double>(truncation) >= 1e-12) {
      ++truncation;
    }
  }
  out.truncation_norm = truncation;

  // Character values on a residue system mod f.
  const ResidueSystem residues(f);
  std::vector<QuarticSymbolValue> values(residues.size());
  if (chi.principal) {
    for (std::uint64_t k = 0; k < residues.size(); ++k) {
      const GaussianInteger r = residues.rep(k);
      values[k] = (!r.is_zero() && gcd(r, f).is_unit()) ? QuarticSymbolValue::root(0) : QuarticSymbolValue::zero();
    }
  } else {
    const QuarticSymbolEvaluator symbol(f);
    for (std::uint64_t k = 0; k < residues.size(); ++k) values[k] = symbol(residues.rep(k)).pow(chi.power);
  }

  const auto radius = static_cast<std::int64_t>(std::sqrt(static_cast<double>(truncation))) + 1;
  for (std::int64_t a = -radius; a <= radius; ++a) {
    for (std::int64_t b = -radius; b <= radius; ++b) {
      const auto n = static_cast<std::uint64_t>(a * a + b * b);
      if (n == 0 || n > truncation) continue;
      if (!is_primary(GaussianInteger{a, b})) continue;
      const QuarticSymbolValue v = values[residues.index_of(a, b)];
      if (v.is_zero()) continue;
      out.value += v.to_complex() * std::exp(-2.0 * kPi * static_cast<double>(n) * w);
      ++out.terms;
    }
  }

  // Dyadic shells beyond T: at most pi (sqrt(X) + 1)^2 lattice points of norm <= X.
  double tail = 0.0;
  for (double lo = static_cast<double>(truncation);; lo *= 2.0) {
    const double count = kPi * std::pow(std::sqrt(2.0 * lo) + 1.0, 2);
    const double term = count * std::exp(-2.0 * kPi * lo * w);
    tail += term;
    if (term < 1e-18 * std::max(tail, 1e-300) || term == 0.0) break;
  }
  out.tail_bound = tail;

  const double principal_flag = chi.principal ? 1.0 : 0.0;
  out.comparison = principal_flag / w + std::pow(static_cast<double>(f.norm()), 0.5 + out.eps);
  out.comparison_ratio = std::abs(out.value) / out.comparison;
  return out;
}

PoissonCheckReport poisson_identity_check(const GaussianInteger& n1, const GaussianInteger& n2, double M,
                                          const PoissonOptions& options) {
  require_primary_modulus(n1);
  require_primary_modulus(n2);
  if (n1.is_unit()) throw InvalidArgument("poisson check requires n1 to be a non-unit");
  if (!is_squarefree(n1) || !is_squarefree(n2)) throw InvalidArgument("poisson check requires square-free n1, n2");
  if (!gcd(n1, n2).is_unit()) throw InvalidArgument("poisson check requires coprime n1, n2");
  if (!(M > 0.0) || !std::isfinite(M)) throw InvalidArgument("poisson check requires M > 0");

  PoissonCheckReport report;
  report.n1 = n1;
  report.n2 = n2;
  report.M = M;

  const SymbolTable chi1(n1);
  const SymbolTable chi2(n2);
  auto chi = [&](std::int64_t a, std::int64_t b) { return chi1.at(a, b) * chi2.at(a, b).conj(); };
  const double norm_q = static_cast<double>(n1.norm() * n2.norm());

  // W has support (1/2, 5/2): the left side is a finite sum.
  const auto lhs_radius = static_cast<std::int64_t>(std::sqrt(2.5 * M)) + 1;
  for (std::int64_t a = -lhs_radius; a <= lhs_radius; ++a) {
    for (std::int64_t b = -lhs_radius; b <= lhs_radius; ++b) {
      const double w = weight_W(static_cast<double>(a * a + b * b) / M);
      if (w == 0.0) continue;
      report.lhs += w * chi(a, b).to_complex();
      ++report.lhs_terms;
      report.lhs_max_norm = std::max<std::uint64_t>(report.lhs_max_norm, static_cast<std::uint64_t>(a * a + b * b));
    }
  }

  const ComplexValue g1 = gauss_sum(GaussianInteger{1}, n1);
  const ComplexValue g2 = n2.is_unit() ? ComplexValue{1.0, 0.0} : gauss_sum(GaussianInteger{1}, n2);
  const QuarticSymbolValue twist = chi(0, -2) * quartic_symbol(n2, n1) * quartic_symbol(n1, n2).conj() *
                                   quartic_symbol(GaussianInteger{-1}, n2);
  report.prefactor = twist.to_complex() * g1 * std::conj(g2) * (M / norm_q);

  // Nonzero k = u k' with k' in {re >= 1, im >= 0}; conj(chi) is multiplicative,
  // so the dual sum factors through the unit sum.
  GaussianInteger unit_sum{0};
  for (int u = 0; u < 4; ++u) {
    const GaussianInteger unit = GaussianInteger::unit(u);
    const QuarticSymbolValue v = chi(static_cast<std::int64_t>(unit.re()), static_cast<std::int64_t>(unit.im())).conj();
    unit_sum += GaussianInteger::unit(v.exponent());
  }
  report.unit_sum = unit_sum;
  const ComplexValue unit_factor = to_complex(unit_sum);

  // Dual sum with a smooth taper at t_cut; its value is compared at t_cut and
  // 2 t_cut, and the difference is the reported tail estimate.
  auto dual_sum = [&](double t_cut, std::uint64_t& terms, std::uint64_t& max_norm) {
    const WTildeTable wt(t_cut);
    const double k_max = t_cut * t_cut * norm_q / M;
    const auto max_norm_k = static_cast<std::uint64_t>(k_max);
    std::vector<ComplexValue> shells(max_norm_k + 1);
    const auto radius = static_cast<std::int64_t>(std::sqrt(k_max)) + 1;
    terms = 0;
    for (std::int64_t a = 1; a <= radius; ++a) {
      for (std::int64_t b = 0; b <= radius; ++b) {
        const auto n = static_cast<std::uint64_t>(a * a + b * b);
        if (n > max_norm_k) break;
        const QuarticSymbolValue v = chi(a, b).conj();
        if (v.is_zero()) continue;
        shells[n] += v.to_complex();
        ++terms;
      }
    }
    ComplexValue sum{0.0, 0.0};
    for (std::uint64_t n = 1; n <= max_norm_k; ++n) {
      if (shells[n] == ComplexValue{0.0, 0.0}) continue;
      const double t = std::sqrt(static_cast<double>(n) * M / norm_q);
      sum += wt(t) * taper(t / t_cut) * shells[n];
    }
    max_norm = max_norm_k;
    return sum * unit_factor * report.prefactor;
  };

  if (unit_sum.is_zero()) {
    report.rhs = {0.0, 0.0};
  } else {
    double t_cut = options.initial_t;
    std::uint64_t terms = 0, max_norm = 0;
    ComplexValue previous = dual_sum(t_cut, terms, max_norm);
    while (true) {
      if (2.0 * t_cut > options.max_t) {
        throw ComputationError("Poisson dual sum did not converge by t = " + std::to_string(t_cut) +
                               "; last change " + std::to_string(report.rhs_tail_bound));
      }
      const ComplexValue next = dual_sum(2.0 * t_cut, terms, max_norm);
      report.rhs_tail_bound = std::abs(next - previous);
      t_cut *= 2.0;
      previous = next;
      if (report.rhs_tail_bound <= options.tail_tol * std::max(1.0, std::abs(next))) break;
    }
    report.rhs = previous;
    report.rhs_t_max = t_cut;
    report.rhs_terms = terms;
    report.rhs_max_norm = max_norm;
  }

  report.abs_err = std::abs(report.lhs - report.rhs);
  report.rel_err = report.abs_err / std::max({std::abs(report.lhs), std::abs(report.rhs), 1.0});
  return report;
}

}  // namespace qsieve
