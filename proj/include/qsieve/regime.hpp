#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsieve/exponent.hpp"

namespace qsieve {

// One row of the piecewise bound for the theorem-2 form: the estimate
// Q^{q_exp} M^{m_exp} holds for M^{lower} < Q <= M^{upper}.
struct RegimeRow {
  std::optional<Rational> lower;  // none for the first row
  std::optional<Rational> upper;  // none for the last row
  std::string label;
  Rational q_exp;
  Rational m_exp;
};

const std::vector<RegimeRow>& regime_table();

struct RegimeResult {
  double alpha = 0.0;  // log Q / log M
  bool boundary = false;
  std::string boundary_at;  // threshold hit, e.g. "4/7"
  std::string label;        // table row; empty on a boundary
  double bound = 0.0;       // Q^{q_exp} M^{m_exp} of that row
  // Independent route: the smallest of the four min-terms, each compared by
  // its dominant exponent (in units of log M).
  std::string argmin_term;
  std::string argmin_label;  // dominant piece of that term
  double min_exponent = 0.0;
  double table_exponent = 0.0;
  bool agrees = false;  // labels and exponents match; false on a boundary
};

// Q, M >= 2.
RegimeResult piecewise_regime(double Q, double M);
// Exact classification at Q = M^alpha, alpha > 0.
RegimeResult piecewise_regime_alpha(const Rational& alpha);

}  // namespace qsieve
