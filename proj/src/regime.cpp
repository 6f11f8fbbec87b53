#include "qsieve/regime.hpp"

#include <cmath>

#include "qsieve/errors.hpp"

namespace qsieve {
namespace {

struct Piece {
  const char* label;
  Rational q_exp;
  Rational m_exp;
};

struct Term {
  const char* name;
  std::vector<Piece> pieces;
};

const std::vector<Term>& min_terms() {
  static const std::vector<Term> terms = {
      {"Q^{7/4}+M", {{"Q^{7/4}", Rational(7, 4), 0}, {"M", 0, 1}}},
      {"Q^{11/8}+Q^{1/2}M", {{"Q^{11/8}", Rational(11, 8), 0}, {"Q^{1/2}M", Rational(1, 2), 1}}},
      {"Q^{5/4}+Q^{2/3}M", {{"Q^{5/4}", Rational(5, 4), 0}, {"Q^{2/3}M", Rational(2, 3), 1}}},
      {"Q+Q^{1/2}M+M^{17/7}", {{"Q", 1, 0}, {"Q^{1/2}M", Rational(1, 2), 1}, {"M^{17/7}", 0, Rational(17, 7)}}},
  };
  return terms;
}

double as_double(const Rational& x) { return x.convert_to<double>(); }
double as_double(double x) { return x; }

// Shared by the exact and floating-point entry points; tol is the slack for
// threshold equality (zero for exact input).
template <class T>
RegimeResult classify(const T& alpha, const T& tol) {
  RegimeResult out;
  out.alpha = as_double(alpha);
  auto exponent = [&](const Rational& qe, const Rational& me) { return T(qe) * alpha + T(me); };
  auto close = [&](const T& a, const T& b) { return a - b <= tol && b - a <= tol; };

  const auto& table = regime_table();
  const RegimeRow* row = nullptr;
  for (const auto& r : table) {
    if (r.upper && close(alpha, T(*r.upper))) {
      out.boundary = true;
      out.boundary_at = to_string(*r.upper);
      return out;
    }
    if (!r.upper || alpha < T(*r.upper)) {
      row = &r;
      break;
    }
  }
  out.label = row->label;
  const T table_exp = exponent(row->q_exp, row->m_exp);
  out.table_exponent = as_double(table_exp);

  bool first = true;
  T best{};
  for (const auto& term : min_terms()) {
    const Piece* dominant = &term.pieces.front();
    T top = exponent(dominant->q_exp, dominant->m_exp);
    for (const auto& p : term.pieces) {
      const T e = exponent(p.q_exp, p.m_exp);
      if (e > top) top = e, dominant = &p;
    }
    if (first || top < best) {
      first = false;
      best = top;
      out.argmin_term = term.name;
      out.argmin_label = dominant->label;
    }
  }
  out.min_exponent = as_double(best);
  out.agrees = out.argmin_label == out.label && close(best, table_exp);
  return out;
}

}  // namespace

const std::vector<RegimeRow>& regime_table() {
  static const std::vector<RegimeRow> rows = [] {
    const Rational cuts[] = {Rational(4, 7),  Rational(4, 5),   Rational(8, 7), Rational(24, 17),
                             Rational(12, 7), Rational(68, 35), Rational(17, 7)};
    struct Bound {
      const char* label;
      Rational q, m;
    };
    const Bound bounds[] = {{"M", 0, 1},
                            {"Q^{7/4}", Rational(7, 4), 0},
                            {"Q^{1/2}M", Rational(1, 2), 1},
                            {"Q^{11/8}", Rational(11, 8), 0},
                            {"Q^{2/3}M", Rational(2, 3), 1},
                            {"Q^{5/4}", Rational(5, 4), 0},
                            {"M^{17/7}", 0, Rational(17, 7)},
                            {"Q", 1, 0}};
    std::vector<RegimeRow> out;
    for (std::size_t k = 0; k < 8; ++k) {
      RegimeRow r;
      if (k > 0) r.lower = cuts[k - 1];
      if (k < 7) r.upper = cuts[k];
      r.label = bounds[k].label;
      r.q_exp = bounds[k].q;
      r.m_exp = bounds[k].m;
      out.push_back(std::move(r));
    }
    return out;
  }();
  return rows;
}

RegimeResult piecewise_regime(double Q, double M) {
  if (!(Q >= 2.0) || !(M >= 2.0) || !std::isfinite(Q) || !std::isfinite(M)) {
    throw InvalidArgument("regime needs Q, M >= 2");
  }
  const double alpha = std::log(Q) / std::log(M);
  RegimeResult out = classify<double>(alpha, 1e-12 * std::max(1.0, alpha));
  if (!out.boundary) {
    const auto& rows = regime_table();
    for (const auto& r : rows) {
      if (r.label == out.label) {
        out.bound = std::pow(Q, as_double(r.q_exp)) * std::pow(M, as_double(r.m_exp));
        break;
      }
    }
  }
  return out;
}

RegimeResult piecewise_regime_alpha(const Rational& alpha) {
  if (alpha <= 0) throw InvalidArgument("alpha must be positive, got " + to_string(alpha));
  return classify<Rational>(alpha, Rational(0));
}

}  // namespace qsieve
