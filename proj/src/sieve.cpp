#include "qsieve/sieve.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "qsieve/characters.hpp"
#include "qsieve/errors.hpp"
#include "qsieve/factorization.hpp"
#include "qsieve/parallel.hpp"

namespace qsieve {
namespace {

constexpr std::int64_t kTheorem2Limit = 2000;

void require_positive(std::int64_t x, const char* name) {
  if (x < 1) throw InvalidArgument(std::string(name) + " must be >= 1, got " + std::to_string(x));
}

bool squarefree_int(std::int64_t m) {
  for (const auto& [p, e] : factor_rational(static_cast<std::uint64_t>(m))) {
    if (e > 1) return false;
  }
  return true;
}

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

void fill_spectral(SieveReport& r, const ComplexMatrix& t) {
  const SpectralNorm s = spectral_norm_sq(t);
  r.rows = static_cast<std::size_t>(t.rows());
  r.cols = static_cast<std::size_t>(t.cols());
  r.empirical_norm = s.value;
  r.method = s.method;
  r.power_norm = s.power_value;
  r.power_iterations = s.power_iterations;
  r.svd_norm = s.svd_value;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double parse_double(const std::string& field, std::size_t line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(v)) {
    throw InvalidArgument("coefficient file line " + std::to_string(line) + ": bad number '" + field + "'");
  }
  return v;
}

}  // namespace

QuarticSymbolValue CodedMatrix::at(std::size_t r, std::size_t c) const {
  const int k = codes[r * cols + c];
  return k < 0 ? QuarticSymbolValue::zero() : QuarticSymbolValue::root(k);
}

void CodedMatrix::set(std::size_t r, std::size_t c, QuarticSymbolValue v) {
  codes[r * cols + c] = static_cast<std::int8_t>(v.is_zero() ? -1 : v.exponent());
}

ComplexMatrix CodedMatrix::to_complex() const {
  static const std::complex<double> roots[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  ComplexMatrix t = ComplexMatrix::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const int k = codes[r * cols + c];
      if (k >= 0) t(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = roots[k];
    }
  }
  return t;
}

std::vector<GaussianInteger> squarefree_primary_dyadic(std::int64_t lo) {
  return enumerate_primary(Integer(lo), Integer(2 * lo), {.squarefree = true});
}

std::vector<std::int64_t> squarefree_dyadic(std::int64_t lo, bool odd_only) {
  std::vector<std::int64_t> out;
  for (std::int64_t m = lo + 1; m <= 2 * lo; ++m) {
    if (odd_only && m % 2 == 0) continue;
    if (squarefree_int(m)) out.push_back(m);
  }
  return out;
}

SymbolMatrix symbol_matrix(std::int64_t M, std::int64_t N, unsigned threads) {
  require_positive(M, "M");
  require_positive(N, "N");
  SymbolMatrix out;
  out.m = squarefree_primary_dyadic(M);
  out.n = squarefree_primary_dyadic(N);
  out.entries = CodedMatrix(out.m.size(), out.n.size());
  parallel_for(
      out.m.size(),
      [&](std::size_t r) {
        const SymbolTable chi(out.m[r]);
        for (std::size_t c = 0; c < out.n.size(); ++c) {
          const auto& n = out.n[c];
          out.entries.set(r, c, chi.at(static_cast<std::int64_t>(n.re()), static_cast<std::int64_t>(n.im())));
        }
      },
      threads);
  return out;
}

SieveReport empirical_B1(std::int64_t M, std::int64_t N, double eps, unsigned threads) {
  const SymbolMatrix t = symbol_matrix(M, N, threads);
  SieveReport r;
  r.kind = "theorem1";
  r.ranges = {{"M", M}, {"N", N}};
  fill_spectral(r, t.entries.to_complex());

  const double m = static_cast<double>(M), n = static_cast<double>(N);
  const double mixed = std::pow(m * n, 0.75);
  r.bound_terms = {{"M", m}, {"N", n}, {"(MN)^{3/4}", mixed}};
  r.selected_bound = "M+N+(MN)^{3/4}";
  r.bound = m + n + mixed;
  r.ratio = r.empirical_norm / r.bound;
  r.eps = eps;
  r.bound_eps = r.bound * std::pow(m * n, eps);
  r.ratio_eps = r.empirical_norm / r.bound_eps;
  r.initial_estimate = m + n * n;
  r.ratio_initial_estimate = r.empirical_norm / *r.initial_estimate;
  return r;
}

DualityReport duality_checks(std::int64_t M, std::int64_t N, unsigned threads) {
  DualityReport out;
  out.M = M;
  out.N = N;
  const ComplexMatrix t = symbol_matrix(M, N, threads).entries.to_complex();
  const ComplexMatrix s = symbol_matrix(N, M, threads).entries.to_complex();
  const SpectralNorm bt = spectral_norm_sq(t);
  const SpectralNorm bs = spectral_norm_sq(s);
  out.b_mn = bt.value;
  out.b_nm = bs.value;

  auto fail = [&](std::string msg) { out.failures.push_back(std::move(msg)); };
  if (out.b_mn > 2.0 * out.b_nm + 1e-6) {
    fail("B1(" + std::to_string(M) + "," + std::to_string(N) + ") = " + std::to_string(out.b_mn) + " > 2 B1(" +
         std::to_string(N) + "," + std::to_string(M) + ") = " + std::to_string(2.0 * out.b_nm));
  }
  if (out.b_nm > 2.0 * out.b_mn + 1e-6) {
    fail("B1(" + std::to_string(N) + "," + std::to_string(M) + ") = " + std::to_string(out.b_nm) + " > 2 B1(" +
         std::to_string(M) + "," + std::to_string(N) + ") = " + std::to_string(2.0 * out.b_mn));
  }

  // Independent iterations on T* T and T T*; run tighter than the reported
  // tolerance so the comparison measures the identity, not the stopping rule.
  out.sigma_t = power_iteration_sigma_sq(t, 1e-13).sigma_max_sq;
  out.sigma_t_adjoint = power_iteration_sigma_sq(t.adjoint(), 1e-13).sigma_max_sq;
  out.adjoint_rel_diff = rel_diff(out.sigma_t, out.sigma_t_adjoint);
  if (out.adjoint_rel_diff > 1e-9) {
    fail("sigma_max(T)^2 = " + std::to_string(out.sigma_t) + " but sigma_max(T*)^2 = " +
         std::to_string(out.sigma_t_adjoint));
  }

  for (const SpectralNorm* sn : {&bt, &bs}) {
    if (!sn->svd_value) continue;
    const double d = rel_diff(sn->power_value, *sn->svd_value);
    out.svd_rel_diff = std::max(out.svd_rel_diff.value_or(0.0), d);
    if (d > 1e-7) {
      fail("power iteration " + std::to_string(sn->power_value) + " vs dense SVD " + std::to_string(*sn->svd_value));
    }
  }
  out.ok = out.failures.empty();
  return out;
}

CharacterMatrix character_matrix(std::int64_t Q, std::int64_t M, unsigned threads) {
  require_positive(Q, "Q");
  require_positive(M, "M");
  if (Q > kTheorem2Limit || M > kTheorem2Limit) {
    throw InvalidArgument("theorem-2 harness is limited to Q, M <= 2000");
  }
  CharacterMatrix out;
  out.m = squarefree_dyadic(M);

  const std::size_t span = static_cast<std::size_t>(Q);
  struct Block {
    bool skipped = false;
    std::vector<std::vector<QuarticSymbolValue>> rows;
  };
  std::vector<Block> blocks(span);
  parallel_for(
      span,
      [&](std::size_t k) {
        const std::uint64_t q = static_cast<std::uint64_t>(Q) + 1 + k;
        try {
          const CharacterList list = list_order4_primitive(q);
          for (const auto& chi : list.characters) {
            std::vector<QuarticSymbolValue> row;
            row.reserve(out.m.size());
            for (std::int64_t m : out.m) row.push_back(chi.value4(m));
            blocks[k].rows.push_back(std::move(row));
          }
        } catch (const UnsupportedModulus&) {
          blocks[k].skipped = true;
        }
      },
      threads);

  std::size_t total = 0;
  for (const auto& b : blocks) total += b.rows.size();
  out.entries = CodedMatrix(total, out.m.size());
  std::size_t r = 0;
  for (std::size_t k = 0; k < span; ++k) {
    const std::uint64_t q = static_cast<std::uint64_t>(Q) + 1 + k;
    if (blocks[k].skipped) out.skipped_conductors.push_back(q);
    for (std::size_t j = 0; j < blocks[k].rows.size(); ++j, ++r) {
      out.rows.emplace_back(q, j);
      for (std::size_t c = 0; c < out.m.size(); ++c) out.entries.set(r, c, blocks[k].rows[j][c]);
    }
  }
  return out;
}

SieveReport empirical_theorem2(std::int64_t Q, std::int64_t M, double eps, unsigned threads) {
  const CharacterMatrix t = character_matrix(Q, M, threads);
  SieveReport r;
  r.kind = "theorem2";
  r.ranges = {{"Q", Q}, {"M", M}};
  fill_spectral(r, t.entries.to_complex());
  r.skipped_conductors = t.skipped_conductors;

  const double q = static_cast<double>(Q), m = static_cast<double>(M);
  const double terms[4] = {
      std::pow(q, 1.75) + m,
      std::pow(q, 11.0 / 8.0) + std::sqrt(q) * m,
      std::pow(q, 1.25) + std::pow(q, 2.0 / 3.0) * m,
      q + std::sqrt(q) * m + std::pow(m, 17.0 / 7.0),
  };
  r.bound_terms = {{"Q^{7/4}+M", terms[0]},
                   {"Q^{11/8}+Q^{1/2}M", terms[1]},
                   {"Q^{5/4}+Q^{2/3}M", terms[2]},
                   {"Q+Q^{1/2}M+M^{17/7}", terms[3]}};
  const auto best = std::min_element(std::begin(terms), std::end(terms)) - std::begin(terms);
  r.selected_bound = "min";
  r.bound = terms[best];
  r.bound_terms.emplace_back("min", r.bound);
  r.ratio = r.empirical_norm / r.bound;
  r.eps = eps;
  r.bound_eps = r.bound * std::pow(q * m, eps);
  r.ratio_eps = r.empirical_norm / r.bound_eps;
  return r;
}

double CoefficientVector::norm_sq() const {
  double s = 0.0;
  for (const auto& [idx, v] : entries) s += std::norm(v);
  return s;
}

CoefficientVector parse_coefficients(std::istream& in) {
  CoefficientVector out;
  std::map<GaussianInteger, std::size_t, CanonicalLess> seen;
  std::string raw;
  std::size_t line = 0;
  bool header = false;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(raw);
    if (text.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(text);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(trim(f));
    if (!header) {
      if (fields != std::vector<std::string>{"index", "re", "im"}) {
        throw InvalidArgument("coefficient file must start with header 'index,re,im'");
      }
      header = true;
      continue;
    }
    if (fields.size() != 3) {
      throw InvalidArgument("coefficient file line " + std::to_string(line) + ": expected 3 fields");
    }
    GaussianInteger idx = GaussianInteger::parse(fields[0]);
    if (!seen.emplace(idx, line).second) {
      throw InvalidArgument("coefficient file line " + std::to_string(line) + ": duplicate index " + fields[0]);
    }
    out.entries.emplace_back(std::move(idx), ComplexValue(parse_double(fields[1], line), parse_double(fields[2], line)));
  }
  if (!header) throw InvalidArgument("coefficient file is empty");
  return out;
}

CoefficientVector read_coefficients(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open coefficient file '" + path + "'");
  return parse_coefficients(in);
}

ComplexVector coefficients_on(const CoefficientVector& a, const std::vector<GaussianInteger>& columns) {
  std::map<GaussianInteger, std::size_t, CanonicalLess> pos;
  for (std::size_t k = 0; k < columns.size(); ++k) pos.emplace(columns[k], k);
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(columns.size()));
  for (const auto& [idx, value] : a.entries) {
    const auto it = pos.find(idx);
    if (it == pos.end()) throw InvalidArgument("coefficient index " + idx.to_string() + " is outside the column range");
    v(static_cast<Eigen::Index>(it->second)) = value;
  }
  return v;
}

ComplexVector coefficients_on(const CoefficientVector& a, const std::vector<std::int64_t>& columns) {
  std::vector<GaussianInteger> g;
  g.reserve(columns.size());
  for (std::int64_t m : columns) g.emplace_back(static_cast<long long>(m), 0LL);
  return coefficients_on(a, g);
}

QuadraticFormCheck quadratic_form_check(std::int64_t M, std::int64_t N, const ComplexVector& a) {
  const SymbolMatrix sm = symbol_matrix(M, N);
  if (static_cast<std::size_t>(a.size()) != sm.n.size()) {
    throw InvalidArgument("coefficient vector has " + std::to_string(a.size()) + " entries, expected " +
                          std::to_string(sm.n.size()));
  }
  QuadraticFormCheck out;
  for (const auto& m : sm.m) {
    const QuarticSymbolEvaluator symbol(m);
    ComplexValue s{0.0, 0.0};
    for (std::size_t c = 0; c < sm.n.size(); ++c) s += a(static_cast<Eigen::Index>(c)) * symbol(sm.n[c]).to_complex();
    out.direct += std::norm(s);
  }
  const ComplexMatrix t = sm.entries.to_complex();
  out.matrix = (t * a).squaredNorm();
  out.norm_sq = a.squaredNorm();
  out.empirical_norm = spectral_norm_sq(t).value;
  out.rel_diff = rel_diff(out.direct, out.matrix);
  out.within_norm = out.direct <= out.empirical_norm * out.norm_sq * (1.0 + 1e-7);
  return out;
}

std::vector<std::int64_t> transformation_columns(std::int64_t M) {
  require_positive(M, "M");
  return squarefree_dyadic(M, true);
}

TransformationCheck transformation_check(std::uint64_t q, std::int64_t M, const ComplexVector& a) {
  if (q % 2 == 0) throw InvalidArgument("transformation check needs odd q, got " + std::to_string(q));
  const auto cols = transformation_columns(M);
  if (static_cast<std::size_t>(a.size()) != cols.size()) {
    throw InvalidArgument("coefficient vector has " + std::to_string(a.size()) + " entries, expected " +
                          std::to_string(cols.size()));
  }
  TransformationCheck out;
  out.q = q;
  out.M = M;

  auto form = [&](auto&& chi) {
    ComplexValue s{0.0, 0.0};
    for (std::size_t c = 0; c < cols.size(); ++c) s += a(static_cast<Eigen::Index>(c)) * chi(cols[c]).to_complex();
    return std::norm(s);
  };

  const CharacterList oracle = list_order4_primitive(q);
  out.characters = oracle.characters.size();
  for (const auto& chi : oracle.characters) out.dirichlet_side += form([&](std::int64_t m) { return chi.value4(m); });

  const auto family = enumerate_quartic_family(q);
  out.generators = family.size();
  for (const auto& chi : family) out.primary_side += form(chi);

  const EnumerationConstraints both{.squarefree = true, .no_rational_prime_divisor = true, .allow_negated = true};
  double twice = 0.0;
  for (const auto& n : enumerate_primary(Integer(q - 1), Integer(q), both)) {
    // n and -n generate the same ideal and hence the same symbol.
    const QuarticCharacter chi(is_primary(n) ? n : -n);
    twice += form(chi);
  }
  out.half_side = twice / 2.0;

  out.rel_err_primary = rel_diff(out.dirichlet_side, out.primary_side);
  out.rel_err_half = rel_diff(out.dirichlet_side, out.half_side);
  return out;
}

}  // namespace qsieve
