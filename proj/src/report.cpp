#include "qsieve/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qsieve/errors.hpp"

namespace qsieve {
namespace {

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

void dump(const Json& j, std::ostringstream& os, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close(2 * depth, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) os << ",\n";
        first = false;
        os << pad << Json(key).dump() << ": ";
        dump(value, os, depth + 1);
      }
      os << "\n" << close << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k) os << ",\n";
        os << pad;
        dump(j[k], os, depth + 1);
      }
      os << "\n" << close << "]";
      return;
    }
    case Json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << j.dump();
  }
}

Json optional_number(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

std::string csv_cell(double x) { return std::isfinite(x) ? format_double(x) : ""; }

}  // namespace

Json complex_json(const ComplexValue& z) {
  Json j;
  j["re"] = z.real();
  j["im"] = z.imag();
  j["abs2"] = std::norm(z);
  return j;
}

Json to_json(const SieveReport& r) {
  Json j;
  j["kind"] = r.kind;
  Json ranges = Json::object();
  for (const auto& [name, v] : r.ranges) ranges[name] = v;
  j["ranges"] = ranges;
  j["rows"] = r.rows;
  j["cols"] = r.cols;
  j["empirical_norm"] = r.empirical_norm;
  j["method"] = r.method;
  j["power_norm"] = r.power_norm;
  j["power_iterations"] = r.power_iterations;
  j["svd_norm"] = optional_number(r.svd_norm);
  Json terms = Json::object();
  for (const auto& [name, v] : r.bound_terms) terms[name] = v;
  j["bound_terms"] = terms;
  j["selected_bound"] = r.selected_bound;
  j["bound"] = r.bound;
  j["ratio"] = r.ratio;
  j["eps"] = r.eps;
  j["bound_eps"] = r.bound_eps;
  j["ratio_eps"] = r.ratio_eps;
  if (r.initial_estimate) {
    j["initial_estimate"] = *r.initial_estimate;
    j["ratio_initial_estimate"] = optional_number(r.ratio_initial_estimate);
  }
  if (r.kind == "theorem2") j["skipped_conductors"] = r.skipped_conductors;
  if (r.quadratic_form) j["quadratic_form"] = *r.quadratic_form;
  return j;
}

Json to_json(const DualityReport& r) {
  Json j;
  j["M"] = r.M;
  j["N"] = r.N;
  j["B1_MN"] = r.b_mn;
  j["B1_NM"] = r.b_nm;
  j["sigma_T"] = r.sigma_t;
  j["sigma_T_adjoint"] = r.sigma_t_adjoint;
  j["adjoint_rel_diff"] = r.adjoint_rel_diff;
  j["svd_rel_diff"] = optional_number(r.svd_rel_diff);
  j["ok"] = r.ok;
  j["failures"] = r.failures;
  return j;
}

Json to_json(const TransformationCheck& r) {
  Json j;
  j["q"] = r.q;
  j["M"] = r.M;
  j["characters"] = r.characters;
  j["generators"] = r.generators;
  j["dirichlet_side"] = r.dirichlet_side;
  j["primary_side"] = r.primary_side;
  j["half_side"] = r.half_side;
  j["rel_err_primary"] = r.rel_err_primary;
  j["rel_err_half"] = r.rel_err_half;
  return j;
}

Json to_json(const QuadraticFormCheck& r) {
  Json j;
  j["direct"] = r.direct;
  j["matrix"] = r.matrix;
  j["norm_sq"] = r.norm_sq;
  j["empirical_norm"] = r.empirical_norm;
  j["rel_diff"] = r.rel_diff;
  j["within_norm"] = r.within_norm;
  return j;
}

Json to_json(const PoissonCheckReport& r) {
  Json j;
  j["n1"] = r.n1.to_string();
  j["n2"] = r.n2.to_string();
  j["M"] = r.M;
  j["lhs"] = complex_json(r.lhs);
  j["rhs"] = complex_json(r.rhs);
  j["prefactor"] = complex_json(r.prefactor);
  j["unit_sum"] = r.unit_sum.to_string();
  j["abs_err"] = r.abs_err;
  j["rel_err"] = r.rel_err;
  j["lhs_max_norm"] = r.lhs_max_norm;
  j["lhs_terms"] = r.lhs_terms;
  j["rhs_t_max"] = r.rhs_t_max;
  j["rhs_max_norm"] = r.rhs_max_norm;
  j["rhs_terms"] = r.rhs_terms;
  j["rhs_tail_bound"] = r.rhs_tail_bound;
  return j;
}

Json to_json(const ThetaSum& r) {
  Json j;
  j["w"] = r.w;
  j["modulus"] = r.modulus.to_string();
  j["character"] = r.chi.to_string();
  j["value"] = complex_json(r.value);
  j["truncation_norm"] = r.truncation_norm;
  j["terms"] = r.terms;
  j["tail_bound"] = r.tail_bound;
  j["eps"] = r.eps;
  j["comparison"] = r.comparison;
  j["comparison_ratio"] = r.comparison_ratio;
  return j;
}

Json to_json(const MatchReport& r) {
  Json j;
  j["q"] = r.q;
  j["family_count"] = r.family_count;
  j["oracle_count"] = r.oracle_count;
  Json matches = Json::array();
  for (const auto& [gen, idx] : r.matches) {
    Json m;
    m["generator"] = gen.to_string();
    m["oracle_index"] = idx;
    matches.push_back(m);
  }
  j["matches"] = matches;
  j["mismatches"] = r.mismatches;
  j["ok"] = r.ok;
  return j;
}

Json to_json(const ExponentTrace& r) {
  Json j;
  Json hist = Json::array();
  for (const auto& x : r.xi_history) hist.push_back(to_string(x));
  j["xi_history"] = hist;
  j["final"] = to_string(r.xi_history.back());
  j["final_value"] = r.xi_history.back().convert_to<double>();
  return j;
}

Json to_json(const RegimeResult& r) {
  Json j;
  j["alpha"] = r.alpha;
  j["boundary"] = r.boundary;
  if (r.boundary) {
    j["boundary_at"] = r.boundary_at;
    return j;
  }
  j["label"] = r.label;
  j["bound"] = r.bound;
  j["argmin_term"] = r.argmin_term;
  j["argmin_label"] = r.argmin_label;
  j["table_exponent"] = r.table_exponent;
  j["min_exponent"] = r.min_exponent;
  j["agrees"] = r.agrees;
  return j;
}

std::string dump_json(const Json& j) {
  std::ostringstream os;
  dump(j, os, 0);
  os << "\n";
  return os.str();
}

std::vector<std::string> sieve_csv_header(const SieveReport& p) {
  std::vector<std::string> h{"kind"};
  for (const auto& [name, v] : p.ranges) h.push_back(name);
  for (const char* c : {"rows", "cols", "empirical_norm", "method"}) h.emplace_back(c);
  for (const auto& [name, v] : p.bound_terms) h.push_back("bound_" + name);
  for (const char* c : {"bound", "ratio", "eps", "bound_eps", "ratio_eps"}) h.emplace_back(c);
  if (p.kind == "theorem1") {
    h.emplace_back("initial_estimate");
    h.emplace_back("ratio_initial_estimate");
  } else {
    h.emplace_back("skipped_conductors");
  }
  return h;
}

std::string sieve_csv(const std::vector<SieveReport>& reports) {
  if (reports.empty()) return {};
  const auto header = sieve_csv_header(reports.front());
  std::ostringstream os;
  for (std::size_t k = 0; k < header.size(); ++k) os << (k ? "," : "") << header[k];
  os << "\n";
  for (const auto& r : reports) {
    if (sieve_csv_header(r) != header) throw InvalidArgument("CSV reports must share one layout");
    std::vector<std::string> row{r.kind};
    for (const auto& [name, v] : r.ranges) row.push_back(std::to_string(v));
    row.push_back(std::to_string(r.rows));
    row.push_back(std::to_string(r.cols));
    row.push_back(csv_cell(r.empirical_norm));
    row.push_back(r.method);
    for (const auto& [name, v] : r.bound_terms) row.push_back(csv_cell(v));
    for (double v : {r.bound, r.ratio, r.eps, r.bound_eps, r.ratio_eps}) row.push_back(csv_cell(v));
    if (r.kind == "theorem1") {
      row.push_back(csv_cell(r.initial_estimate.value_or(NAN)));
      row.push_back(csv_cell(r.ratio_initial_estimate.value_or(NAN)));
    } else {
      row.push_back(std::to_string(r.skipped_conductors.size()));
    }
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << row[k];
    os << "\n";
  }
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ComputationError("cannot open '" + path + "' for writing");
  out << content;
  out.close();
  if (!out) throw ComputationError("failed writing '" + path + "'");
}

std::string default_output_dir() {
  const char* env = std::getenv("QUARTIC_SIEVE_OUT");
  return env && *env ? std::string(env) : std::string(".");
}

}  // namespace qsieve
