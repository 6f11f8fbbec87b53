// quartic-sieve: command-line front end. Exit status 0 on success, 1 on a
// computation or I/O failure, 2 on a usage error.
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsieve/acceptance.hpp"
#include "qsieve/analysis.hpp"
#include "qsieve/characters.hpp"
#include "qsieve/errors.hpp"
#include "qsieve/exponent.hpp"
#include "qsieve/gauss_sums.hpp"
#include "qsieve/parallel.hpp"
#include "qsieve/quartic_symbol.hpp"
#include "qsieve/regime.hpp"
#include "qsieve/report.hpp"
#include "qsieve/sieve.hpp"

using namespace qsieve;

namespace {

struct Common {
  std::string out;  // explicit report path
  std::string format = "json";
  unsigned threads = 0;
};

// Prints the report and persists it to --out, or to $QUARTIC_SIEVE_OUT/<name>
// when that variable is set.
void emit(const Common& c, const std::string& name, const std::string& text) {
  std::cout << text;
  std::string path = c.out;
  if (path.empty() && std::getenv("QUARTIC_SIEVE_OUT") && *std::getenv("QUARTIC_SIEVE_OUT")) {
    std::filesystem::create_directories(default_output_dir());
    path = (std::filesystem::path(default_output_dir()) / (name + "." + c.format)).string();
  }
  if (!path.empty()) write_file(path, text);
}

GaussianInteger gi(const std::string& s) { return GaussianInteger::parse(s); }

Json value_table(const std::vector<QuarticSymbolValue>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(v.to_string());
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quartic residue symbols, Gauss sums and quartic large-sieve experiments"};
  app.require_subcommand(1);
  // Top-level --help lists every subcommand with its flags.
  app.set_help_flag();
  app.set_help_all_flag("-h,--help", "Print help for all subcommands and exit");
  Common common;

  auto add_common = [&](CLI::App* sub, bool csv) {
    sub->add_option("--out", common.out, "Report path (default $QUARTIC_SIEVE_OUT/<command>.<format>)");
    if (csv) {
      sub->add_option("--format", common.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    }
  };

  // symbol
  std::string num, den;
  auto* symbol = app.add_subcommand("symbol", "Quartic residue symbol (num/den)_4");
  symbol->add_option("--num", num, "Numerator (Gaussian integer)")->required();
  symbol->add_option("--den", den, "Odd primary modulus")->required();

  // gauss-sum, tau
  std::string r_lit = "1", n_lit;
  unsigned power = 1;
  auto* gsum = app.add_subcommand("gauss-sum", "Gauss sum g(r, n)");
  gsum->add_option("--r", r_lit, "Twist r (default 1)");
  gsum->add_option("--n", n_lit, "Primary non-unit modulus")->required();
  add_common(gsum, false);
  auto* tau_cmd = app.add_subcommand("tau", "tau(chi_n^power) over rational residues");
  tau_cmd->add_option("--n", n_lit, "n == +-1 mod (1+i)^3, no rational prime divisor")->required();
  tau_cmd->add_option("--power", power, "1 or 2")->check(CLI::IsMember({1u, 2u}));
  add_common(tau_cmd, false);

  // chars
  std::uint64_t q = 0;
  bool oracle = false, check = false;
  auto* chars = app.add_subcommand("chars", "Quartic characters of conductor q");
  chars->add_option("--q", q, "Conductor")->required();
  chars->add_flag("--oracle", oracle, "List primitive order-4 Dirichlet characters instead");
  chars->add_flag("--check", check, "Match the quartic-symbol family against the oracle");
  add_common(chars, false);

  // theta
  double w = 0.0;
  std::string f_lit, chi_spec = "quartic";
  std::uint64_t truncation = 0;
  auto* theta = app.add_subcommand("theta", "Theta sum over primary a coprime to f");
  theta->add_option("--w", w, "0 < w <= 1")->required();
  theta->add_option("--f", f_lit, "Modulus (Gaussian integer, non-unit)")->required();
  theta->add_option("--chi", chi_spec, "principal | quartic | quartic2 | quartic3");
  theta->add_option("--truncation", truncation, "Largest norm to include (default: automatic)");
  add_common(theta, false);

  // poisson-check
  std::string n1_lit, n2_lit = "1";
  double poisson_M = 0.0, tol = 1e-4;
  PoissonOptions popts;
  auto* poisson = app.add_subcommand("poisson-check", "Lattice sum against its Poisson dual");
  poisson->add_option("--n1", n1_lit, "Primary modulus")->required();
  poisson->add_option("--n2", n2_lit, "Primary modulus coprime to n1 (default 1)");
  poisson->add_option("--M", poisson_M, "Scale M > 0")->required();
  poisson->add_option("--tol", tol, "Relative error accepted (exit 1 above it)");
  poisson->add_option("--tail-tol", popts.tail_tol, "Relative stop for the dual-sum cutoff doubling");
  poisson->add_option("--max-t", popts.max_t, "Largest dual cutoff before giving up");
  add_common(poisson, false);

  // sieve-norm
  std::string kind = "t1";
  std::int64_t sM = 0, sN = 0, sQ = 0;
  double eps = 0.1;
  std::string coeffs;
  std::vector<std::int64_t> grid;
  bool duality = false;
  auto* sieve = app.add_subcommand("sieve-norm", "Empirical large-sieve norm and bound terms");
  sieve->add_option("--kind", kind, "t1: symbol matrix over Z[i]; t2: Dirichlet characters")
      ->check(CLI::IsMember({"t1", "t2"}));
  sieve->add_option("--M", sM, "Row range (t1) or column range (t2)");
  sieve->add_option("--N", sN, "Column range (t1)");
  sieve->add_option("--Q", sQ, "Conductor range (t2)");
  sieve->add_option("--eps", eps, "Exponent of the displayed (MN)^eps factor");
  sieve->add_option("--coeffs", coeffs, "CSV index,re,im: also evaluate the form at this vector");
  sieve->add_option("--grid", grid, "Sweep every pair of these values instead of one cell")->delimiter(',');
  sieve->add_flag("--duality", duality, "t1: also run the duality checks");
  sieve->add_option("--threads", common.threads, "Worker threads (0 = all cores)");
  add_common(sieve, true);

  // regime
  double rQ = 0.0, rM = 0.0;
  auto* regime = app.add_subcommand("regime", "Row of the piecewise theorem-2 bound at (Q, M)");
  regime->add_option("--Q", rQ, "Q >= 2")->required();
  regime->add_option("--M", rM, "M >= 2")->required();
  add_common(regime, false);

  // iterate-xi
  std::string xi0 = "2";
  unsigned steps = 1;
  bool trace = false;
  auto* iterate = app.add_subcommand("iterate-xi", "Exact orbit of xi -> (9 xi - 6)/(4 xi - 1)");
  iterate->add_option("--xi0", xi0, "Start in (3/2, 2], integer or p/q");
  iterate->add_option("--steps", steps, "Number of steps");
  iterate->add_flag("--trace", trace, "Print the JSON trace instead of the last iterate");

  // verify
  std::vector<int> only;
  std::string verify_dir;
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--only", only, "Criterion ids to run")->delimiter(',');
  verify->add_option("--out-dir", verify_dir, "Directory for archived ratio tables");
  verify->add_option("--threads", common.threads, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*symbol) {
      const QuarticSymbolValue v = quartic_symbol(gi(num), gi(den));
      std::cout << v.to_string() << " (k=" << (v.is_zero() ? std::string("none") : std::to_string(v.exponent()))
                << ")\n";
    } else if (*gsum) {
      const GaussianInteger n = gi(n_lit);
      Json j;
      j["r"] = gi(r_lit).to_string();
      j["n"] = n.to_string();
      j["norm"] = static_cast<std::uint64_t>(n.norm());
      j["value"] = complex_json(gauss_sum(gi(r_lit), n));
      emit(common, "gauss-sum", dump_json(j));
    } else if (*tau_cmd) {
      const GaussianInteger n = gi(n_lit);
      Json j;
      j["n"] = n.to_string();
      j["power"] = power;
      j["norm"] = static_cast<std::uint64_t>(n.norm());
      j["value"] = complex_json(tau(n, power));
      emit(common, "tau", dump_json(j));
    } else if (*chars) {
      Json j;
      if (check) {
        j = to_json(match_family_to_oracle(q));
      } else if (oracle) {
        const CharacterList list = list_order4_primitive(q);
        j["q"] = q;
        Json arr = Json::array();
        for (const auto& chi : list.characters) {
          Json c;
          c["exponents"] = chi.exponents();
          c["order"] = chi.order();
          std::vector<QuarticSymbolValue> values;
          for (std::uint64_t m = 0; m < q; ++m) values.push_back(chi.value4(static_cast<std::int64_t>(m)));
          c["values"] = value_table(values);
          arr.push_back(c);
        }
        j["characters"] = arr;
      } else {
        j["q"] = q;
        Json arr = Json::array();
        for (const auto& chi : enumerate_quartic_family(q)) {
          Json c;
          c["generator"] = chi.generator().to_string();
          c["values"] = value_table(chi.table());
          arr.push_back(c);
        }
        j["characters"] = arr;
      }
      emit(common, "chars", dump_json(j));
    } else if (*theta) {
      emit(common, "theta", dump_json(to_json(theta_sum(w, gi(f_lit), ThetaCharacter::parse(chi_spec), truncation))));
    } else if (*poisson) {
      const PoissonCheckReport r = poisson_identity_check(gi(n1_lit), gi(n2_lit), poisson_M, popts);
      Json j = to_json(r);
      j["tol"] = tol;
      j["passed"] = r.rel_err < tol;
      emit(common, "poisson-check", dump_json(j));
      if (!(r.rel_err < tol)) {
        std::cerr << "poisson-check: rel_err " << r.rel_err << " exceeds tolerance " << tol << "\n";
        return 1;
      }
    } else if (*sieve) {
      const bool t1 = kind == "t1";
      std::vector<std::pair<std::int64_t, std::int64_t>> cells;
      if (!grid.empty()) {
        for (auto a : grid)
          for (auto b : grid) cells.emplace_back(a, b);
      } else {
        const std::int64_t first = t1 ? sM : sQ;
        const std::int64_t second = t1 ? sN : sM;
        if (first == 0 || second == 0) {
          throw InvalidArgument(t1 ? "sieve-norm --kind t1 needs --M and --N" : "sieve-norm --kind t2 needs --Q and --M");
        }
        cells.emplace_back(first, second);
      }
      if (!coeffs.empty() && cells.size() != 1) throw InvalidArgument("--coeffs applies to a single cell");

      std::vector<SieveReport> reports(cells.size());
      // Cells run as independent tasks; each one assembles its matrix serially.
      const unsigned inner = cells.size() == 1 ? common.threads : 1;
      parallel_for(
          cells.size(),
          [&](std::size_t k) {
            const auto [a, b] = cells[k];
            reports[k] = t1 ? empirical_B1(a, b, eps, inner) : empirical_theorem2(a, b, eps, inner);
          },
          common.threads);

      if (!coeffs.empty()) {
        const CoefficientVector a = read_coefficients(coeffs);
        if (a.norm_sq() == 0.0) throw InvalidArgument("coefficient vector must be non-zero");
        const auto [x, y] = cells.front();
        ComplexVector av;
        ComplexMatrix t;
        if (t1) {
          const SymbolMatrix sm = symbol_matrix(x, y, common.threads);
          av = coefficients_on(a, sm.n);
          t = sm.entries.to_complex();
        } else {
          const CharacterMatrix cm = character_matrix(x, y, common.threads);
          av = coefficients_on(a, cm.m);
          t = cm.entries.to_complex();
        }
        reports.front().quadratic_form = (t * av).squaredNorm() / av.squaredNorm();
      }

      std::string text;
      if (common.format == "csv") {
        text = sieve_csv(reports);
      } else if (reports.size() == 1 && !duality) {
        text = dump_json(to_json(reports.front()));
      } else {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        Json j;
        j["reports"] = arr;
        if (duality) {
          if (!t1) throw InvalidArgument("--duality applies to --kind t1");
          Json d = Json::array();
          for (const auto& [a, b] : cells) d.push_back(to_json(duality_checks(a, b, common.threads)));
          j["duality"] = d;
        }
        text = dump_json(j);
      }
      emit(common, "sieve-norm", text);
    } else if (*regime) {
      emit(common, "regime", dump_json(to_json(piecewise_regime(rQ, rM))));
    } else if (*iterate) {
      const ExponentTrace t = exponent_iteration(parse_rational(xi0), steps);
      if (trace) {
        std::cout << dump_json(to_json(t));
      } else {
        std::cout << to_string(t.xi_history.back()) << "\n";
      }
    } else if (*verify) {
      AcceptanceOptions opt;
      opt.out_dir = verify_dir.empty() ? default_output_dir() : verify_dir;
      opt.threads = common.threads;
      opt.on_result = [](const CriterionResult& r) { std::cout << format_result(r) << std::endl; };
      int failed = 0;
      for (const auto& r : run_acceptance(opt, only)) failed += r.passed ? 0 : 1;
      std::cout << failed << " criteria failed\n";
      return failed == 0 ? 0 : 1;
    }
  } catch (const InvalidArgument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedModulus& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
