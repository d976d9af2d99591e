#include "lant/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "lant/errors.hpp"
#include "lant/inversion.hpp"
#include "lant/io.hpp"
#include "lant/numtheory.hpp"
#include "lant/oracle.hpp"
#include "lant/regression.hpp"

namespace lant::cli {

namespace {

constexpr std::int64_t kMaxN = std::int64_t{1} << 32;

std::vector<std::int64_t> parse_integer_list(const std::string& text, char sep) {
  std::vector<std::int64_t> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (item.empty() || item == "\r") continue;
    std::size_t used = 0;
    const std::int64_t v = std::stoll(item, &used);
    if (used != item.size() && item.substr(used) != "\r")
      throw std::invalid_argument("not an integer: '" + item + "'");
    values.push_back(v);
  }
  return values;
}

void check_n(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > kMaxN) throw std::invalid_argument("n exceeds the 2^32 cap");
}

NtfValue evaluate_ntf(const std::string& fn, double x, Index n, bool use_oracle) {
  NtfValue out;
  out.path = use_oracle ? NtfPath::oracle : NtfPath::lant;
  if (fn == "pi") {
    if (x < 1.0) throw std::invalid_argument("pi: x must be >= 1");
    const Index bound = static_cast<Index>(x);
    out.value = static_cast<double>(use_oracle ? oracle::prime_count(bound)
                                               : prime_count(bound));
  } else if (fn == "theta") {
    if (x < 1.0) throw std::invalid_argument("theta: x must be >= 1");
    const Index bound = static_cast<Index>(x);
    out.value = use_oracle ? oracle::chebyshev_first(bound) : chebyshev_first(bound);
  } else if (fn == "psi") {
    if (use_oracle) {
      out.value = oracle::chebyshev_second(x);
    } else {
      out = chebyshev_second(x);
    }
  } else if (fn == "lambda") {
    const Index i = static_cast<Index>(x);
    out.value = use_oracle ? oracle::von_mangoldt(i)
                           : von_mangoldt(i, std::max<Index>(n, i));
  } else if (fn == "li") {
    if (use_oracle) {
      out.value = oracle::logarithmic_integral(x);
    } else {
      out = logarithmic_integral(x);
    }
  } else {
    throw std::invalid_argument("unknown function: " + fn);
  }
  out.path = use_oracle ? NtfPath::oracle : NtfPath::lant;
  return out;
}

}  // namespace

CandidatePrimeVector parse_candidates(const std::string& spec, Index n) {
  if (spec == "primes") return prime_candidates(n);
  if (spec == "naturals") return natural_candidates(n);
  std::vector<std::int64_t> values;
  if (!spec.empty() && spec[0] == '@') {
    std::ifstream file(spec.substr(1));
    if (!file) throw std::invalid_argument("cannot open candidate file " + spec.substr(1));
    std::stringstream content;
    content << file.rdbuf();
    values = parse_integer_list(content.str(), '\n');
  } else {
    values = parse_integer_list(spec, ',');
  }
  if (values.empty()) throw std::invalid_argument("candidate list is empty");
  std::sort(values.begin(), values.end());
  for (std::size_t j = 1; j < values.size(); ++j)
    if (values[j] == values[j - 1])
      throw std::invalid_argument("duplicate candidate value " + std::to_string(values[j]));
  return CandidatePrimeVector(n, Eigen::Map<const Int64Vector>(values.data(), values.size()));
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Factorization matrices, the log-prime estimator, exact inversion "
               "and derived number-theoretic functions"};
  app.require_subcommand(1);

  std::string output_path;
  app.add_option("--output", output_path, "Write to a file instead of stdout")
      ->capture_default_str();

  std::int64_t n = 0;
  std::string q_spec;
  std::string format;
  double x = 0.0;
  double tol = kLogTolerance;
  double re = 0.0;
  double im = 0.0;
  std::int64_t terms = 1'000'000;
  std::int64_t from = 0;
  std::int64_t to = 0;
  std::int64_t step = 1;
  std::string fn;
  bool use_oracle = false;

  auto* matrix_cmd = app.add_subcommand("matrix", "Dump the candidate factorization F_n(q)");
  matrix_cmd->add_option("--n", n, "Row count")->required();
  matrix_cmd->add_option("--q", q_spec, "Candidates: primes|naturals|list|@file")->required();
  matrix_cmd->add_option("--format", format, "csv (default) or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* estimate_cmd =
      app.add_subcommand("estimate", "Run the log-prime estimator and consistency report");
  estimate_cmd->add_option("--n", n, "Row count")->required();
  estimate_cmd->add_option("--q", q_spec, "Candidates: primes|naturals|list|@file")->required();
  estimate_cmd->add_option("--tol", tol, "Log tolerance for the consistency report");
  estimate_cmd->add_option("--format", format, "json only")->check(CLI::IsMember({"json"}));

  auto* invert_cmd = app.add_subcommand("invert", "Dump the exact inverse of F_n(z_n)");
  invert_cmd->add_option("--n", n, "Dimension")->required();
  invert_cmd->add_option("--format", format, "csv (default) or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* ntf_cmd = app.add_subcommand("ntf", "Evaluate a number-theoretic function");
  ntf_cmd->add_option("--fn", fn, "ip|pi|theta|psi|lambda|li")
      ->required()
      ->check(CLI::IsMember({"ip", "pi", "theta", "psi", "lambda", "li"}));
  ntf_cmd->add_option("--x", x, "Argument")->required();
  ntf_cmd->add_option("--n", n, "Design bound for ip/lambda (default: the argument)");
  ntf_cmd->add_flag("--oracle", use_oracle)->group("");  // debugging aid, hidden

  auto* zeta_cmd = app.add_subcommand("zeta", "Riemann zeta via the Dirichlet eta series");
  zeta_cmd->add_option("--re", re, "Re(s)")->required();
  zeta_cmd->add_option("--im", im, "Im(s)");
  zeta_cmd->add_option("--terms", terms, "Number of series terms");

  auto* scan_cmd = app.add_subcommand("scan", "Tabulate (n, ld(n), Li(n), ratio)");
  scan_cmd->add_option("--from", from, "First n")->required();
  scan_cmd->add_option("--to", to, "Last n")->required();
  scan_cmd->add_option("--step", step, "Step");
  scan_cmd->add_option("--format", format, "csv (default) or json")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!output_path.empty()) {
    file.open(output_path);
    if (!file) {
      err << "error: cannot open output file " << output_path << "\n";
      return 1;
    }
    sink = &file;
  }

  try {
    if (app.got_subcommand(matrix_cmd)) {
      check_n(n);
      const FactorizationMatrix f = candidate_factorization(parse_candidates(q_spec, n), n);
      if (format == "json")
        io::write_matrix_json(*sink, f);
      else
        io::write_matrix_csv(*sink, f);
    } else if (app.got_subcommand(estimate_cmd)) {
      check_n(n);
      const LpeResult result = log_prime_estimator(parse_candidates(q_spec, n), n);
      io::write_lpe_json(*sink, result, classify(result, tol));
    } else if (app.got_subcommand(invert_cmd)) {
      check_n(n);
      const IntegerTriangularMatrix inverse = invert_factorization_matrix(n);
      if (format == "json")
        io::write_inverse_json(*sink, inverse);
      else
        io::write_inverse_csv(*sink, inverse);
    } else if (app.got_subcommand(ntf_cmd)) {
      if (n != 0) check_n(n);
      if (fn == "ip") {
        const Index i = static_cast<Index>(x);
        if (use_oracle) {
          if (i < 1) throw std::invalid_argument("ip: i must be >= 1");
          const Primality p = i == 1 ? Primality::indeterminate
                              : oracle::factorize(i).factors.size() == 1 &&
                                      oracle::factorize(i).factors[0].second == 1
                                  ? Primality::prime
                                  : Primality::composite;
          io::write_primality_json(*sink, x, p, NtfPath::oracle);
        } else {
          const Index bound = std::max<Index>({n, i, 2});
          io::write_primality_json(*sink, x, is_prime(i, bound), NtfPath::lant);
        }
      } else {
        io::write_ntf_json(*sink, fn, x, evaluate_ntf(fn, x, n, use_oracle));
      }
    } else if (app.got_subcommand(zeta_cmd)) {
      io::write_zeta_json(*sink, zeta_eta(std::complex<double>(re, im), terms));
    } else if (app.got_subcommand(scan_cmd)) {
      check_n(from);
      check_n(to);
      const auto samples = conjecture_scan(from, to, step);
      if (format == "json")
        io::write_scan_json(*sink, samples);
      else
        io::write_scan_csv(*sink, samples);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace lant::cli
