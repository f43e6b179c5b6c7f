#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <random>
#include <regex>
#include <sstream>

#include "permchow/errors.hpp"
#include "permchow/guard.hpp"
#include "permchow/io.hpp"
#include "permchow/monoid.hpp"
#include "permchow/permanent.hpp"
#include "permchow/quadratic.hpp"
#include "permchow/solver.hpp"

namespace permchow::cli {
namespace {

const char* const kFooter = R"(Exit codes:
  0  success (for chow verify: every coefficient within tolerance)
  2  chow verify found a violation, or chow solve converged to a candidate
     that failed independent verification
  3  a dimension guard was exceeded
  4  malformed input: bad flags, unreadable or invalid JSON documents

Environment:
  PERMCHOW_GUARD_OVERRIDE  set to any non-empty value other than "0" to lift
                           every dimension guard. Guarded operations grow as
                           n!, 2^n, n^n or (n!)^2; without the guards a small
                           increase in n can exhaust memory or run for days.)";

const std::vector<std::string> kPermAlgos = {"naive", "ryser", "glynn", "hadamard-ryser", "hadamard-glynn"};

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  return first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, sep);) parts.push_back(trim(item));
  return parts;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParseError("not a number: " + s);
  }
  if (used != s.size()) throw ParseError("not a number: " + s);
  return v;
}

// Accepts "3", "-2.5", "4i", "-i", "1+2i", "1.5e-3-0.5i".
Complex parse_complex_literal(const std::string& raw) {
  std::string s;
  std::copy_if(raw.begin(), raw.end(), std::back_inserter(s), [](char c) { return c != ' '; });
  static const std::string num = R"((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)";
  static const std::regex real_re("^[+-]?" + num + "$");
  static const std::regex imag_re("^([+-]?)(" + num + ")?i$");
  static const std::regex both_re("^([+-]?" + num + ")([+-])(" + num + ")?i$");
  std::smatch m;
  if (std::regex_match(s, real_re)) return {parse_double(s), 0.0};
  if (std::regex_match(s, m, imag_re)) {
    const double mag = m[2].matched ? parse_double(m[2].str()) : 1.0;
    return {0.0, m[1].str() == "-" ? -mag : mag};
  }
  if (std::regex_match(s, m, both_re)) {
    const double mag = m[3].matched ? parse_double(m[3].str()) : 1.0;
    return {parse_double(m[1].str()), m[2].str() == "-" ? -mag : mag};
  }
  throw ParseError("not a complex literal: " + raw);
}

template <class T>
T parse_step(const std::string& s) {
  if constexpr (std::is_same_v<T, Integer>) return parse_integer(json(s));
  else if constexpr (std::is_same_v<T, Rational>) return parse_rational(json(s));
  else return parse_complex_literal(s);
}

std::string format_value(const Integer& x) { return x.get_str(); }
std::string format_value(const Rational& x) { return x.get_str(); }
std::string format_value(const Complex& x) { return to_json(x).dump(); }

std::size_t algo_limit(const std::string& algo) { return algo == "naive" ? limits::kNaive : limits::kSubsetSum; }

template <class T>
T permanent_by(const std::string& algo, const Matrix<T>& a, const T& h) {
  if (algo == "naive") return per_naive(a);
  if (algo == "ryser") return per_ryser(a);
  if (algo == "glynn") return per_glynn(a);
  if (algo == "hadamard-ryser") return per_via_hadamard(a, HadamardScheme::Ryser01, h);
  if (algo == "hadamard-glynn") return per_via_hadamard(a, HadamardScheme::GlynnPlusMinus, h);
  throw ParseError("unknown algorithm: " + algo);
}

TargetSpec parse_target(const std::string& spec, std::size_t n) {
  if (spec == "per") return TargetSpec::permanent(n);
  if (spec == "signed-default") return TargetSpec::signed_default(n);
  if (spec.rfind("signed:", 0) == 0) {
    SignPattern p = sign_pattern_from_json(read_json_file(spec.substr(7)));
    if (p.n() != n)
      throw ParseError("sign pattern is for n=" + std::to_string(p.n()) + ", expected n=" + std::to_string(n));
    return TargetSpec::signed_pattern(std::move(p));
  }
  throw ParseError("unknown target \"" + spec + "\" (expected per, signed-default or signed:FILE)");
}

json verify_report_to_json(const VerifyReport& r) {
  return json{{"passed", r.passed()},
              {"violations", r.violations},
              {"checked", r.checked},
              {"max_error", r.max_error},
              {"tol", r.tol}};
}

json partition_to_json(const Partition& p) { return json(p); }

std::string partition_text(const Partition& p) {
  std::string s = "[";
  for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + std::to_string(p[k]);
  return s + "]";
}

// ---- perm ----

struct PermEvalArgs {
  std::string matrix;
  std::string algo = "ryser";
  std::string h = "1";
};

int cmd_perm_eval(const PermEvalArgs& args, std::ostream& out) {
  const AnyMatrix m = matrix_from_json(read_json_file(args.matrix));
  std::visit(
      [&](const auto& a) {
        using T = typename std::decay_t<decltype(a)>::value_type;
        out << format_value(permanent_by<T>(args.algo, a, parse_step<T>(args.h))) << '\n';
      },
      m);
  return kOk;
}

struct PermBenchArgs {
  std::size_t n_from = 1;
  std::size_t n_to = 8;
  std::string algos = "naive,ryser,glynn";
  std::size_t reps = 1;
  std::uint64_t seed = 0;
};

Matrix<Integer> bench_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 1000003u + n);
  std::uniform_int_distribution<int> entry(-5, 5);
  std::vector<Integer> v(n * n);
  for (auto& x : v) x = entry(rng);
  return Matrix<Integer>(n, std::move(v));
}

int cmd_perm_bench(const PermBenchArgs& args, std::ostream& out, std::ostream& err) {
  if (args.n_from == 0 || args.n_from > args.n_to) throw ParseError("need 1 <= --n-from <= --n-to");
  if (args.reps == 0) throw ParseError("--reps must be positive");
  const auto algos = split(args.algos, ',');
  if (algos.empty()) throw ParseError("--algo needs at least one algorithm");
  for (const auto& algo : algos)
    if (std::find(kPermAlgos.begin(), kPermAlgos.end(), algo) == kPermAlgos.end())
      throw ParseError("unknown algorithm: " + algo);
  for (const auto& algo : algos) check_guard("perm bench " + algo, args.n_to, algo_limit(algo));

  out << "n,algo,wall_ms,checksum\n";
  bool agree = true;
  for (std::size_t n = args.n_from; n <= args.n_to; ++n) {
    const Matrix<Integer> a = bench_matrix(n, args.seed);
    std::optional<std::string> reference;
    for (const auto& algo : algos) {
      for (std::size_t rep = 0; rep < args.reps; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        const Integer value = permanent_by<Integer>(algo, a, Integer(1));
        const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
        const std::string checksum = value.get_str();
        out << n << ',' << algo << ',' << std::fixed << std::setprecision(3) << elapsed.count() << ','
            << checksum << '\n';
        if (!reference) reference = checksum;
        if (*reference != checksum) {
          agree = false;
          err << "checksum mismatch at n=" << n << ": " << algo << " gave " << checksum << ", expected "
              << *reference << '\n';
        }
      }
    }
  }
  return agree ? kOk : kInternal;
}

// ---- classes / partition ----

int cmd_classes_list(std::size_t n, bool as_json, std::ostream& out) {
  const auto classes = enumerate_classes(n);
  if (as_json) {
    json records = json::array();
    for (const auto& c : classes)
      records.push_back({{"partition", partition_to_json(c.partition)},
                         {"representative", c.representative.digits()},
                         {"orbit_size", c.orbit_size},
                         {"stabilizer_order", c.stabilizer_order}});
    out << records.dump(2) << '\n';
    return kOk;
  }
  out << std::left << std::setw(16) << "partition" << std::setw(16) << "representative" << std::setw(14)
      << "orbit_size"
      << "stabilizer_order\n";
  for (const auto& c : classes)
    out << std::left << std::setw(16) << partition_text(c.partition) << std::setw(16) << c.representative.digits()
        << std::setw(14) << c.orbit_size << c.stabilizer_order << '\n';
  return kOk;
}

int cmd_partition(std::size_t n, bool estimate, std::ostream& out) {
  out << partition_count(n).get_str() << '\n';
  if (estimate) out << std::setprecision(12) << hardy_ramanujan_estimate(n) << '\n';
  return kOk;
}

// ---- chow ----

int cmd_chow_build(const std::string& method, std::size_t n, const std::string& path, std::ostream& out) {
  if (n == 0) throw ParseError("--n must be positive");
  AnyDecomposition d = method == "ryser" ? AnyDecomposition(build_ryser<Integer>(n))
                                         : AnyDecomposition(build_glynn<Rational>(n));
  write_json_file(path, decomposition_to_json(d));
  std::visit([&](const auto& dec) { out << "wrote " << path << " (n=" << dec.n() << ", rho=" << dec.rho(); }, d);
  out << ", field=" << field_name(d) << ")\n";
  return kOk;
}

int cmd_chow_verify(const std::string& path, const std::string& target_spec, double tol, std::ostream& out) {
  const AnyDecomposition d = decomposition_from_json(read_json_file(path));
  const std::size_t n = std::visit([](const auto& dec) { return dec.n(); }, d);
  const TargetSpec target = parse_target(target_spec, n);
  const VerifyReport report =
      std::visit([&](const auto& dec) { return verify_against_target(dec, target, tol); }, d);
  out << verify_report_to_json(report).dump(2) << '\n';
  return report.passed() ? kOk : kVerifyFailed;
}

int cmd_chow_quad(const std::string& coeffs, std::ostream& out) {
  const auto parts = split(coeffs, ',');
  if (parts.size() != 7) throw ParseError("--coeffs needs exactly 7 values: a,b0,b1,c00,c01,c10,c11");
  std::vector<Complex> c;
  for (const auto& p : parts) c.push_back(parse_complex_literal(p));
  const BivariateQuadratic q{c[0], c[1], c[2], c[3], c[4], c[5], c[6]};
  const auto g = decompose_bivariate_quadratic(q);

  json h = json::array();
  for (std::size_t u = 0; u < g.rho(); ++u) {
    json term = json::array();
    for (std::size_t v = 0; v < g.degree(); ++v) {
      json form = json::array();
      for (std::size_t w = 0; w <= g.variables(); ++w) form.push_back(to_json(g.at(u, v, w)));
      term.push_back(std::move(form));
    }
    h.push_back(std::move(term));
  }
  double max_error = 0.0;
  for (int i = -2; i <= 2; ++i)
    for (int j = -2; j <= 2; ++j) {
      const std::vector<Complex> x{Complex(i), Complex(j)};
      max_error = std::max(max_error, std::abs(evaluate(g, std::span<const Complex>(x)) - q(x[0], x[1])));
    }
  out << json{{"rho", g.rho()},
              {"degree", g.degree()},
              {"variables", g.variables()},
              {"H", std::move(h)},
              {"grid_max_error", max_error}}
             .dump(2)
      << '\n';
  return kOk;
}

struct SolveArgs {
  std::size_t n = 2;
  std::size_t rho = 1;
  std::string target = "per";
  std::uint64_t seed = 0;
  std::size_t restarts = 10;
  std::string field = "real";
  bool reduced_only = false;
  std::size_t max_iters = 500;
  double tol = 1e-10;
  std::size_t threads = 1;
  std::string output;
};

int cmd_chow_solve(const SolveArgs& args, std::ostream& out) {
  if (args.n == 0) throw ParseError("--n must be positive");
  SolverConfig cfg;
  cfg.rho = args.rho;
  cfg.field = args.field == "complex" ? SolverField::Complex : SolverField::Real;
  cfg.seed = args.seed;
  cfg.restarts = args.restarts;
  cfg.reduced_only = args.reduced_only;
  cfg.max_iters = args.max_iters;
  cfg.residual_tol = args.tol;
  cfg.threads = args.threads;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  const TargetSpec target = parse_target(args.target, args.n);
  const SolveReport report = solve(args.n, target, cfg);

  json restarts = json::array();
  for (std::size_t k = 0; k < report.restarts.size(); ++k) {
    const auto& r = report.restarts[k];
    restarts.push_back(
        {{"index", k}, {"residual", r.residual}, {"iterations", r.iterations}, {"converged", r.converged}});
  }
  const AnyDecomposition best = cfg.field == SolverField::Real ? AnyDecomposition(real_part(report.best))
                                                               : AnyDecomposition(report.best);
  const json doc{
      {"config",
       {{"n", args.n},
        {"rho", args.rho},
        {"target", args.target},
        {"seed", args.seed},
        {"restarts", args.restarts},
        {"field", args.field},
        {"reduced_only", args.reduced_only},
        {"max_iters", args.max_iters},
        {"residual_tol", args.tol},
        {"threads", args.threads}}},
      {"converged", report.converged},
      {"best_restart", report.best_restart},
      {"best_residual", report.best_residual},
      {"restarts", std::move(restarts)},
      {"verification", verify_report_to_json(*report.verification)},
      {"best", decomposition_to_json(best)}};

  if (args.output.empty()) {
    out << doc.dump(2) << '\n';
  } else {
    write_json_file(args.output, doc);
    out << "converged=" << (report.converged ? "true" : "false") << " best_restart=" << report.best_restart
        << " best_residual=" << std::scientific << std::setprecision(3) << report.best_residual
        << " restarts_run=" << report.restarts.size() << " verified=" << (report.verification->passed() ? "true" : "false")
        << '\n';
  }
  return report.converged && !report.verification->passed() ? kVerifyFailed : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matrix permanents, Chow decompositions and InDegIso classes.", "permchow"};
  app.footer(kFooter);
  app.require_subcommand(1);

  auto* perm = app.add_subcommand("perm", "Permanent evaluation and benchmarking");
  perm->require_subcommand(1);
  PermEvalArgs eval_args;
  auto* eval = perm->add_subcommand("eval", "Print the permanent of a matrix file");
  eval->set_help_flag("--help", "Print this help message and exit");  // frees "h" for the grid step
  eval->add_option("--matrix", eval_args.matrix, "Matrix JSON file {n, field, entries}")->required();
  eval->add_option("--algo", eval_args.algo, "Algorithm")
      ->check(CLI::IsMember(kPermAlgos))
      ->capture_default_str();
  eval->add_option("--h", eval_args.h,
                   "Grid step for the hadamard-* algorithms, in the matrix's field "
                   "(integer, p/q, or complex such as 1+2i)")
      ->capture_default_str();

  PermBenchArgs bench_args;
  auto* bench = perm->add_subcommand("bench", "Time algorithms on deterministic integer matrices; CSV output");
  bench->add_option("--n-from", bench_args.n_from, "Smallest dimension")->capture_default_str();
  bench->add_option("--n-to", bench_args.n_to, "Largest dimension")->capture_default_str();
  bench->add_option("--algo", bench_args.algos, "Comma-separated algorithm list")->capture_default_str();
  bench->add_option("--reps", bench_args.reps, "Timed repetitions per (n, algo)")->capture_default_str();
  bench->add_option("--seed", bench_args.seed, "Seed for the matrix entries in [-5, 5]")->capture_default_str();

  auto* classes = app.add_subcommand("classes", "InDegIso classes of Z_n^Z_n");
  classes->require_subcommand(1);
  std::size_t classes_n = 0;
  bool classes_json = false;
  auto* list = classes->add_subcommand("list", "One row per class: partition, representative, orbit size, stabilizer");
  list->add_option("--n", classes_n, "Dimension")->required();
  list->add_flag("--json", classes_json, "Print a JSON array of records");

  std::size_t partition_n = 0;
  bool partition_estimate = false;
  auto* partition = app.add_subcommand("partition", "Number of integer partitions Pa(n)");
  partition->add_option("--n", partition_n, "Argument")->required();
  partition->add_flag("--estimate", partition_estimate, "Also print the Hardy-Ramanujan estimate");

  auto* chow = app.add_subcommand("chow", "Chow decompositions of the permanent and signed class polynomials");
  chow->require_subcommand(1);

  std::string build_method = "glynn", build_out;
  std::size_t build_n = 0;
  auto* build = chow->add_subcommand("build", "Write the Ryser (rho=2^n-1) or Glynn (rho=2^(n-1)) certificate");
  build->add_option("--method", build_method, "Certificate")
      ->check(CLI::IsMember({"ryser", "glynn"}))
      ->capture_default_str();
  build->add_option("--n", build_n, "Dimension")->required();
  build->add_option("-o,--output", build_out, "Decomposition JSON file to write")->required();

  std::string verify_decomp, verify_target = "per";
  double verify_tol = 1e-9;
  auto* verify = chow->add_subcommand("verify", "Check every coefficient of a decomposition file against a target");
  verify->add_option("--decomp", verify_decomp, "Decomposition JSON file {n, rho, field, B}")->required();
  verify->add_option("--target", verify_target, "per, signed-default, or signed:FILE with a sign pattern document")
      ->capture_default_str();
  verify->add_option("--tol", verify_tol, "Max coefficient error for real/complex fields (exact fields use 0)")
      ->capture_default_str();

  std::string quad_coeffs;
  auto* quad = chow->add_subcommand("quad", "Rank <= 2 decomposition of a bivariate complex quadratic");
  quad->add_option("--coeffs", quad_coeffs,
                   "a,b0,b1,c00,c01,c10,c11 for a + b0 x0 + b1 x1 + sum c_ij x_i x_j; "
                   "each value real or complex (e.g. 2, -1.5i, 1+2i)")
      ->required();

  SolveArgs solve_args;
  auto* solve_cmd = chow->add_subcommand("solve", "Damped least-squares search for a rank-rho decomposition");
  solve_cmd->add_option("--n", solve_args.n, "Dimension")->required();
  solve_cmd->add_option("--rho", solve_args.rho, "Number of terms")->required();
  solve_cmd->add_option("--target", solve_args.target, "per, signed-default, or signed:FILE")->capture_default_str();
  solve_cmd->add_option("--seed", solve_args.seed, "Restart k starts from seed + k")->capture_default_str();
  solve_cmd->add_option("--restarts", solve_args.restarts, "Maximum number of restarts")->capture_default_str();
  solve_cmd->add_option("--field", solve_args.field, "Unknowns are real or complex")
      ->check(CLI::IsMember({"real", "complex"}))
      ->capture_default_str();
  solve_cmd->add_flag("--reduced-only", solve_args.reduced_only,
                      "Fit only the orbit-sum and representative equations (one pair per class)");
  solve_cmd->add_option("--max-iters", solve_args.max_iters, "Trial steps per restart")->capture_default_str();
  solve_cmd->add_option("--tol", solve_args.tol, "Convergence threshold on the max residual")->capture_default_str();
  solve_cmd->add_option("--threads", solve_args.threads, "Worker threads for restarts")->capture_default_str();
  solve_cmd->add_option("-o,--output", solve_args.output, "Report JSON file (stdout when omitted)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    if (eval->parsed()) return cmd_perm_eval(eval_args, out);
    if (bench->parsed()) return cmd_perm_bench(bench_args, out, err);
    if (list->parsed()) return cmd_classes_list(classes_n, classes_json, out);
    if (partition->parsed()) return cmd_partition(partition_n, partition_estimate, out);
    if (build->parsed()) return cmd_chow_build(build_method, build_n, build_out, out);
    if (verify->parsed()) return cmd_chow_verify(verify_decomp, verify_target, verify_tol, out);
    if (quad->parsed()) return cmd_chow_quad(quad_coeffs, out);
    if (solve_cmd->parsed()) return cmd_chow_solve(solve_args, out);
  } catch (const GuardError& e) {
    err << "guard: " << e.what() << '\n';
    return kGuard;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kMalformed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kMalformed;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}

}  // namespace permchow::cli
