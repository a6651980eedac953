#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hardy/factors.hpp"
#include "hardy/families.hpp"
#include "hardy/intervals.hpp"
#include "hardy/numeric.hpp"
#include "hardy/operators.hpp"
#include "hardy/oracle.hpp"
#include "hardy/refine.hpp"
#include "hardy/report.hpp"
#include "problem_io.hpp"

namespace {

using hardy::cli::format_number;
using hardy::cli::ProblemSpec;
using hardy::cli::sig15;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitInvariant = 4;

struct ProblemFlags {
  std::string file;
  std::string family;
  double gamma = 0.5;
  double b = 1.0;
  double c = 1.0;
  double d = 1.0;
  double p = 2.0;
  double q = 2.0;
  std::size_t n = 0;
  bool doubling = false;
  double tail_tol = 1e-8;
  std::size_t n_max = std::size_t{1} << 20;
};

void attach_problem_flags(CLI::App* cmd, ProblemFlags* flags) {
  cmd->add_option("--file", flags->file, "JSON problem file");
  cmd->add_option("--family", flags->family, "built-in family: geometric | bliss");
  cmd->add_option("--gamma", flags->gamma, "geometric family rate (0,1)");
  cmd->add_option("--b", flags->b, "geometric family scale b > 0");
  cmd->add_option("--c", flags->c, "bliss extremal-sequence parameter c");
  cmd->add_option("--d", flags->d, "bliss extremal-sequence parameter d");
  cmd->add_option("--p", flags->p, "exponent p (1 < p <= q)");
  cmd->add_option("--q", flags->q, "exponent q");
  cmd->add_option("--N", flags->n, "fixed working truncation");
  cmd->add_flag("--doubling", flags->doubling, "double N until the base quantity settles");
  cmd->add_option("--tail-tol", flags->tail_tol, "doubling tail tolerance");
  cmd->add_option("--N-max", flags->n_max, "doubling truncation cap");
}

ProblemSpec resolve_problem(const ProblemFlags& flags) {
  if (!flags.file.empty()) return hardy::cli::load_problem_file(flags.file);
  if (flags.family.empty()) {
    throw std::invalid_argument("supply either --file or --family");
  }
  nlohmann::json doc;
  doc["p"] = flags.p;
  doc["q"] = flags.q;
  if (flags.family == "geometric") {
    doc["family"] = {{"name", "geometric"}, {"gamma", flags.gamma}, {"b", flags.b}};
  } else if (flags.family == "bliss") {
    doc["family"] = {{"name", "bliss"}, {"c", flags.c}, {"d", flags.d}};
  } else {
    throw std::invalid_argument("unknown family: " + flags.family);
  }
  if (flags.n > 0) {
    doc["N"] = flags.n;
  } else if (flags.doubling) {
    doc["truncation"] = {{"mode", "doubling"},
                         {"tail_tolerance", flags.tail_tol},
                         {"N_max", flags.n_max}};
  }
  return hardy::cli::problem_from_json(doc);
}

/// For doubling policies, grows the truncation until both B and delta_1
/// settle.  Returns the working weights and whether the doubling converged.
std::pair<hardy::WeightSpec, bool> working_weights(const ProblemSpec& problem) {
  if (!problem.truncation.is_doubling()) return {problem.weights, true};
  const auto b_trace = hardy::converge_in_N(problem.weights, problem.exponents,
                                            hardy::LimitQuantity::base_b,
                                            problem.truncation);
  std::size_t n = b_trace.steps.back().first;
  const auto continue_policy = hardy::TruncationPolicy::doubling(
      problem.truncation.tail_tolerance(), n, problem.truncation.n_max());
  const auto d_trace = hardy::converge_in_N(problem.weights, problem.exponents,
                                            hardy::LimitQuantity::delta1,
                                            continue_policy);
  n = std::max(n, d_trace.steps.back().first);
  return {problem.weights.materialized_at(n),
          b_trace.converged && d_trace.converged};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << text;
  if (text.empty() || text.back() != '\n') out << "\n";
}

hardy::OracleMethod parse_method(const std::string& name) {
  if (name == "fixed_point") return hardy::OracleMethod::fixed_point;
  if (name == "ascent") return hardy::OracleMethod::ascent;
  if (name == "eigen_p2q2") return hardy::OracleMethod::eigen_p2q2;
  throw std::invalid_argument("unknown oracle method: " + name);
}

int cmd_bound(const ProblemFlags& flags, const hardy::BoundOptions& opts,
              const std::string& out_path) {
  const ProblemSpec problem = resolve_problem(flags);
  const auto [weights, converged] = working_weights(problem);
  const hardy::BoundReport report =
      hardy::assemble_bound_report(weights, problem.exponents, opts);

  ordered_json j = hardy::cli::report_to_json(report);
  j["family"] = problem.family_name;
  if (!converged) j["diagnostics"]["truncation_note"] = "doubling reached N_max without settling";
  emit(j.dump(2), out_path);

  if (!report.ordering_ok) return kExitInvariant;
  if (!converged) return kExitNoConvergence;
  for (const auto& [key, value] : report.diagnostics) {
    if (key == "refine_status" && value == "diverged") return kExitNoConvergence;
  }
  return kExitOk;
}

int cmd_refine(const ProblemFlags& flags, int m_max, double tol,
               const hardy::RefineOptions& variant, const std::string& out_path) {
  const ProblemSpec problem = resolve_problem(flags);
  const auto [weights, converged] = working_weights(problem);
  const hardy::Exponents& e = problem.exponents;

  hardy::RefineOptions opts = variant;
  opts.m_max = m_max;
  opts.tol = tol;
  const hardy::UpperTrace upper = hardy::delta_upper(weights, e, opts);

  std::ostringstream csv;
  csv << "m,delta_m,delta_tilde_m,delta_bar_m,delta_attaining_n,"
         "delta_tilde_attaining_k,delta_bar_attaining_k\n";
  for (const auto& step : upper.steps) {
    const hardy::LowerBounds lower = hardy::delta_lower(weights, e, step.m, {}, opts);
    csv << step.m << "," << format_number(step.delta) << ","
        << format_number(lower.delta_tilde) << ","
        << format_number(lower.delta_bar) << "," << step.attaining_n << ","
        << lower.k_tilde << "," << lower.k_bar << "\n";
  }
  emit(csv.str(), out_path);

  if (upper.status == hardy::RefinementStatus::diverged || !converged) {
    return kExitNoConvergence;
  }
  return kExitOk;
}

int cmd_oracle(const ProblemFlags& flags, const hardy::OracleConfig& cfg,
               const std::string& out_path) {
  const ProblemSpec problem = resolve_problem(flags);
  const auto [weights, converged] = working_weights(problem);
  const hardy::Exponents& e = problem.exponents;

  const hardy::OracleResult result = hardy::maximize_quotient(weights, e, cfg);
  const hardy::TestSequence x_star = result.x_star->normalized();
  const hardy::MonotoneCheck mono = hardy::check_maximizer_monotone(x_star, weights, e);

  ordered_json j;
  j["A_est"] = sig15(result.a_estimate);
  j["method"] = cfg.method == hardy::OracleMethod::fixed_point ? "fixed_point"
                : cfg.method == hardy::OracleMethod::ascent    ? "ascent"
                                                               : "eigen_p2q2";
  j["iterations"] = result.iterations_used;
  j["converged"] = result.converged;
  j["seed"] = cfg.seed;
  j["monotone_maximizer"] = {{"decreasing", mono.decreasing},
                             {"first_violation", mono.first_violation},
                             {"boundary_only", mono.boundary_only},
                             {"passed", mono.passed()}};
  ordered_json xs = ordered_json::array();
  for (std::size_t i = 1; i <= x_star.size(); ++i) xs.push_back(sig15(x_star.x(i)));
  j["x_star"] = xs;
  emit(j.dump(2), out_path);

  if (!result.converged || !converged) return kExitNoConvergence;
  return kExitOk;
}

int cmd_example(const std::string& name, const ProblemFlags& flags,
                const std::string& out_path) {
  ordered_json j;
  if (name == "geometric") {
    const hardy::GeometricFamily fam(flags.gamma, flags.b);
    const std::size_t n = flags.n > 0 ? flags.n : 400;
    const hardy::Exponents e(2.0, 2.0);
    const hardy::WeightSpec w = fam.weights(n);
    const hardy::UpperTrace upper = hardy::delta_upper(w, e);
    const hardy::LowerBounds lower = hardy::delta_lower(w, e);
    const hardy::OracleResult oracle = hardy::maximize_quotient(w, e);
    j["family"] = "geometric";
    j["parameters"] = {{"gamma", flags.gamma}, {"b", flags.b}, {"N", n}};
    j["closed_form"] = {{"B", sig15(fam.closed_B())},
                        {"A", sig15(fam.closed_A())},
                        {"delta_1", sig15(fam.closed_delta1())},
                        {"delta_tilde_1", sig15(fam.closed_delta_lower1())},
                        {"delta_bar_1", sig15(fam.closed_delta_lower1())},
                        {"method", "closed-form"}};
    j["computed"] = {{"B", sig15(hardy::compute_B(w, e))},
                     {"A_oracle", sig15(oracle.a_estimate)},
                     {"delta_1", sig15(upper.steps.front().delta)},
                     {"delta_tilde_1", sig15(lower.delta_tilde)},
                     {"delta_bar_1", sig15(lower.delta_bar)},
                     {"method", "truncated-sum/refinement/oracle"}};
  } else if (name == "bliss") {
    const hardy::Exponents e = hardy::validate_exponents(flags.p, flags.q);
    const hardy::BlissFamily fam(e, flags.c, flags.d);
    const std::size_t n = flags.n > 0 ? flags.n : 2000;
    const hardy::WeightSpec w = fam.weights(n);
    const hardy::UpperTrace upper = hardy::delta_upper(w, e);
    const hardy::TestSequence x = fam.extremal_sequence(n);
    j["family"] = "bliss";
    j["parameters"] = {{"p", flags.p}, {"q", flags.q}, {"c", flags.c}, {"d", flags.d}, {"N", n}};
    j["closed_form"] = {{"B", 1.0},
                        {"A", sig15(fam.closed_A())},
                        {"delta_1_upper_bound",
                         sig15(std::pow(1.0 + e.q() / e.p_star(), 1.0 / e.q() + 1.0 / e.p_star()))},
                        {"method", "closed-form"}};
    j["computed"] = {{"B", sig15(hardy::compute_B(w, e))},
                     {"delta_1", sig15(upper.steps.front().delta)},
                     {"extremal_quotient", sig15(hardy::quotient(x, w, e))},
                     {"method", "truncated-sum/refinement"}};
  } else {
    throw std::invalid_argument("unknown example: " + name);
  }
  emit(j.dump(2), out_path);
  return kExitOk;
}

struct SelfCheck {
  std::string name;
  bool passed;
  std::string detail;
};

int cmd_selftest(std::uint64_t seed, const std::string& inject_fault) {
  std::vector<SelfCheck> checks;
  auto record = [&](const std::string& name, bool ok, const std::string& detail) {
    checks.push_back({name, ok, detail});
  };

  {  // factor ordering on the exponent grid
    bool ok = true;
    double worst = 0.0;
    for (int i = 0; i < 50 && ok; ++i) {
      for (int jj = 0; jj < 50; ++jj) {
        const double p = 1.05 + (10.0 - 1.05) * i / 49.0;
        const double q = 1.05 + (10.0 - 1.05) * jj / 49.0;
        if (q < p) continue;
        const hardy::Exponents e(p, q);
        double k = hardy::sharp_k(e);
        double tk = hardy::tilde_k(e);
        if (inject_fault == "factor-order") std::swap(k, tk);
        worst = std::max(worst, k - tk);
        if (k > tk + 1e-12) {
          ok = false;
          break;
        }
      }
    }
    record("factor-order k <= tilde_k on 50x50 grid", ok,
           "worst slack " + format_number(worst));
    const double k22 = hardy::sharp_k(hardy::Exponents(2.0, 2.0));
    record("factor-value k(2,2) = 2", std::abs(k22 - 2.0) <= 1e-12,
           format_number(k22));
  }

  {  // incomplete Beta symmetry
    bool ok = true;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0.1, 20.0);
    for (int i = 0; i < 200; ++i) {
      const double a = dist(rng);
      const double b = dist(rng);
      const double x = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      const double lhs = hardy::incomplete_beta(a, b, x) +
                         hardy::incomplete_beta(b, a, 1.0 - x);
      const double rhs = hardy::beta_function(a, b);
      if (std::abs(lhs - rhs) > 1e-10 * std::max(1.0, rhs)) ok = false;
    }
    record("incomplete-beta symmetry identity", ok, "200 samples");
  }

  {  // geometric reproduction
    const hardy::GeometricFamily fam(0.5, 1.0);
    const hardy::Exponents e(2.0, 2.0);
    const hardy::WeightSpec w = fam.weights(400);
    const double b_val = hardy::compute_B(w, e);
    const double d1 = hardy::delta_upper(w, e).steps.front().delta;
    const hardy::LowerBounds lower = hardy::delta_lower(w, e);
    const bool ok = b_val >= 2.0 - 1e-6 && b_val <= 2.0 &&
                    std::abs(d1 - fam.closed_A()) <= 1e-2 &&
                    std::abs(lower.delta_tilde - fam.closed_delta_lower1()) <= 1e-2 &&
                    std::abs(lower.delta_bar - fam.closed_delta_lower1()) <= 1e-2;
    record("geometric closed-form reproduction", ok,
           "B=" + format_number(b_val) + " delta_1=" + format_number(d1));
  }

  {  // bliss reproduction
    const hardy::Exponents e(2.0, 4.0);
    const hardy::BlissFamily fam(e);
    const hardy::WeightSpec w = fam.weights(2000);
    const double b_val = hardy::compute_B(w, e);
    const double d1 = hardy::delta_upper(w, e).steps.front().delta;
    const double cap = std::pow(3.0, 0.75);
    const bool ok = b_val >= 1.0 - 1e-3 && b_val <= 1.0 && d1 <= cap + 1e-3;
    record("bliss base quantity and delta_1 cap", ok,
           "B=" + format_number(b_val) + " delta_1=" + format_number(d1));
  }

  {  // sandwich on random instances, both lower-iterate variants
    std::mt19937_64 rng(seed + 1);
    std::uniform_real_distribution<double> logw(-2.0, 2.0);
    bool ok_printed = true;
    bool ok_weighted = true;
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 1 + rng() % 10;
      const double p = std::uniform_real_distribution<double>(1.1, 5.0)(rng);
      const double q = std::uniform_real_distribution<double>(p, 5.0)(rng);
      const hardy::Exponents e(p, q);
      std::vector<double> u(n), v(n);
      for (auto& t : u) t = std::exp(logw(rng));
      for (auto& t : v) t = std::exp(logw(rng));
      const hardy::WeightSpec w = hardy::WeightSpec::from_vectors(u, v);
      const double b_val = hardy::compute_B(w, e);
      const double tk_b = hardy::tilde_k(e) * b_val;
      const auto upper = hardy::delta_upper(w, e);
      const double a_est = hardy::maximize_quotient(w, e).a_estimate;
      for (const bool weighted : {false, true}) {
        hardy::RefineOptions opts;
        opts.weighted_inner_sum = weighted;
        const auto low1 = hardy::delta_lower(w, e, 1, {}, opts);
        const auto low2 = hardy::delta_lower(w, e, 2, {}, opts);
        const double lo = std::max(low1.delta_tilde, low1.delta_bar);
        const double slack = 1e-9 * std::max(1.0, tk_b);
        const bool chain = b_val <= lo + slack && lo <= a_est + slack &&
                           std::max(low2.delta_tilde, low2.delta_bar) <= a_est + slack &&
                           a_est <= upper.steps.back().delta + slack &&
                           upper.steps.back().delta <= upper.steps.front().delta + slack &&
                           upper.steps.front().delta <= tk_b + slack;
        (weighted ? ok_weighted : ok_printed) &= chain;
      }
    }
    record("sandwich ordering (printed lower iterate)", ok_printed, "40 instances");
    record("sandwich ordering (weighted lower iterate)", ok_weighted, "40 instances");
  }

  {  // eigen certificate vs fixed point
    std::mt19937_64 rng(seed + 2);
    std::uniform_real_distribution<double> logw(-2.0, 2.0);
    bool ok = true;
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = 1 + rng() % 50;
      std::vector<double> u(n), v(n);
      for (auto& t : u) t = std::exp(logw(rng));
      for (auto& t : v) t = std::exp(logw(rng));
      const hardy::WeightSpec w = hardy::WeightSpec::from_vectors(u, v);
      hardy::OracleConfig cfg;
      cfg.max_iters = 100000;
      cfg.step_tol = 1e-15;
      const double a_fp =
          hardy::maximize_quotient(w, hardy::Exponents(2.0, 2.0), cfg).a_estimate;
      const double a_eig = hardy::eigen_check_p2q2(w, cfg);
      const double rel = std::abs(a_fp - a_eig) / std::max(a_fp, a_eig);
      worst = std::max(worst, rel);
      if (rel > 1e-8) ok = false;
    }
    record("eigen certificate agrees with fixed point (p=q=2)", ok,
           "worst rel diff " + format_number(worst));
  }

  {  // extension invariance
    std::mt19937_64 rng(seed + 3);
    std::uniform_real_distribution<double> logw(-2.0, 2.0);
    bool ok = true;
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 2 + rng() % 7;
      std::vector<double> u(n), v(n);
      for (auto& t : u) t = std::exp(logw(rng));
      for (auto& t : v) t = std::exp(logw(rng));
      const hardy::WeightSpec w = hardy::WeightSpec::from_vectors(u, v);
      const hardy::WeightSpec w_ext = hardy::extend_zero(w, n + 4);
      const hardy::Exponents e(2.0, 2.0);
      const double a = hardy::eigen_check_p2q2(w);
      const double a_ext = hardy::eigen_check_p2q2(w_ext);
      const double b_val = hardy::compute_B(w, e);
      const double b_ext = hardy::compute_B(w_ext, e);
      if (std::abs(a - a_ext) > 1e-8 * std::max(1.0, a)) ok = false;
      if (std::abs(b_val - b_ext) > 1e-12 * std::max(1.0, b_val)) ok = false;
    }
    record("zero-extension invariance of A and B", ok, "20 instances");
  }

  bool all_ok = true;
  for (const auto& check : checks) {
    std::cout << (check.passed ? "[ok]   " : "[FAIL] ") << check.name << " ("
              << check.detail << ")\n";
    all_ok &= check.passed;
  }
  std::cout << (all_ok ? "selftest: all checks passed\n"
                       : "selftest: at least one check failed\n");
  return all_ok ? kExitOk : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-sided bounds and refined estimates for the optimal constant "
               "in discrete weighted Hardy-type inequalities"};
  app.require_subcommand(1);

  ProblemFlags flags;
  std::string out_path;
  hardy::BoundOptions bound_opts;
  int refine_m = 5;
  double refine_tol = 1e-8;
  hardy::RefineOptions refine_variant;
  hardy::OracleConfig oracle_cfg;
  std::string oracle_method = "fixed_point";
  std::string example_name;
  std::uint64_t selftest_seed = 0;
  std::string inject_fault;

  CLI::App* bound = app.add_subcommand("bound", "compute the two-sided bound report");
  attach_problem_flags(bound, &flags);
  bound->add_option("--m", bound_opts.refine_m, "refinement steps for the upper sequence");
  bound->add_option("--tol", bound_opts.refine_tol, "refinement early-stop tolerance");
  bound->add_flag("--oracle", bound_opts.with_oracle, "include the brute-force oracle value");
  bound->add_option("--seed", bound_opts.oracle.seed, "oracle RNG seed");
  bound->add_option("--restarts", bound_opts.oracle.restarts, "oracle restarts");
  bound->add_option("--out", out_path, "write the JSON report here instead of stdout");

  CLI::App* refine = app.add_subcommand("refine", "emit the delta iteration trace as CSV");
  attach_problem_flags(refine, &flags);
  refine->add_option("--m", refine_m, "number of refinement steps");
  refine->add_option("--tol", refine_tol, "early-stop tolerance");
  refine->add_flag("--weighted-inner-sum", refine_variant.weighted_inner_sum,
                   "carry the u-weight inside the lower iterate's inner sum");
  refine->add_flag("--literal-ii-delta1", refine_variant.literal_ii_delta1,
                   "compute delta_1 with the lower-type double-summation operator");
  refine->add_option("--out", out_path, "write the CSV here instead of stdout");

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force maximization of the quotient");
  attach_problem_flags(oracle, &flags);
  oracle->add_option("--seed", oracle_cfg.seed, "RNG seed (default 0)");
  oracle->add_option("--restarts", oracle_cfg.restarts, "number of restarts");
  oracle->add_option("--max-iters", oracle_cfg.max_iters, "iteration cap per restart");
  oracle->add_option("--step-tol", oracle_cfg.step_tol, "stationarity tolerance");
  oracle->add_option("--method", oracle_method, "fixed_point | ascent | eigen_p2q2");
  oracle->add_option("--out", out_path, "write the JSON result here instead of stdout");

  CLI::App* example = app.add_subcommand("example", "reproduce a built-in closed-form example");
  attach_problem_flags(example, &flags);
  example->add_option("--name", example_name, "geometric | bliss")->required();
  example->add_option("--out", out_path, "write the JSON summary here instead of stdout");

  CLI::App* selftest = app.add_subcommand("selftest", "run the built-in invariant suite");
  selftest->add_option("--seed", selftest_seed, "RNG seed for the random checks");
  selftest->add_option("--inject-fault", inject_fault, "fault injection hook (testing)")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (bound->parsed()) return cmd_bound(flags, bound_opts, out_path);
    if (refine->parsed()) return cmd_refine(flags, refine_m, refine_tol, refine_variant, out_path);
    if (oracle->parsed()) {
      oracle_cfg.method = parse_method(oracle_method);
      return cmd_oracle(flags, oracle_cfg, out_path);
    }
    if (example->parsed()) return cmd_example(example_name, flags, out_path);
    if (selftest->parsed()) return cmd_selftest(selftest_seed, inject_fault);
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitParse;
  } catch (const std::domain_error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitParse;
  } catch (const nlohmann::json::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitParse;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitNoConvergence;
  }
  return kExitParse;
}
