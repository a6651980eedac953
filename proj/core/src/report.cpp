#include "hardy/report.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hardy/factors.hpp"
#include "hardy/numeric.hpp"
#include "hardy/operators.hpp"

namespace hardy {
namespace {

std::string status_name(RefinementStatus s) {
  switch (s) {
    case RefinementStatus::improving: return "improving";
    case RefinementStatus::converged: return "converged";
    case RefinementStatus::diverged: return "diverged";
  }
  return "unknown";
}

}  // namespace

BoundReport assemble_bound_report(const WeightSpec& w, const Exponents& e,
                                  const BoundOptions& opts) {
  BoundReport report(e);
  report.truncation_used = w.size();

  const WeightTables tables(w, e);
  const BScanResult b = compute_B_scan(tables);
  report.b_value = b.value;
  report.lower_bounds.push_back({"B", b.value, "truncated-sum"});
  report.diagnostics.emplace_back("B_attaining_n", std::to_string(b.index));
  if (b.overflow) report.diagnostics.emplace_back("B_overflow", "true");
  if (b.at_boundary) {
    report.diagnostics.emplace_back("B_note", "extremum at boundary - increase truncation");
  }

  const FactorPair factors = factor_pair(e);
  report.upper_bounds.push_back({"k_qp_times_B", factors.k * b.value, "truncated-sum"});
  report.upper_bounds.push_back(
      {"tilde_k_qp_times_B", factors.tilde_k * b.value, "truncated-sum"});

  RefineOptions refine_opts = opts.refine;
  refine_opts.m_max = std::max(opts.refine_m, 1);
  refine_opts.tol = opts.refine_tol;
  const UpperTrace upper = delta_upper(w, e, refine_opts);
  report.upper_bounds.push_back({"delta_1", upper.steps.front().delta, "refinement"});
  if (upper.steps.size() > 1) {
    const UpperStep& last = upper.steps.back();
    report.upper_bounds.push_back(
        {"delta_" + std::to_string(last.m), last.delta, "refinement"});
  }
  report.diagnostics.emplace_back("refine_status", status_name(upper.status));
  report.diagnostics.emplace_back("delta_1_attaining_n",
                                  std::to_string(upper.steps.front().attaining_n));
  if (upper.steps.front().at_boundary) {
    report.diagnostics.emplace_back("delta_1_note",
                                    "extremum at boundary - increase truncation");
  }

  const LowerBounds lower = delta_lower(w, e, 1, {}, refine_opts);
  report.lower_bounds.push_back({"delta_tilde_1", lower.delta_tilde, "refinement"});
  report.lower_bounds.push_back({"delta_bar_1", lower.delta_bar, "refinement"});
  report.diagnostics.emplace_back("delta_tilde_1_attaining_k",
                                  std::to_string(lower.k_tilde));
  report.diagnostics.emplace_back("delta_bar_1_attaining_k",
                                  std::to_string(lower.k_bar));

  if (opts.with_oracle) {
    const OracleResult oracle = maximize_quotient(w, e, opts.oracle);
    report.lower_bounds.push_back({"oracle", oracle.a_estimate, "oracle"});
    report.diagnostics.emplace_back("oracle_converged",
                                    oracle.converged ? "true" : "false");
    report.diagnostics.emplace_back("oracle_iterations",
                                    std::to_string(oracle.iterations_used));
  }

  double max_lower = -kInfinity;
  double min_upper = kInfinity;
  for (const auto& lv : report.lower_bounds) max_lower = std::max(max_lower, lv.value);
  for (const auto& uv : report.upper_bounds) min_upper = std::min(min_upper, uv.value);
  const double slack = report.ordering_tolerance *
                       std::max({1.0, std::abs(max_lower), std::abs(min_upper)});
  report.ordering_ok = !(max_lower > min_upper + slack);
  return report;
}

}  // namespace hardy
