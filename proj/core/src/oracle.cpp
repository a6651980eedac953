#include "hardy/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>

#include "hardy/numeric.hpp"
#include "hardy/operators.hpp"
#include "hardy/parallel.hpp"
#include "hardy/refine.hpp"

namespace hardy {
namespace {

std::vector<double> normalized_positive(std::vector<double> raw) {
  double max_entry = 0.0;
  for (double t : raw) max_entry = std::max(max_entry, t);
  for (double& t : raw) t /= max_entry;
  CompensatedSum total;
  for (double t : raw) total.add(t);
  for (double& t : raw) t /= total.value();
  return raw;
}

// Stationarity map of the quotient; coincides with power iteration at p=q=2.
std::vector<double> stationarity_map(const TestSequence& x, const WeightTables& t) {
  const std::size_t n = t.size();
  const double inner_exp = t.exponents().q() - 1.0;
  const double outer_exp = t.exponents().p_star() - 1.0;
  std::vector<double> weighted(n);
  for (std::size_t j = 1; j <= n; ++j) {
    weighted[j - 1] = t.u(j) * pow_conv(x.partial_sum(j), inner_exp);
  }
  const std::vector<double> suffix = suffix_sums(weighted);
  std::vector<double> out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    out[i - 1] = t.v_hat(i) * pow_conv(suffix[i], outer_exp);
  }
  return out;
}

struct RestartRun {
  double best = -kInfinity;
  std::vector<double> best_x;
  int iterations = 0;
  bool converged = false;
  std::vector<double> trace;
};

RestartRun run_fixed_point(std::vector<double> start, const WeightTables& t,
                           const OracleConfig& cfg) {
  RestartRun run;
  TestSequence x(normalized_positive(std::move(start)));
  double prev_q = quotient(x, t);
  run.best = prev_q;
  run.best_x = x.raw();
  run.trace.push_back(prev_q);
  for (int it = 1; it <= cfg.max_iters; ++it) {
    x = TestSequence(normalized_positive(stationarity_map(x, t)));
    const double qv = quotient(x, t);
    run.trace.push_back(qv);
    run.iterations = it;
    if (qv > run.best) {
      run.best = qv;
      run.best_x = x.raw();
    }
    if (std::abs(qv - prev_q) <= cfg.step_tol * std::max(1.0, std::abs(qv))) {
      run.converged = true;
      break;
    }
    prev_q = qv;
  }
  return run;
}

RestartRun run_ascent(std::vector<double> start, const WeightTables& t,
                      const OracleConfig& cfg) {
  const std::size_t n = t.size();
  const double p = t.exponents().p();
  const double q = t.exponents().q();

  RestartRun run;
  std::vector<double> x = normalized_positive(std::move(start));
  for (double& xi : x) xi = std::max(xi, kPowFloor);
  double f = quotient(TestSequence(x), t);
  run.best = f;
  run.best_x = x;
  run.trace.push_back(f);

  int stalls = 0;
  for (int it = 1; it <= cfg.max_iters; ++it) {
    run.iterations = it;
    const TestSequence seq(x);
    CompensatedSum num_acc;
    CompensatedSum den_acc;
    std::vector<double> hq(n);
    for (std::size_t j = 1; j <= n; ++j) {
      hq[j - 1] = t.u(j) * pow_conv(seq.partial_sum(j), q - 1.0);
      num_acc.add(hq[j - 1] * seq.partial_sum(j));
      den_acc.add(t.v(j) * pow_conv(x[j - 1], p));
    }
    const double num = num_acc.value();
    const double den = den_acc.value();
    const std::vector<double> suffix = suffix_sums(hq);
    std::vector<double> grad(n);
    for (std::size_t k = 1; k <= n; ++k) {
      grad[k - 1] = suffix[k] / num - t.v(k) * pow_conv(x[k - 1], p - 1.0) / den;
    }

    double step = 1.0;
    bool improved = false;
    while (step > 1e-18) {
      std::vector<double> cand(n);
      for (std::size_t i = 0; i < n; ++i) {
        cand[i] = std::max(x[i] + step * grad[i], kPowFloor);
      }
      cand = normalized_positive(std::move(cand));
      const double fc = quotient(TestSequence(cand), t);
      if (fc > f) {
        x = std::move(cand);
        f = fc;
        improved = true;
        break;
      }
      step *= 0.5;
    }
    run.trace.push_back(f);
    if (f > run.best) {
      run.best = f;
      run.best_x = x;
    }
    if (!improved) {
      if (++stalls >= 2) {
        run.converged = true;
        break;
      }
    } else {
      stalls = 0;
    }
  }
  return run;
}

struct EigenRun {
  double value = 0.0;
  std::vector<double> x_star;
  int iterations = 0;
  bool converged = false;
  std::vector<double> trace;
};

EigenRun run_eigen_p2q2(const WeightTables& t, const OracleConfig& cfg) {
  const std::size_t n = t.size();
  std::vector<double> z(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> w(n);
  EigenRun run;
  double prev_rho = 0.0;
  const int iters = std::max(cfg.max_iters, 16);
  for (int it = 1; it <= iters; ++it) {
    // w = Dv^{-1/2} H^T Du H Dv^{-1/2} z, matrix-free via prefix/suffix sums
    CompensatedSum acc;
    for (std::size_t i = 0; i < n; ++i) {
      acc.add(z[i] / std::sqrt(t.v(i + 1)));
      w[i] = t.u(i + 1) * acc.value();
    }
    CompensatedSum back;
    for (std::size_t i = n; i >= 1; --i) {
      back.add(w[i - 1]);
      w[i - 1] = back.value() / std::sqrt(t.v(i));
    }
    double dot = 0.0;
    double norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      dot += z[i] * w[i];
      norm2 += z[i] * z[i];
    }
    const double rho = dot / norm2;
    run.trace.push_back(std::sqrt(std::max(rho, 0.0)));
    run.iterations = it;
    double wnorm = 0.0;
    for (double wi : w) wnorm += wi * wi;
    wnorm = std::sqrt(wnorm);
    if (wnorm == 0.0) break;
    for (std::size_t i = 0; i < n; ++i) z[i] = w[i] / wnorm;
    if (it > 4 && std::abs(rho - prev_rho) <= 1e-15 * std::max(1.0, rho)) {
      run.converged = true;
      prev_rho = rho;
      break;
    }
    prev_rho = rho;
  }
  run.value = std::sqrt(std::max(prev_rho, 0.0));
  run.x_star.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    run.x_star[i] = std::max(z[i], 0.0) / std::sqrt(t.v(i + 1));
  }
  return run;
}

std::vector<std::vector<double>> build_starts(const WeightSpec& w,
                                              const Exponents& e,
                                              const OracleConfig& cfg) {
  const std::size_t n = w.size();
  std::vector<std::vector<double>> starts;
  starts.push_back(seed_upper(w, e).raw());
  std::vector<double> vh(n);
  for (std::size_t i = 1; i <= n; ++i) vh[i - 1] = v_hat(w, e, i);
  starts.push_back(std::move(vh));
  starts.push_back(std::vector<double>(n, 1.0));
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> dist(0.1, 1.0);
  while (starts.size() < static_cast<std::size_t>(std::max(cfg.restarts, 1))) {
    std::vector<double> r(n);
    for (double& t : r) t = dist(rng);
    starts.push_back(std::move(r));
  }
  starts.resize(std::max(cfg.restarts, 1));
  return starts;
}

void require_p2q2(const Exponents& e) {
  if (std::abs(e.p() - 2.0) > 1e-12 || std::abs(e.q() - 2.0) > 1e-12) {
    throw std::domain_error("eigenvalue certificate requires p = q = 2");
  }
}

}  // namespace

OracleResult maximize_quotient(const WeightSpec& w, const Exponents& e,
                               const OracleConfig& cfg) {
  const WeightTables tables(w, e);
  OracleResult result;

  if (cfg.method == OracleMethod::eigen_p2q2) {
    require_p2q2(e);
    const EigenRun run = run_eigen_p2q2(tables, cfg);
    result.a_estimate = run.value;
    result.x_star = TestSequence(normalized_positive(run.x_star)).normalized();
    result.iterations_used = run.iterations;
    result.converged = run.converged;
    result.residual_trace = run.trace;
    return result;
  }

  const auto starts = build_starts(w, e, cfg);
  const auto runs = parallel_map(starts.size(), [&](std::size_t idx) {
    auto start = starts[idx];
    return cfg.method == OracleMethod::fixed_point
               ? run_fixed_point(std::move(start), tables, cfg)
               : run_ascent(std::move(start), tables, cfg);
  });

  std::size_t winner = 0;
  for (std::size_t idx = 1; idx < runs.size(); ++idx) {
    // ties within 1e-12 keep the lowest restart index
    if (runs[idx].best > runs[winner].best +
                             1e-12 * std::max(1.0, std::abs(runs[winner].best))) {
      winner = idx;
    }
  }
  const RestartRun& win = runs[winner];
  result.a_estimate = win.best;
  result.x_star = TestSequence(win.best_x);
  result.iterations_used = win.iterations;
  result.converged = win.converged;
  result.residual_trace = win.trace;
  return result;
}

double eigen_check_p2q2(const WeightSpec& w, const OracleConfig& cfg) {
  const Exponents e(2.0, 2.0);
  require_p2q2(e);
  return run_eigen_p2q2(WeightTables(w, e), cfg).value;
}

MonotoneCheck check_maximizer_monotone(const TestSequence& x_star,
                                       const WeightSpec& w, const Exponents& e) {
  const std::size_t n = x_star.size();
  MonotoneCheck check;
  std::vector<std::size_t> violations;
  double prev = x_star.x(1) / v_hat(w, e, 1);
  for (std::size_t i = 2; i <= n; ++i) {
    const double cur = x_star.x(i) / v_hat(w, e, i);
    if (cur > prev * (1.0 + 1e-6) + 1e-300) {
      violations.push_back(i);
    }
    prev = cur;
  }
  if (violations.empty()) return check;
  check.decreasing = false;
  check.first_violation = violations.front();
  check.boundary_only = violations.front() > 0.95 * static_cast<double>(n);
  return check;
}

}  // namespace hardy
