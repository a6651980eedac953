#include "hardy/refine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include "hardy/numeric.hpp"
#include "hardy/parallel.hpp"

namespace hardy {
namespace {

// Rescale a nonnegative vector (x_1 > 0) so its total is 1, guarding the
// intermediate sum against overflow by dividing by the max entry first.
TestSequence normalize_to_unit_total(std::vector<double> raw) {
  double max_entry = 0.0;
  for (double t : raw) {
    if (!std::isfinite(t)) throw std::overflow_error("iterate overflowed");
    max_entry = std::max(max_entry, t);
  }
  if (max_entry <= 0.0) throw std::overflow_error("iterate vanished");
  for (double& t : raw) t /= max_entry;
  CompensatedSum total;
  for (double t : raw) total.add(t);
  const double total_val = total.value();
  for (double& t : raw) t /= total_val;
  return TestSequence(std::move(raw));
}

std::vector<double> upper_map_raw(const TestSequence& x, const WeightTables& t) {
  const std::size_t n = t.size();
  const double inner_exp = t.exponents().q() / t.exponents().p_star();
  const double outer_exp = t.exponents().p_star() / t.exponents().q();
  std::vector<double> weighted(n);
  for (std::size_t j = 1; j <= n; ++j) {
    weighted[j - 1] = t.u(j) * pow_conv(x.partial_sum(j), inner_exp);
  }
  const std::vector<double> inner_suffix = suffix_sums(weighted);
  std::vector<double> out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    out[i - 1] = t.v_hat(i) * pow_conv(inner_suffix[i], outer_exp);
  }
  return out;
}

std::vector<double> lower_map_raw(const TestSequence& y, const WeightTables& t,
                                  bool weighted_inner_sum) {
  const std::size_t n = t.size();
  const double inner_exp = t.exponents().q() - 1.0;
  const double outer_exp = t.exponents().p_star() - 1.0;
  std::vector<double> weighted(n);
  for (std::size_t j = 1; j <= n; ++j) {
    const double w = weighted_inner_sum ? t.u(j) : 1.0;
    weighted[j - 1] = w * pow_conv(y.partial_sum(j), inner_exp);
  }
  const std::vector<double> inner_suffix = suffix_sums(weighted);
  std::vector<double> out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    out[i - 1] = t.v_hat(i) * pow_conv(inner_suffix[i], outer_exp);
  }
  return out;
}

struct KScanValue {
  double delta_tilde = -kInfinity;
  double delta_bar = -kInfinity;
};

KScanValue evaluate_lower_at_k(std::size_t k, const WeightTables& t, int m,
                               bool weighted_inner_sum) {
  const std::size_t n = t.size();
  std::vector<double> y_raw(n, 0.0);
  for (std::size_t i = 1; i <= std::min(k, n); ++i) y_raw[i - 1] = t.v_hat(i);
  TestSequence y = normalize_to_unit_total(std::move(y_raw));
  for (int step = 1; step < m; ++step) {
    y = normalize_to_unit_total(lower_map_raw(y, t, weighted_inner_sum));
  }
  const Exponents& e = t.exponents();
  KScanValue out;
  const double norm = weighted_p_norm(y, t);
  const double inf_ii = OperatorScan(OperatorKind::ii, y, t).inf().value;
  out.delta_tilde = pow_conv(norm, e.p() / e.q() - 1.0) *
                    pow_conv(inf_ii, (e.p() - 1.0) / e.q());
  out.delta_bar = quotient(y, t);
  return out;
}

// Integer ternary search for a one-dimensional maximum; approximate
// unimodality is enough because the final window is scanned exhaustively.
template <typename F>
std::pair<std::size_t, double> refine_peak(F&& f, std::size_t lo, std::size_t hi) {
  std::map<std::size_t, double> cache;
  auto eval = [&](std::size_t k) {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    const double val = f(k);
    cache.emplace(k, val);
    return val;
  };
  while (hi - lo > 4) {
    const std::size_t m1 = lo + (hi - lo) / 3;
    const std::size_t m2 = hi - (hi - lo) / 3;
    if (eval(m1) < eval(m2)) {
      lo = m1 + 1;
    } else {
      hi = m2 - 1;
    }
  }
  std::size_t best_k = lo;
  double best = eval(lo);
  for (std::size_t k = lo + 1; k <= hi; ++k) {
    const double val = eval(k);
    if (val > best + 1e-12 * std::max(1.0, std::abs(best))) {
      best = val;
      best_k = k;
    }
  }
  return {best_k, best};
}

}  // namespace

TestSequence seed_upper(const WeightSpec& w, const Exponents& e) {
  const std::size_t n = w.size();
  const double alpha = e.alpha();
  // Prefix of v_hat in extended precision: geometric-type weights overflow
  // binary64 well before the normalized seed does.
  std::vector<long double> prefix(n + 1, 0.0L);
  for (std::size_t i = 1; i <= n; ++i) {
    prefix[i] = prefix[i - 1] + static_cast<long double>(v_hat(w, e, i));
  }
  const long double total = prefix[n];
  if (!(total > 0.0L)) throw std::domain_error("v_hat prefix is not positive");

  const long double canonical_top = powl(total, static_cast<long double>(alpha));
  const bool canonical_ok =
      std::isfinite(static_cast<double>(canonical_top)) &&
      static_cast<double>(canonical_top) > 0.0;
  const long double scale = canonical_ok ? 1.0L : 1.0L / canonical_top;

  std::vector<double> x(n);
  long double prev = 0.0L;
  for (std::size_t i = 1; i <= n; ++i) {
    const long double cur =
        powl(prefix[i] / total, static_cast<long double>(alpha)) * canonical_top * scale;
    x[i - 1] = static_cast<double>(cur - prev);
    if (i > 1 && x[i - 1] < 0.0) x[i - 1] = 0.0;  // rounding guard
    prev = cur;
  }
  return TestSequence(std::move(x));
}

TestSequence iterate_upper(const TestSequence& x, const WeightSpec& w,
                           const Exponents& e) {
  return normalize_to_unit_total(upper_map_raw(x, WeightTables(w, e)));
}

UpperTrace delta_upper(const WeightSpec& w, const Exponents& e,
                       const RefineOptions& opts) {
  if (opts.m_max < 1) throw std::invalid_argument("m_max must be >= 1");
  const WeightTables tables(w, e);
  const double inv_ps = 1.0 / e.p_star();

  UpperTrace trace;
  TestSequence x = seed_upper(w, e);

  const OperatorKind delta1_kind =
      opts.literal_ii_delta1 ? OperatorKind::ii : OperatorKind::ii_star;
  ExtremumResult s = OperatorScan(delta1_kind, x, tables).sup();
  trace.steps.push_back(
      {1, pow_conv(s.value, inv_ps), s.index, s.at_boundary});
  if (!std::isfinite(trace.steps.back().delta)) {
    trace.status = RefinementStatus::diverged;
    trace.final_iterate = x;
    return trace;
  }

  x = x.normalized();
  for (int m = 2; m <= opts.m_max; ++m) {
    try {
      x = normalize_to_unit_total(upper_map_raw(x, tables));
    } catch (const std::overflow_error&) {
      trace.status = RefinementStatus::diverged;
      break;
    }
    s = OperatorScan(OperatorKind::ii_star, x, tables).sup();
    const double delta = pow_conv(s.value, inv_ps);
    trace.steps.push_back({m, delta, s.index, s.at_boundary});
    if (!std::isfinite(delta)) {
      trace.status = RefinementStatus::diverged;
      break;
    }
    const double prev = trace.steps[trace.steps.size() - 2].delta;
    if (std::isfinite(prev) && prev - delta < opts.tol) {
      trace.status = RefinementStatus::converged;
      break;
    }
  }
  trace.final_iterate = x;
  return trace;
}

TestSequence seed_lower(const WeightSpec& w, const Exponents& e, std::size_t k) {
  if (k < 1 || k > w.size()) throw std::out_of_range("k outside [1, N]");
  std::vector<double> y(w.size(), 0.0);
  for (std::size_t i = 1; i <= k; ++i) y[i - 1] = v_hat(w, e, i);
  return TestSequence(std::move(y));
}

TestSequence iterate_lower(const TestSequence& y, const WeightSpec& w,
                           const Exponents& e, bool weighted_inner_sum) {
  if (!std::isfinite(weighted_p_norm_pth_power(y, w, e))) {
    throw std::domain_error("iterate rejected: weighted p-norm not finite at this truncation");
  }
  return normalize_to_unit_total(lower_map_raw(y, WeightTables(w, e), weighted_inner_sum));
}

std::vector<std::size_t> default_k_grid(std::size_t n) {
  std::vector<std::size_t> grid;
  if (n <= 512) {
    grid.resize(n);
    for (std::size_t k = 1; k <= n; ++k) grid[k - 1] = k;
    return grid;
  }
  for (std::size_t k = 1; k < n; k *= 2) grid.push_back(k);
  grid.push_back(n);
  return grid;
}

LowerBounds delta_lower(const WeightSpec& w, const Exponents& e, int m,
                        std::span<const std::size_t> k_grid,
                        const RefineOptions& opts) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  const WeightTables tables(w, e);
  const bool default_grid = k_grid.empty();
  std::vector<std::size_t> grid(k_grid.begin(), k_grid.end());
  if (default_grid) grid = default_k_grid(w.size());
  for (std::size_t k : grid) {
    if (k < 1 || k > w.size()) throw std::out_of_range("k grid entry outside [1, N]");
  }

  const auto values = parallel_map(grid.size(), [&](std::size_t idx) {
    return evaluate_lower_at_k(grid[idx], tables, m, opts.weighted_inner_sum);
  });

  LowerBounds best;
  best.delta_tilde = values[0].delta_tilde;
  best.delta_bar = values[0].delta_bar;
  best.k_tilde = best.k_bar = grid[0];
  std::size_t tilde_pos = 0;
  std::size_t bar_pos = 0;
  for (std::size_t idx = 1; idx < grid.size(); ++idx) {
    // ties within 1e-12 keep the smaller k
    const double tilde_margin = 1e-12 * std::max(1.0, std::abs(best.delta_tilde));
    if (values[idx].delta_tilde > best.delta_tilde + tilde_margin) {
      best.delta_tilde = values[idx].delta_tilde;
      best.k_tilde = grid[idx];
      tilde_pos = idx;
    }
    const double bar_margin = 1e-12 * std::max(1.0, std::abs(best.delta_bar));
    if (values[idx].delta_bar > best.delta_bar + bar_margin) {
      best.delta_bar = values[idx].delta_bar;
      best.k_bar = grid[idx];
      bar_pos = idx;
    }
  }

  // Default coarse grid: polish each objective between the neighbors of its
  // peak.  Explicit grids are honored as given.
  if (default_grid && grid.size() < w.size()) {
    auto window = [&](std::size_t pos) {
      const std::size_t lo = pos == 0 ? 1 : grid[pos - 1];
      const std::size_t hi = pos + 1 < grid.size() ? grid[pos + 1] : grid.back();
      return std::pair<std::size_t, std::size_t>{lo, hi};
    };
    {
      const auto [lo, hi] = window(tilde_pos);
      const auto [k, val] = refine_peak(
          [&](std::size_t k) {
            return evaluate_lower_at_k(k, tables, m, opts.weighted_inner_sum).delta_tilde;
          },
          lo, hi);
      if (val > best.delta_tilde) {
        best.delta_tilde = val;
        best.k_tilde = k;
      }
    }
    {
      const auto [lo, hi] = window(bar_pos);
      const auto [k, val] = refine_peak(
          [&](std::size_t k) {
            return evaluate_lower_at_k(k, tables, m, opts.weighted_inner_sum).delta_bar;
          },
          lo, hi);
      if (val > best.delta_bar) {
        best.delta_bar = val;
        best.k_bar = k;
      }
    }
  }
  return best;
}

}  // namespace hardy
