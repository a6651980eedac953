#include "hardy/intervals.hpp"

#include <cmath>
#include <stdexcept>

#include "hardy/operators.hpp"
#include "hardy/refine.hpp"

namespace hardy {

WeightSpec restrict(const WeightSpec& w, std::size_t n) {
  if (n < 1) throw std::invalid_argument("restriction length must be >= 1");
  if (n > w.size()) throw std::out_of_range("restriction length exceeds current interval");
  std::vector<double> u(w.u_raw().begin(), w.u_raw().begin() + n);
  std::vector<double> v(w.v_raw().begin(), w.v_raw().begin() + n);
  if (w.zero_tail_begin() <= n) {
    return WeightSpec::with_zero_tail(std::move(u), std::move(v), w.zero_tail_begin());
  }
  return WeightSpec::from_vectors(std::move(u), std::move(v));
}

WeightSpec extend_zero(const WeightSpec& w, std::size_t n_prime, double v_fill) {
  const std::vector<double> fill(n_prime > w.size() ? n_prime - w.size() : 0, v_fill);
  return extend_zero(w, n_prime, fill);
}

WeightSpec extend_zero(const WeightSpec& w, std::size_t n_prime,
                       std::span<const double> v_fill) {
  const std::size_t n = w.size();
  if (n_prime < n) throw std::invalid_argument("extension must not shrink the interval");
  if (n_prime == n) return w;
  if (v_fill.size() != n_prime - n) {
    throw std::invalid_argument("v_fill must supply one value per new index");
  }
  std::vector<double> u(w.u_raw());
  std::vector<double> v(w.v_raw());
  u.resize(n_prime, 0.0);
  v.insert(v.end(), v_fill.begin(), v_fill.end());
  const std::size_t zero_from = std::min(w.zero_tail_begin(), n + 1);
  return WeightSpec::with_zero_tail(std::move(u), std::move(v), zero_from);
}

ConvergenceTrace converge_in_N(const WeightSpec& half_line_family,
                               const Exponents& e, LimitQuantity quantity,
                               const TruncationPolicy& policy,
                               const OracleConfig& oracle_cfg) {
  if (!policy.is_doubling()) {
    throw std::invalid_argument("converge_in_N requires a doubling policy");
  }
  if (!half_line_family.has_generators() || !half_line_family.half_line()) {
    throw std::invalid_argument("converge_in_N requires a half-line family with generators");
  }

  auto evaluate = [&](const WeightSpec& w) {
    switch (quantity) {
      case LimitQuantity::base_b:
        return compute_B(w, e);
      case LimitQuantity::delta1: {
        RefineOptions opts;
        opts.m_max = 1;
        return delta_upper(w, e, opts).steps.front().delta;
      }
      case LimitQuantity::oracle_a:
        return maximize_quotient(w, e, oracle_cfg).a_estimate;
    }
    throw std::logic_error("unknown quantity");
  };

  ConvergenceTrace trace;
  double prev = 0.0;
  bool have_prev = false;
  for (std::size_t n = policy.n_start(); n <= policy.n_max(); n *= 2) {
    double val = 0.0;
    try {
      const WeightSpec w = half_line_family.materialized_at(n);
      val = evaluate(w);
    } catch (const std::exception& err) {
      // e.g. generator underflow at large N; surface it, keep the best value
      trace.note = std::string("stopped at N=") + std::to_string(n) + ": " + err.what();
      break;
    }
    trace.steps.emplace_back(n, val);
    trace.value = val;
    if (!std::isfinite(val)) break;  // diverging quantity; doubling cannot help
    if (have_prev && std::abs(val - prev) < policy.tail_tolerance()) {
      trace.converged = true;
      break;
    }
    prev = val;
    have_prev = true;
    if (n > policy.n_max() / 2) break;  // next doubling would exceed n_max
  }
  return trace;
}

}  // namespace hardy
