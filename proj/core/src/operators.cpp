#include "hardy/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "hardy/numeric.hpp"

namespace hardy {

WeightTables::WeightTables(const WeightSpec& w, const Exponents& e)
    : e_(e), u_(w.u_raw()), v_(w.v_raw()) {
  const std::size_t n = u_.size();
  v_hat_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    v_hat_[i] = pow_conv(v_[i], 1.0 - e.p_star());
  }
  v_hat_prefix_ = prefix_sums(v_hat_);
  u_suffix_ = suffix_sums(u_);
}

BScanResult compute_B_scan(const WeightTables& t) {
  const std::size_t n = t.size();
  const long double inv_ps = 1.0L / static_cast<long double>(t.exponents().p_star());
  const long double inv_q = 1.0L / static_cast<long double>(t.exponents().q());
  BScanResult best;
  long double best_val = -1.0L;
  for (std::size_t i = 1; i <= n; ++i) {
    const long double pre = t.v_hat_prefix(i);
    const long double suf = t.u_suffix(i);
    const long double val = powl(pre, inv_ps) * powl(suf, inv_q);
    if (!std::isfinite(static_cast<double>(val))) {
      best.value = kInfinity;
      best.index = i;
      best.overflow = true;
      best.at_boundary = (i == n);
      return best;
    }
    if (val > best_val) {
      best_val = val;
      best.index = i;
    }
  }
  best.value = static_cast<double>(best_val);
  best.at_boundary = (best.index == n);
  return best;
}

double compute_B(const WeightSpec& w, const Exponents& e) {
  return compute_B_scan(WeightTables(w, e)).value;
}

OperatorScan::OperatorScan(OperatorKind kind, const TestSequence& x,
                           const WeightTables& t)
    : n_(t.size()), kind_(kind), x_(&x) {
  if (x.size() != n_) {
    throw std::invalid_argument("sequence and weights must have equal length");
  }
  const bool starred = kind == OperatorKind::i_star || kind == OperatorKind::ii_star;
  const double inner_exp = starred ? t.exponents().q() / t.exponents().p_star()
                                   : t.exponents().q() - 1.0;
  const double outer_exp = starred ? t.exponents().p_star() / t.exponents().q()
                                   : t.exponents().p_star() - 1.0;

  // T(i) = sum_{j=i..N} u_j (H x(j))^inner_exp, backward accumulated.
  std::vector<double> weighted(n_);
  for (std::size_t j = 1; j <= n_; ++j) {
    weighted[j - 1] = t.u(j) * pow_conv(x.partial_sum(j), inner_exp);
  }
  const std::vector<double> inner_suffix = suffix_sums(weighted);

  const bool single = kind == OperatorKind::i_star || kind == OperatorKind::i;
  if (single) {
    single_.resize(n_);
    for (std::size_t i = 1; i <= n_; ++i) {
      single_[i - 1] = t.v_hat(i) * pow_conv(inner_suffix[i], outer_exp);
    }
  } else {
    std::vector<double> terms(n_);
    for (std::size_t i = 1; i <= n_; ++i) {
      terms[i - 1] = t.v_hat(i) * pow_conv(inner_suffix[i], outer_exp);
    }
    double_prefix_ = prefix_sums(terms);
  }
}

double OperatorScan::at(std::size_t n) const {
  if (n < 1 || n > n_) throw std::out_of_range("operator index out of range");
  if (kind_ == OperatorKind::i_star || kind_ == OperatorKind::i) {
    const double xn = x_->x(n);
    if (xn == 0.0) return kInfinity;  // 1/0 convention
    return single_[n - 1] / xn;
  }
  const double hx = x_->partial_sum(n);
  if (hx == 0.0) return kInfinity;  // cannot occur for valid x (x_1 > 0)
  return double_prefix_[n] / hx;
}

ExtremumResult OperatorScan::sup() const {
  ExtremumResult best{-kInfinity, 1, false};
  for (std::size_t n = 1; n <= n_; ++n) {
    const double val = at(n);
    if (val > best.value) {
      best.value = val;
      best.index = n;
    }
  }
  best.at_boundary = (best.index == n_);
  return best;
}

ExtremumResult OperatorScan::inf() const {
  ExtremumResult best{kInfinity, 1, false};
  for (std::size_t n = 1; n <= n_; ++n) {
    const double val = at(n);
    if (val < best.value) {
      best.value = val;
      best.index = n;
    }
  }
  best.at_boundary = (best.index == n_);
  return best;
}

double evaluate_operator(OperatorKind kind, const TestSequence& x,
                         const WeightSpec& w, const Exponents& e,
                         std::size_t n) {
  return OperatorScan(kind, x, WeightTables(w, e)).at(n);
}

ExtremumResult sup_operator(OperatorKind kind, const TestSequence& x,
                            const WeightSpec& w, const Exponents& e) {
  return OperatorScan(kind, x, WeightTables(w, e)).sup();
}

ExtremumResult inf_operator(OperatorKind kind, const TestSequence& x,
                            const WeightSpec& w, const Exponents& e) {
  return OperatorScan(kind, x, WeightTables(w, e)).inf();
}

double quotient(const TestSequence& x, const WeightTables& t) {
  if (x.size() != t.size()) {
    throw std::invalid_argument("sequence and weights must have equal length");
  }
  const double total = x.partial_sum(x.size());
  CompensatedSum num;
  CompensatedSum den;
  const double q = t.exponents().q();
  const double p = t.exponents().p();
  for (std::size_t n = 1; n <= x.size(); ++n) {
    num.add(t.u(n) * pow_conv(x.partial_sum(n) / total, q));
    den.add(t.v(n) * pow_conv(x.x(n) / total, p));
  }
  const double den_val = den.value();
  if (den_val == 0.0) return kInfinity;
  return pow_conv(num.value(), 1.0 / q) / pow_conv(den_val, 1.0 / p);
}

double quotient(const TestSequence& x, const WeightSpec& w, const Exponents& e) {
  return quotient(x, WeightTables(w, e));
}

double weighted_p_norm(const TestSequence& x, const WeightTables& t) {
  CompensatedSum acc;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    acc.add(t.v(i) * pow_conv(x.x(i), t.exponents().p()));
  }
  return pow_conv(acc.value(), 1.0 / t.exponents().p());
}

}  // namespace hardy
