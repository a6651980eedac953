#pragma once

#include <cstddef>
#include <vector>

#include "hardy/exponents.hpp"
#include "hardy/test_sequence.hpp"
#include "hardy/weights.hpp"

namespace hardy {

/// The four variational operators.
///   i_star / ii_star: exponent q/p* inside the u-weighted suffix sum and
///   p*/q outside (upper estimates).
///   i / ii: exponent q-1 inside and p*-1 outside (lower estimates).
/// The starred pair is homogeneous of degree 0 in x; the unstarred pair is
/// not (degree (q-p)/(p-1)), which is why the lower bound combines them with
/// a norm factor.
enum class OperatorKind { i_star, ii_star, i, ii };

/// Cached per-(weights, exponents) tables: v_hat values, compensated prefix
/// sums of v_hat, and backward-accumulated suffix sums of u.  Every operator
/// evaluation needs these; forward re-summation would be O(N^2).
class WeightTables {
 public:
  WeightTables(const WeightSpec& w, const Exponents& e);

  std::size_t size() const { return u_.size(); }
  const Exponents& exponents() const { return e_; }

  double u(std::size_t i) const { return u_[i - 1]; }            // 1-based
  double v(std::size_t i) const { return v_[i - 1]; }            // 1-based
  double v_hat(std::size_t i) const { return v_hat_[i - 1]; }    // 1-based
  double v_hat_prefix(std::size_t n) const { return v_hat_prefix_[n]; }  // n in [0,N]
  double u_suffix(std::size_t n) const { return u_suffix_[n]; }  // n in [1,N+1]

 private:
  Exponents e_;
  std::vector<double> u_;
  std::vector<double> v_;
  std::vector<double> v_hat_;
  std::vector<double> v_hat_prefix_;
  std::vector<double> u_suffix_;
};

struct ExtremumResult {
  double value = 0.0;
  std::size_t index = 0;   // attaining n, 1-based
  bool at_boundary = false;  // extremum at n == N: increase truncation
};

struct BScanResult {
  double value = 0.0;
  std::size_t index = 0;
  bool at_boundary = false;
  bool overflow = false;  // value reported as +infinity with this diagnostic
};

/// B = sup_n (sum_{i<=n} v_hat_i)^(1/p*) * (sum_{j=n..N} u_j)^(1/q).
/// The per-n combine runs in extended precision so that comparisons against
/// closed-form endpoints are not lost to the final rounding.
BScanResult compute_B_scan(const WeightTables& t);
double compute_B(const WeightSpec& w, const Exponents& e);

/// One-pass evaluator for a fixed (kind, x): builds the inner u-weighted
/// suffix array once, then serves any n in O(1).
class OperatorScan {
 public:
  OperatorScan(OperatorKind kind, const TestSequence& x, const WeightTables& t);

  std::size_t size() const { return n_; }
  /// Value at n (1-based).  +infinity when the denominator vanishes
  /// (x_n = 0 for the single-summation kinds), per the 1/0 convention.
  double at(std::size_t n) const;
  ExtremumResult sup() const;
  ExtremumResult inf() const;

 private:
  std::size_t n_;
  OperatorKind kind_;
  const TestSequence* x_;
  std::vector<double> single_;  // kinds i/i_star: v_hat_n * T(n)^eta
  std::vector<double> double_prefix_;  // kinds ii/ii_star: prefix of v_hat_i * T(i)^eta
};

double evaluate_operator(OperatorKind kind, const TestSequence& x,
                         const WeightSpec& w, const Exponents& e,
                         std::size_t n);
ExtremumResult sup_operator(OperatorKind kind, const TestSequence& x,
                            const WeightSpec& w, const Exponents& e);
ExtremumResult inf_operator(OperatorKind kind, const TestSequence& x,
                            const WeightSpec& w, const Exponents& e);

/// The Hardy quotient ||Hx||_{l^q(u)} / ||x||_{l^p(v)}.  Scale-invariant;
/// evaluated on the internally normalized copy of x to avoid overflow.
double quotient(const TestSequence& x, const WeightTables& t);
double quotient(const TestSequence& x, const WeightSpec& w, const Exponents& e);

/// ||x||_{l^p(v)}.
double weighted_p_norm(const TestSequence& x, const WeightTables& t);

}  // namespace hardy
