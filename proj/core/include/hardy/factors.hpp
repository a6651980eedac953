#pragma once

#include "hardy/exponents.hpp"

namespace hardy {

/// log of the complete Beta function, via lgamma.
double log_beta(double a, double b);

/// Complete Beta function B(a, b) = integral_0^1 x^(a-1) (1-x)^(b-1) dx.
/// Relative error <= ~1e-12 for a, b <= 100.
double beta_function(double a, double b);

/// Regularized incomplete Beta I_x(a, b) in [0, 1], continued-fraction
/// evaluation with the symmetry switch at x = (a+1)/(a+b+2).
double regularized_incomplete_beta(double a, double b, double x);

/// Unnormalized incomplete Beta B(a, b, x) = integral_0^x s^(a-1)(1-s)^(b-1) ds.
double incomplete_beta(double a, double b, double x);

/// Classical upper factor: (1 + q/p*)^(1/q) * (1 + p*/q)^(1/p*).
double tilde_k(const Exponents& e);

/// Improved (sharp) upper factor.  For p < q this is
/// (r / B(1/r, (q-1)/r))^(1/p - 1/q) with r = q/p - 1, evaluated in log
/// space; the p = q branch (r below 1e-9) returns the limit value
/// p^(1/p) * (p*)^(1/p*), which avoids catastrophic cancellation in the
/// Beta arguments.
double sharp_k(const Exponents& e);

struct FactorPair {
  double tilde_k;
  double k;
  Exponents exponents;
};

FactorPair factor_pair(const Exponents& e);

}  // namespace hardy
