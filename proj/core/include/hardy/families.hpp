#pragma once

#include <cstddef>
#include <span>

#include "hardy/exponents.hpp"
#include "hardy/test_sequence.hpp"
#include "hardy/weights.hpp"

namespace hardy {

/// Constant-rate birth-death weights u_n = gamma^n, v_n = b * gamma^n.
/// Every quantity of interest has a closed form at p = q = 2, which is what
/// the closed_* accessors return; prefix/suffix sums use geometric-series
/// formulas rather than loops.
struct GeometricFamily {
  double gamma;
  double b;

  GeometricFamily(double gamma, double b);  // requires 0 < gamma < 1, b > 0

  WeightSpec weights(std::size_t n) const;

  // closed forms, p = q = 2
  double closed_B() const;            // 1/(sqrt(b) (1-gamma))
  double closed_A() const;            // 1/(sqrt(b) (1-sqrt(gamma)))
  double closed_delta1() const { return closed_A(); }
  double closed_delta_lower1() const;  // sqrt(1+gamma)/(sqrt(b)(1-gamma))

  /// The attaining sequence a_n = gamma^((-n+1)/2) (n - (n-1) sqrt(gamma)).
  double maximizer(std::size_t n) const;
  TestSequence maximizer_sequence(std::size_t n) const;

  /// Closed-form sums at p = 2: H v_hat(n) = (gamma^-n - 1)/(b (1-gamma))
  /// and the u suffix sum_{j=n..N} gamma^j (N = 0 means the half line).
  double h_vhat_closed(std::size_t n) const;
  double u_suffix_closed(std::size_t n, std::size_t n_max = 0) const;
};

WeightSpec geometric_weights(const GeometricFamily& f, std::size_t n);

/// The sharp-factor example family: u_n = n^(-q/p*) - (n+1)^(-q/p*), v = 1,
/// whose optimal constant on the half line equals the sharp factor.
/// u_n is evaluated in expm1/log1p form; the naive difference of near-equal
/// powers loses all precision past n ~ 1e6.
struct BlissFamily {
  Exponents exponents;
  double c = 1.0;
  double d = 1.0;

  BlissFamily(const Exponents& e, double c = 1.0, double d = 1.0);  // requires p < q

  WeightSpec weights(std::size_t n) const;
  double u_term(std::size_t n) const;

  /// The extremal sequence x_n = c n/(n^r+d)^(1/r) - c(n-1)/((n-1)^r+d)^(1/r).
  double extremal(std::size_t n) const;
  TestSequence extremal_sequence(std::size_t n) const;

  double closed_B() const { return 1.0; }  // half-line value
  double closed_A() const;                 // the sharp factor k_{q,p}
};

WeightSpec bliss_weights(const BlissFamily& f, std::size_t n);

/// The u-from-v construction: for a positive v given through index N+1,
///   u~_n = C^q ((H v_hat(n))^(-q/p*) - (H v_hat(n+1))^(-q/p*)),
/// whose suffix sums telescope exactly and whose optimal constant satisfies
/// A <= k_{q,p} C.  v must supply at least N+1 entries; n = 0 uses
/// v.size() - 1.
WeightSpec construct_u_from_v(std::span<const double> v, const Exponents& e,
                              double c_bound, std::size_t n = 0);

}  // namespace hardy
