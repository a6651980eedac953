#pragma once

namespace hardy {

/// The exponent pair (p, q) with 1 < p <= q < infinity, together with the
/// derived quantities used everywhere else:
///   p_star = p/(p-1)   (conjugate exponent, 1/p + 1/p_star = 1)
///   r      = q/p - 1   (>= 0, zero exactly when p = q)
///   alpha  = q/(p_star + q)   (in (0,1))
/// Immutable after construction; construction validates the range.
class Exponents {
 public:
  Exponents(double p, double q);  // throws std::domain_error on bad input

  double p() const { return p_; }
  double q() const { return q_; }
  double p_star() const { return p_star_; }
  double r() const { return r_; }
  double alpha() const { return alpha_; }

 private:
  double p_;
  double q_;
  double p_star_;
  double r_;
  double alpha_;
};

/// Validating factory; rejects p <= 1, q < p, and non-finite input.
Exponents validate_exponents(double p, double q);

}  // namespace hardy
