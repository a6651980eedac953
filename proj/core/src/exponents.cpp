#include "hardy/exponents.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hardy {

Exponents::Exponents(double p, double q) : p_(p), q_(q) {
  if (!std::isfinite(p) || !std::isfinite(q)) {
    throw std::domain_error("exponents must be finite");
  }
  if (p <= 1.0) {
    throw std::domain_error("exponent p must satisfy p > 1, got " +
                            std::to_string(p));
  }
  if (q < p) {
    throw std::domain_error("exponents must satisfy p <= q, got p = " +
                            std::to_string(p) + ", q = " + std::to_string(q));
  }
  p_star_ = p / (p - 1.0);
  r_ = q / p - 1.0;
  if (r_ < 0.0) r_ = 0.0;  // guard against rounding when p == q
  alpha_ = q / (p_star_ + q);
}

Exponents validate_exponents(double p, double q) { return Exponents(p, q); }

}  // namespace hardy
