#include "hardy/factors.hpp"

#include <cmath>
#include <stdexcept>

namespace hardy {
namespace {

// Continued fraction for the regularized incomplete Beta (modified Lentz).
// Valid for x < (a+1)/(a+b+2); callers switch to the symmetric form otherwise.
double beta_cf(double a, double b, double x) {
  constexpr int kMaxIter = 500;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

void require_positive(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::domain_error("Beta function requires positive arguments");
  }
}

}  // namespace

double log_beta(double a, double b) {
  require_positive(a, b);
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double beta_function(double a, double b) { return std::exp(log_beta(a, b)); }

double regularized_incomplete_beta(double a, double b, double x) {
  require_positive(a, b);
  if (!(x >= 0.0) || !(x <= 1.0)) {
    throw std::domain_error("incomplete Beta requires x in [0, 1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double ln_front =
      a * std::log(x) + b * std::log1p(-x) - log_beta(a, b);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_cf(a, b, x) / a;
  }
  return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double incomplete_beta(double a, double b, double x) {
  if (x == 0.0) {
    require_positive(a, b);
    return 0.0;
  }
  if (x == 1.0) return beta_function(a, b);
  return regularized_incomplete_beta(a, b, x) * beta_function(a, b);
}

double tilde_k(const Exponents& e) {
  const double q = e.q();
  const double ps = e.p_star();
  return std::pow(1.0 + q / ps, 1.0 / q) * std::pow(1.0 + ps / q, 1.0 / ps);
}

double sharp_k(const Exponents& e) {
  const double r = e.r();
  if (r < 1e-9) {
    const double p = e.p();
    const double ps = e.p_star();
    return std::exp(std::log(p) / p + std::log(ps) / ps);
  }
  const double q = e.q();
  const double log_b = log_beta(1.0 / r, (q - 1.0) / r);
  return std::exp((1.0 / e.p() - 1.0 / q) * (std::log(r) - log_b));
}

FactorPair factor_pair(const Exponents& e) {
  return FactorPair{tilde_k(e), sharp_k(e), e};
}

}  // namespace hardy
