#include "hardy/families.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hardy/numeric.hpp"

namespace hardy {

GeometricFamily::GeometricFamily(double gamma_, double b_) : gamma(gamma_), b(b_) {
  if (!(gamma > 0.0) || !(gamma < 1.0)) {
    throw std::invalid_argument("geometric family requires 0 < gamma < 1");
  }
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw std::invalid_argument("geometric family requires b > 0");
  }
}

WeightSpec GeometricFamily::weights(std::size_t n) const {
  const double g = gamma;
  const double bb = b;
  return WeightSpec::from_generators(
      WeightKind::geometric, n,
      [g](std::size_t i) { return std::pow(g, static_cast<double>(i)); },
      [g, bb](std::size_t i) { return bb * std::pow(g, static_cast<double>(i)); },
      /*half_line=*/true);
}

double GeometricFamily::closed_B() const { return 1.0 / (std::sqrt(b) * (1.0 - gamma)); }

double GeometricFamily::closed_A() const {
  return 1.0 / (std::sqrt(b) * (1.0 - std::sqrt(gamma)));
}

double GeometricFamily::closed_delta_lower1() const {
  return std::sqrt(1.0 + gamma) / (std::sqrt(b) * (1.0 - gamma));
}

double GeometricFamily::maximizer(std::size_t n) const {
  const double nn = static_cast<double>(n);
  return std::pow(gamma, (-nn + 1.0) / 2.0) * (nn - (nn - 1.0) * std::sqrt(gamma));
}

TestSequence GeometricFamily::maximizer_sequence(std::size_t n) const {
  std::vector<double> a(n);
  for (std::size_t i = 1; i <= n; ++i) a[i - 1] = maximizer(i);
  return TestSequence(std::move(a));
}

double GeometricFamily::h_vhat_closed(std::size_t n) const {
  return (std::pow(gamma, -static_cast<double>(n)) - 1.0) / (b * (1.0 - gamma));
}

double GeometricFamily::u_suffix_closed(std::size_t n, std::size_t n_max) const {
  const double head = std::pow(gamma, static_cast<double>(n)) / (1.0 - gamma);
  if (n_max == 0) return head;
  return head * (1.0 - std::pow(gamma, static_cast<double>(n_max - n + 1)));
}

WeightSpec geometric_weights(const GeometricFamily& f, std::size_t n) {
  return f.weights(n);
}

BlissFamily::BlissFamily(const Exponents& e, double c_, double d_)
    : exponents(e), c(c_), d(d_) {
  if (!(e.p() < e.q())) {
    throw std::invalid_argument("bliss family requires p < q strictly");
  }
  if (!(c > 0.0) || !(d > 0.0)) {
    throw std::invalid_argument("bliss family requires c > 0 and d > 0");
  }
}

double BlissFamily::u_term(std::size_t n) const {
  const double s = exponents.q() / exponents.p_star();
  const double nn = static_cast<double>(n);
  // n^-s - (n+1)^-s = n^-s * (1 - exp(-s log1p(1/n)))
  return std::pow(nn, -s) * (-std::expm1(-s * std::log1p(1.0 / nn)));
}

WeightSpec BlissFamily::weights(std::size_t n) const {
  const BlissFamily self = *this;
  return WeightSpec::from_generators(
      WeightKind::bliss, n,
      [self](std::size_t i) { return self.u_term(i); },
      [](std::size_t) { return 1.0; },
      /*half_line=*/true);
}

double BlissFamily::extremal(std::size_t n) const {
  const double r = exponents.r();
  auto shape = [&](double t) {
    if (t == 0.0) return 0.0;
    return c * t / std::pow(std::pow(t, r) + d, 1.0 / r);
  };
  const double nn = static_cast<double>(n);
  const double diff = shape(nn) - shape(nn - 1.0);
  return n == 1 ? diff : std::max(diff, 0.0);
}

TestSequence BlissFamily::extremal_sequence(std::size_t n) const {
  std::vector<double> x(n);
  for (std::size_t i = 1; i <= n; ++i) x[i - 1] = extremal(i);
  return TestSequence(std::move(x));
}

double BlissFamily::closed_A() const {
  const double r = exponents.r();
  const double q = exponents.q();
  const double log_b = std::lgamma(1.0 / r) + std::lgamma((q - 1.0) / r) -
                       std::lgamma(1.0 / r + (q - 1.0) / r);
  return std::exp((1.0 / exponents.p() - 1.0 / q) * (std::log(r) - log_b));
}

WeightSpec bliss_weights(const BlissFamily& f, std::size_t n) { return f.weights(n); }

WeightSpec construct_u_from_v(std::span<const double> v, const Exponents& e,
                              double c_bound, std::size_t n) {
  if (!(c_bound > 0.0) || !std::isfinite(c_bound)) {
    throw std::invalid_argument("construction requires a positive finite C");
  }
  if (n == 0) {
    if (v.size() < 2) throw std::invalid_argument("v must supply at least 2 entries");
    n = v.size() - 1;
  } else if (v.size() < n + 1) {
    throw std::invalid_argument("v must supply at least N+1 entries");
  }

  const long double exponent = -static_cast<long double>(e.q()) / e.p_star();
  const long double cq = powl(static_cast<long double>(c_bound), e.q());
  long double h = 0.0L;
  std::vector<long double> decay(n + 2);
  for (std::size_t i = 1; i <= n + 1; ++i) {
    if (!(v[i - 1] > 0.0)) throw std::invalid_argument("v must be strictly positive");
    h += powl(static_cast<long double>(v[i - 1]), 1.0L - e.p_star());
    decay[i] = powl(h, exponent);
  }
  std::vector<double> u(n);
  std::vector<double> vv(v.begin(), v.begin() + n);
  for (std::size_t i = 1; i <= n; ++i) {
    u[i - 1] = static_cast<double>(cq * (decay[i] - decay[i + 1]));
  }
  return WeightSpec::from_vectors(std::move(u), std::move(vv),
                                  WeightKind::derived_from_v);
}

}  // namespace hardy
