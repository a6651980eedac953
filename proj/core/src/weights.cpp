#include "hardy/weights.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "hardy/numeric.hpp"

namespace hardy {

TruncationPolicy TruncationPolicy::fixed(std::size_t n) {
  if (n < 1) throw std::invalid_argument("truncation must be >= 1");
  TruncationPolicy p;
  p.doubling_ = false;
  p.n_ = n;
  return p;
}

TruncationPolicy TruncationPolicy::doubling(double tail_tolerance,
                                            std::size_t n_start,
                                            std::size_t n_max) {
  if (!(tail_tolerance > 0.0)) {
    throw std::invalid_argument("tail_tolerance must be positive");
  }
  if (n_start < 1 || n_max < n_start) {
    throw std::invalid_argument("doubling range must satisfy 1 <= n_start <= n_max");
  }
  TruncationPolicy p;
  p.doubling_ = true;
  p.n_start_ = n_start;
  p.n_max_ = n_max;
  p.tail_tolerance_ = tail_tolerance;
  return p;
}

void WeightSpec::validate() const {
  if (u_.empty() || u_.size() != v_.size()) {
    throw std::invalid_argument("weights u and v must be non-empty and of equal length");
  }
  for (std::size_t i = 0; i < u_.size(); ++i) {
    const bool zero_ok = zero_tail_begin_ > 0 && i + 1 >= zero_tail_begin_;
    if (!std::isfinite(u_[i]) || u_[i] < 0.0 || (u_[i] == 0.0 && !zero_ok)) {
      throw std::invalid_argument("weight u must be strictly positive at index " +
                                  std::to_string(i + 1));
    }
    if (!std::isfinite(v_[i]) || v_[i] <= 0.0) {
      throw std::invalid_argument("weight v must be strictly positive at index " +
                                  std::to_string(i + 1));
    }
  }
}

WeightSpec WeightSpec::from_vectors(std::vector<double> u, std::vector<double> v,
                                    WeightKind kind) {
  WeightSpec w;
  w.u_ = std::move(u);
  w.v_ = std::move(v);
  w.kind_ = kind;
  w.validate();
  w.zero_tail_begin_ = w.size() + 1;
  return w;
}

WeightSpec WeightSpec::from_generators(WeightKind kind, std::size_t n,
                                       Generator u_gen, Generator v_gen,
                                       bool half_line) {
  if (n < 1) throw std::invalid_argument("truncation must be >= 1");
  WeightSpec w;
  w.kind_ = kind;
  w.half_line_ = half_line;
  w.u_gen_ = std::move(u_gen);
  w.v_gen_ = std::move(v_gen);
  w.u_.resize(n);
  w.v_.resize(n);
  for (std::size_t i = 1; i <= n; ++i) {
    w.u_[i - 1] = w.u_gen_(i);
    w.v_[i - 1] = w.v_gen_(i);
  }
  w.validate();
  w.zero_tail_begin_ = n + 1;
  return w;
}

WeightSpec WeightSpec::with_zero_tail(std::vector<double> u,
                                      std::vector<double> v,
                                      std::size_t zero_tail_begin) {
  WeightSpec w;
  w.u_ = std::move(u);
  w.v_ = std::move(v);
  w.kind_ = WeightKind::explicit_vectors;
  w.zero_tail_begin_ = zero_tail_begin;
  w.validate();
  return w;
}

double WeightSpec::u(std::size_t i) const {
  if (i < 1 || i > u_.size()) throw std::out_of_range("weight index out of range");
  return u_[i - 1];
}

double WeightSpec::v(std::size_t i) const {
  if (i < 1 || i > v_.size()) throw std::out_of_range("weight index out of range");
  return v_[i - 1];
}

WeightSpec WeightSpec::materialized_at(std::size_t n) const {
  if (!has_generators()) {
    throw std::logic_error("weight pair has no generators; cannot re-materialize");
  }
  return from_generators(kind_, n, u_gen_, v_gen_, half_line_);
}

double v_hat(const WeightSpec& spec, const Exponents& e, std::size_t i) {
  return pow_conv(spec.v(i), 1.0 - e.p_star());
}

}  // namespace hardy
