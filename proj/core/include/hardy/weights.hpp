#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hardy/exponents.hpp"

namespace hardy {

enum class WeightKind { explicit_vectors, geometric, bliss, derived_from_v };

/// Working-truncation policy for half-line problems.  Either a fixed length
/// or doubling until two successive values of the tracked quantity differ by
/// less than tail_tolerance (erroring out at n_max).
class TruncationPolicy {
 public:
  static TruncationPolicy fixed(std::size_t n);
  static TruncationPolicy doubling(double tail_tolerance = 1e-8,
                                   std::size_t n_start = 64,
                                   std::size_t n_max = std::size_t{1} << 20);

  bool is_doubling() const { return doubling_; }
  std::size_t n() const { return n_; }
  std::size_t n_start() const { return n_start_; }
  std::size_t n_max() const { return n_max_; }
  double tail_tolerance() const { return tail_tolerance_; }

 private:
  TruncationPolicy() = default;
  bool doubling_ = false;
  std::size_t n_ = 0;
  std::size_t n_start_ = 64;
  std::size_t n_max_ = std::size_t{1} << 20;
  double tail_tolerance_ = 1e-8;
};

/// A weight pair (u, v) on the discrete interval [1, N], materialized at a
/// finite truncation.  Entries of v are strictly positive; entries of u are
/// strictly positive except on a tail explicitly zeroed by extend_zero.
/// Named families additionally carry generators so the same pair can be
/// re-materialized at a larger truncation (half-line problems).
/// Immutable after construction.
class WeightSpec {
 public:
  using Generator = std::function<double(std::size_t)>;  // 1-based index

  static WeightSpec from_vectors(std::vector<double> u, std::vector<double> v,
                                 WeightKind kind = WeightKind::explicit_vectors);
  static WeightSpec from_generators(WeightKind kind, std::size_t n,
                                    Generator u_gen, Generator v_gen,
                                    bool half_line);
  /// Used by intervals::extend_zero only: u entries at 1-based indices
  /// >= zero_tail_begin are permitted to be exactly zero.
  static WeightSpec with_zero_tail(std::vector<double> u,
                                   std::vector<double> v,
                                   std::size_t zero_tail_begin);

  std::size_t size() const { return u_.size(); }
  WeightKind kind() const { return kind_; }
  bool half_line() const { return half_line_; }
  bool has_generators() const { return static_cast<bool>(u_gen_); }

  /// 1-based accessors, bounds-checked.
  double u(std::size_t i) const;
  double v(std::size_t i) const;

  const std::vector<double>& u_raw() const { return u_; }
  const std::vector<double>& v_raw() const { return v_; }

  /// 1-based index from which u may be zero; size()+1 when there is none.
  std::size_t zero_tail_begin() const { return zero_tail_begin_; }

  /// Re-materialize the family at truncation n (requires generators).
  WeightSpec materialized_at(std::size_t n) const;

 private:
  WeightSpec() = default;
  void validate() const;

  std::vector<double> u_;
  std::vector<double> v_;
  WeightKind kind_ = WeightKind::explicit_vectors;
  bool half_line_ = false;
  Generator u_gen_;
  Generator v_gen_;
  std::size_t zero_tail_begin_ = 0;  // set in validate()
};

/// v_hat(i) = v_i^(1 - p_star), computed on demand.  1-based.
double v_hat(const WeightSpec& spec, const Exponents& e, std::size_t i);

}  // namespace hardy
