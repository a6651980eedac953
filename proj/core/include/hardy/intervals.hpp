#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hardy/exponents.hpp"
#include "hardy/oracle.hpp"
#include "hardy/weights.hpp"

namespace hardy {

/// Truncated copy of the weight pair on [1, n].
WeightSpec restrict(const WeightSpec& w, std::size_t n);

/// Extension to [1, n_prime]: u is zero-filled beyond N, v is filled with
/// v_fill (any positive values; both the optimal constant and B are
/// invariant under this extension).
WeightSpec extend_zero(const WeightSpec& w, std::size_t n_prime,
                       double v_fill = 1.0);
WeightSpec extend_zero(const WeightSpec& w, std::size_t n_prime,
                       std::span<const double> v_fill);

enum class LimitQuantity { base_b, delta1, oracle_a };

struct ConvergenceTrace {
  std::vector<std::pair<std::size_t, double>> steps;  // (N, value)
  bool converged = false;
  double value = 0.0;  // last evaluated value (best available when not converged)
  std::string note;    // set when doubling stopped for a reason other than n_max
};

/// Evaluates the quantity at N, 2N, 4N, ... until successive values differ by
/// less than the policy's tail tolerance; non-convergence by n_max is
/// surfaced in the flag, never hidden.  The family must carry generators
/// (half-line marker).
ConvergenceTrace converge_in_N(const WeightSpec& half_line_family,
                               const Exponents& e, LimitQuantity quantity,
                               const TruncationPolicy& policy,
                               const OracleConfig& oracle_cfg = {});

}  // namespace hardy
