#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hardy/exponents.hpp"
#include "hardy/operators.hpp"
#include "hardy/test_sequence.hpp"
#include "hardy/weights.hpp"

namespace hardy {

enum class RefinementStatus { improving, converged, diverged };

struct RefineOptions {
  int m_max = 50;
  double tol = 1e-8;  // absolute early-stop tolerance on delta differences
  /// Lower-branch iterate variant: the inner sum is plain by default, but
  /// can carry the u-weight the way the single-summation lower operator
  /// does.  Both variants are exposed.
  bool weighted_inner_sum = false;
  /// delta_1 via the lower-type double-summation operator instead of the
  /// starred one.  The lower-type operator is not scale-invariant for p < q
  /// and its sup grows without bound in the truncation, so this variant is
  /// off by default and kept only as a diagnostic.
  bool literal_ii_delta1 = false;
};

struct UpperStep {
  int m = 0;
  double delta = 0.0;
  std::size_t attaining_n = 0;
  bool at_boundary = false;
};

struct UpperTrace {
  std::vector<UpperStep> steps;
  RefinementStatus status = RefinementStatus::improving;
  std::optional<TestSequence> final_iterate;  // normalized
};

/// x^(1) with x_n = (H v_hat(n))^alpha - (H v_hat(n-1))^alpha.  Returned at
/// the canonical scale when representable, otherwise uniformly rescaled
/// (every delta quantity downstream is scale-invariant).
TestSequence seed_upper(const WeightSpec& w, const Exponents& e);

/// x^(m+1)_n = v_hat_n (sum_{i>=n} u_i (H x^(m)(i))^(q/p*))^(p*/q),
/// renormalized so H x^(m+1)(N) = 1.  Throws std::overflow_error when the
/// iterate is not representable even after rescaling.
TestSequence iterate_upper(const TestSequence& x, const WeightSpec& w,
                           const Exponents& e);

/// The non-increasing upper sequence delta_m = sup_n (II*_n(x^(m)))^(1/p*),
/// stopping early once successive values differ by less than tol.
UpperTrace delta_upper(const WeightSpec& w, const Exponents& e,
                       const RefineOptions& opts = {});

/// y^(k,1) = v_hat on [1,k], zero beyond.
TestSequence seed_lower(const WeightSpec& w, const Exponents& e, std::size_t k);

/// y^(k,m+1)_n = v_hat_n (sum_{i=n}^N w_i (H y^(k,m)(i))^(q-1))^(p*-1) with
/// w_i = 1 by default, or w_i = u_i under the weighted_inner_sum variant.
/// Renormalized; rejects input whose weighted p-norm is not finite.
TestSequence iterate_lower(const TestSequence& y, const WeightSpec& w,
                           const Exponents& e, bool weighted_inner_sum = false);

struct LowerBounds {
  double delta_tilde = 0.0;
  std::size_t k_tilde = 0;
  double delta_bar = 0.0;
  std::size_t k_bar = 0;
};

/// All k below this length are scanned; larger problems use a geometric grid
/// refined by ternary search around the best point (the boundary k = N is
/// always included: Hardy-type sups are often attained in the k -> N limit).
std::vector<std::size_t> default_k_grid(std::size_t n);

/// delta_tilde_m = max_k ||y||^(p/q-1) (inf_n II_n(y^(k,m)))^((p-1)/q) and
/// delta_bar_m = max_k quotient(y^(k,m)), with the attaining k for each.
/// The k-scan runs in parallel (HARDY_THREADS) with a deterministic
/// reduction: ties within 1e-12 go to the smaller k.
LowerBounds delta_lower(const WeightSpec& w, const Exponents& e, int m = 1,
                        std::span<const std::size_t> k_grid = {},
                        const RefineOptions& opts = {});

}  // namespace hardy
