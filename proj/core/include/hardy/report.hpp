#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hardy/exponents.hpp"
#include "hardy/oracle.hpp"
#include "hardy/refine.hpp"
#include "hardy/weights.hpp"

namespace hardy {

/// A bound value with its provenance: one of
/// {closed-form, truncated-sum, oracle, refinement}.
struct LabeledValue {
  std::string label;
  double value = 0.0;
  std::string method;
};

struct BoundReport {
  explicit BoundReport(const Exponents& e) : exponents(e) {}

  Exponents exponents;
  std::size_t truncation_used = 0;
  double b_value = 0.0;
  std::vector<LabeledValue> lower_bounds;
  std::vector<LabeledValue> upper_bounds;
  std::vector<std::pair<std::string, std::string>> diagnostics;
  bool ordering_ok = true;     // every lower bound <= every upper bound
  double ordering_tolerance = 1e-7;  // relative
};

struct BoundOptions {
  int refine_m = 5;
  double refine_tol = 1e-8;
  bool with_oracle = false;
  OracleConfig oracle{};
  RefineOptions refine{};
};

/// Assembles the full two-sided report: B, the factor upper bounds, the
/// refinement bounds delta_1/delta_m and delta_tilde_1/delta_bar_1, and
/// optionally the brute-force oracle value.
BoundReport assemble_bound_report(const WeightSpec& w, const Exponents& e,
                                  const BoundOptions& opts = {});

}  // namespace hardy
