#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "hardy/exponents.hpp"
#include "hardy/report.hpp"
#include "hardy/weights.hpp"

namespace hardy::cli {

/// A fully resolved problem: exponents, weights materialized at the working
/// truncation, and the truncation policy that produced them.
struct ProblemSpec {
  Exponents exponents;
  WeightSpec weights;
  TruncationPolicy truncation;
  std::string family_name;  // geometric | bliss | explicit | derived
};

/// Problem document: {p, q, family | {u, v}, N | truncation, options}.
/// family is either {"name": "geometric", "gamma", "b"},
/// {"name": "bliss", "c", "d"}, or explicit vectors {"u": [...], "v": [...]}.
ProblemSpec problem_from_json(const nlohmann::json& doc);
ProblemSpec load_problem_file(const std::string& path);

/// Round a value through %.15g so every emitted number carries 15
/// significant digits.
double sig15(double x);

nlohmann::ordered_json report_to_json(const BoundReport& report);

/// CSV helpers for iteration traces.
std::string format_csv_row(std::initializer_list<std::string> cells);
std::string format_number(double x);

}  // namespace hardy::cli
