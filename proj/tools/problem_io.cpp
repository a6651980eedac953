#include "problem_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hardy/families.hpp"

namespace hardy::cli {
namespace {

TruncationPolicy truncation_from_json(const nlohmann::json& doc,
                                      bool family_is_half_line) {
  if (doc.contains("N")) {
    return TruncationPolicy::fixed(doc.at("N").get<std::size_t>());
  }
  if (doc.contains("truncation")) {
    const auto& t = doc.at("truncation");
    const std::string mode = t.value("mode", "doubling");
    if (mode == "fixed") {
      return TruncationPolicy::fixed(t.at("N").get<std::size_t>());
    }
    if (mode != "doubling") {
      throw std::invalid_argument("truncation.mode must be 'fixed' or 'doubling'");
    }
    return TruncationPolicy::doubling(
        t.value("tail_tolerance", 1e-8), t.value("N_start", std::size_t{64}),
        t.value("N_max", std::size_t{1} << 20));
  }
  if (family_is_half_line) return TruncationPolicy::doubling();
  throw std::invalid_argument("problem needs either N or a truncation policy");
}

}  // namespace

ProblemSpec problem_from_json(const nlohmann::json& doc) {
  if (!doc.contains("p") || !doc.contains("q")) {
    throw std::invalid_argument("problem must supply exponents p and q");
  }
  const Exponents e = validate_exponents(doc.at("p").get<double>(),
                                         doc.at("q").get<double>());

  if (!doc.contains("family")) {
    throw std::invalid_argument("problem must supply a 'family' object");
  }
  const auto& fam = doc.at("family");

  if (fam.contains("u") || fam.contains("v")) {
    const auto u = fam.at("u").get<std::vector<double>>();
    const auto v = fam.at("v").get<std::vector<double>>();
    WeightSpec w = WeightSpec::from_vectors(u, v);
    TruncationPolicy policy = doc.contains("N") || doc.contains("truncation")
                                  ? truncation_from_json(doc, false)
                                  : TruncationPolicy::fixed(w.size());
    if (!policy.is_doubling() && policy.n() != w.size()) {
      throw std::invalid_argument("N must match the explicit vector length");
    }
    return ProblemSpec{e, std::move(w), policy, "explicit"};
  }

  const std::string name = fam.value("name", "");
  if (name == "geometric") {
    const GeometricFamily g(fam.at("gamma").get<double>(),
                            fam.value("b", 1.0));
    TruncationPolicy policy = truncation_from_json(doc, true);
    const std::size_t n = policy.is_doubling() ? policy.n_start() : policy.n();
    return ProblemSpec{e, g.weights(n), policy, "geometric"};
  }
  if (name == "bliss") {
    const BlissFamily b(e, fam.value("c", 1.0), fam.value("d", 1.0));
    TruncationPolicy policy = truncation_from_json(doc, true);
    const std::size_t n = policy.is_doubling() ? policy.n_start() : policy.n();
    return ProblemSpec{e, b.weights(n), policy, "bliss"};
  }
  throw std::invalid_argument("unknown family '" + name +
                              "' (expected geometric, bliss, or explicit u/v)");
}

ProblemSpec load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open problem file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& err) {
    throw std::invalid_argument(std::string("problem file parse error: ") + err.what());
  }
  return problem_from_json(doc);
}

double sig15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return std::strtod(buf, nullptr);
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return buf;
}

nlohmann::ordered_json report_to_json(const BoundReport& report) {
  nlohmann::ordered_json j;
  j["exponents"] = {{"p", sig15(report.exponents.p())},
                    {"q", sig15(report.exponents.q())},
                    {"p_star", sig15(report.exponents.p_star())},
                    {"r", sig15(report.exponents.r())},
                    {"alpha", sig15(report.exponents.alpha())}};
  j["truncation_used"] = report.truncation_used;
  j["B"] = {{"value", sig15(report.b_value)}, {"method", "truncated-sum"}};
  auto bounds = [](const std::vector<LabeledValue>& list) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& lv : list) {
      arr.push_back({{"label", lv.label},
                     {"value", sig15(lv.value)},
                     {"method", lv.method}});
    }
    return arr;
  };
  j["lower_bounds"] = bounds(report.lower_bounds);
  j["upper_bounds"] = bounds(report.upper_bounds);
  nlohmann::ordered_json diag;
  for (const auto& [key, value] : report.diagnostics) diag[key] = value;
  j["diagnostics"] = diag;
  j["ordering_ok"] = report.ordering_ok;
  return j;
}

std::string format_csv_row(std::initializer_list<std::string> cells) {
  std::ostringstream out;
  bool first = true;
  for (const auto& cell : cells) {
    if (!first) out << ",";
    out << cell;
    first = false;
  }
  return out.str();
}

}  // namespace hardy::cli
