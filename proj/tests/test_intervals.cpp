#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "hardy/exponents.hpp"
#include "hardy/families.hpp"
#include "hardy/intervals.hpp"
#include "hardy/operators.hpp"
#include "hardy/oracle.hpp"
#include "instances.hpp"

using hardy::Exponents;
using hardy::WeightSpec;

TEST_CASE("restriction basics") {
  const auto w = WeightSpec::from_vectors({1.0, 2.0, 3.0, 4.0}, {4.0, 3.0, 2.0, 1.0});
  const auto r1 = hardy::restrict(hardy::restrict(w, 3), 2);
  const auto r2 = hardy::restrict(w, 2);
  REQUIRE(r1.size() == r2.size());
  for (std::size_t i = 1; i <= 2; ++i) {
    CHECK(r1.u(i) == r2.u(i));
    CHECK(r1.v(i) == r2.v(i));
  }
  CHECK_THROWS_AS(hardy::restrict(w, 0), std::invalid_argument);
  CHECK_THROWS_AS(hardy::restrict(w, 5), std::out_of_range);
}

TEST_CASE("restriction monotonicity of A and B") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> logw(-2.0, 2.0);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 8;
    std::vector<double> u(n), v(n);
    for (auto& val : u) val = std::exp(logw(rng));
    for (auto& val : v) val = std::exp(logw(rng));
    const auto big = WeightSpec::from_vectors(u, v);
    const auto small = hardy::restrict(big, 4);
    const Exponents e(2.0, 2.0);
    hardy::OracleConfig cfg;
    cfg.max_iters = 50000;
    cfg.step_tol = 1e-15;
    const double a_small = hardy::eigen_check_p2q2(small, cfg);
    const double a_big = hardy::eigen_check_p2q2(big, cfg);
    CHECK(a_small <= a_big + 1e-9 * std::max(1.0, a_big));
    CHECK(hardy::compute_B(small, e) <=
          hardy::compute_B(big, e) + 1e-12 * std::max(1.0, hardy::compute_B(big, e)));
  }
}

TEST_CASE("zero extension") {
  SUBCASE("identity when N' = N") {
    const auto w = WeightSpec::from_vectors({1.0, 2.0}, {1.0, 2.0});
    const auto same = hardy::extend_zero(w, 2);
    CHECK(same.size() == 2);
    CHECK(same.u(2) == 2.0);
  }
  SUBCASE("rejects non-positive fill") {
    const auto w = WeightSpec::from_vectors({1.0}, {1.0});
    CHECK_THROWS_AS(hardy::extend_zero(w, 3, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(hardy::extend_zero(w, 3, -1.0), std::invalid_argument);
  }
  SUBCASE("A and B are invariant, arbitrary positive fill") {
    std::mt19937_64 rng(103);
    std::uniform_real_distribution<double> logw(-2.0, 2.0);
    std::uniform_real_distribution<double> fill(0.1, 10.0);
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 2 + rng() % 7;
      std::vector<double> u(n), v(n);
      for (auto& val : u) val = std::exp(logw(rng));
      for (auto& val : v) val = std::exp(logw(rng));
      const auto w = WeightSpec::from_vectors(u, v);
      std::vector<double> tail(4);
      for (auto& val : tail) val = fill(rng);
      const auto ext = hardy::extend_zero(w, n + 4, tail);
      const Exponents e(2.0, 2.0);
      hardy::OracleConfig cfg;
      cfg.max_iters = 50000;
      cfg.step_tol = 1e-15;
      const double a = hardy::eigen_check_p2q2(w, cfg);
      const double a_ext = hardy::eigen_check_p2q2(ext, cfg);
      CHECK(std::abs(a - a_ext) <= 1e-8 * std::max(1.0, a));
      const double b = hardy::compute_B(w, e);
      const double b_ext = hardy::compute_B(ext, e);
      CHECK(std::abs(b - b_ext) <= 1e-12 * std::max(1.0, b));
    }
  }
  SUBCASE("extension invariance holds for p < q through the oracle") {
    std::mt19937_64 rng(107);
    std::uniform_real_distribution<double> logw(-1.5, 1.5);
    for (int t = 0; t < 10; ++t) {
      const std::size_t n = 2 + rng() % 5;
      std::vector<double> u(n), v(n);
      for (auto& val : u) val = std::exp(logw(rng));
      for (auto& val : v) val = std::exp(logw(rng));
      const auto w = WeightSpec::from_vectors(u, v);
      const auto ext = hardy::extend_zero(w, n + 4);
      const Exponents e(1.7, 3.1);
      hardy::OracleConfig cfg;
      cfg.max_iters = 6000;
      cfg.step_tol = 1e-15;
      const double a = hardy::maximize_quotient(w, e, cfg).a_estimate;
      const double a_ext = hardy::maximize_quotient(ext, e, cfg).a_estimate;
      CHECK(std::abs(a - a_ext) <= 1e-7 * std::max(1.0, a));
    }
  }
}

TEST_CASE("factor transport across extensions") {
  std::mt19937_64 rng(109);
  std::uniform_real_distribution<double> logw(-2.0, 2.0);
  std::uniform_real_distribution<double> fill(0.5, 2.0);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + rng() % 6;
    std::vector<double> u(n), v(n);
    for (auto& val : u) val = std::exp(logw(rng));
    for (auto& val : v) val = std::exp(logw(rng));
    const auto w = WeightSpec::from_vectors(u, v);
    const Exponents e(2.0, 2.0);
    hardy::OracleConfig cfg;
    cfg.max_iters = 50000;
    cfg.step_tol = 1e-15;
    const double ratio = hardy::eigen_check_p2q2(w, cfg) / hardy::compute_B(w, e);
    double worst_ext = 0.0;
    for (int ext_i = 0; ext_i < 3; ++ext_i) {
      std::vector<double> tail(2 + ext_i);
      for (auto& val : tail) val = fill(rng);
      const auto ext = hardy::extend_zero(w, n + tail.size(), tail);
      worst_ext = std::max(worst_ext, hardy::eigen_check_p2q2(ext, cfg) /
                                          hardy::compute_B(ext, e));
    }
    CHECK(ratio <= worst_ext + 1e-9);
  }
}

TEST_CASE("doubling convergence") {
  SUBCASE("geometric B trace increases to the closed form") {
    const hardy::GeometricFamily fam(0.5, 1.0);
    const Exponents e(2.0, 2.0);
    const auto policy = hardy::TruncationPolicy::doubling(1e-8, 16);
    const auto trace = hardy::converge_in_N(fam.weights(16), e,
                                            hardy::LimitQuantity::base_b, policy);
    CHECK(trace.converged);
    CHECK(std::abs(trace.value - fam.closed_B()) <= 1e-6);
    for (std::size_t i = 1; i < trace.steps.size(); ++i) {
      CHECK(trace.steps[i].second >= trace.steps[i - 1].second - 1e-12);
    }
  }
  SUBCASE("non-summable u is flagged, not hidden") {
    const auto flat = WeightSpec::from_generators(
        hardy::WeightKind::explicit_vectors, 16,
        [](std::size_t) { return 1.0; }, [](std::size_t) { return 1.0; },
        /*half_line=*/true);
    const Exponents e(2.0, 2.0);
    const auto policy = hardy::TruncationPolicy::doubling(1e-8, 16, 1 << 12);
    const auto trace = hardy::converge_in_N(flat, e, hardy::LimitQuantity::base_b,
                                            policy);
    CHECK_FALSE(trace.converged);
    CHECK(trace.steps.back().second > trace.steps.front().second);
  }
  SUBCASE("oracle quantity trace is monotone and deterministic") {
    // oracle values settle like 1/N^2, so the tail tolerance is kept above
    // the point where the geometric generator would underflow
    const hardy::GeometricFamily fam(0.5, 2.0);
    const Exponents e(2.0, 2.0);
    const auto policy = hardy::TruncationPolicy::doubling(5e-4, 16);
    hardy::OracleConfig cfg;
    cfg.max_iters = 20000;
    cfg.step_tol = 1e-15;
    const auto t1 = hardy::converge_in_N(fam.weights(16), e,
                                         hardy::LimitQuantity::oracle_a, policy, cfg);
    const auto t2 = hardy::converge_in_N(fam.weights(16), e,
                                         hardy::LimitQuantity::oracle_a, policy, cfg);
    REQUIRE(t1.steps.size() == t2.steps.size());
    for (std::size_t i = 0; i < t1.steps.size(); ++i) {
      CHECK(t1.steps[i].second == t2.steps[i].second);
      if (i > 0) CHECK(t1.steps[i].second >= t1.steps[i - 1].second - 1e-12);
    }
    CHECK(t1.converged);
  }
  SUBCASE("rejects fixed policies and vector-only specs") {
    const hardy::GeometricFamily fam(0.5, 1.0);
    const Exponents e(2.0, 2.0);
    CHECK_THROWS_AS(hardy::converge_in_N(fam.weights(16), e,
                                         hardy::LimitQuantity::base_b,
                                         hardy::TruncationPolicy::fixed(64)),
                    std::invalid_argument);
    const auto plain = WeightSpec::from_vectors({1.0}, {1.0});
    CHECK_THROWS_AS(hardy::converge_in_N(plain, e, hardy::LimitQuantity::base_b,
                                         hardy::TruncationPolicy::doubling()),
                    std::invalid_argument);
  }
}
