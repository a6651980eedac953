#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "hardy/exponents.hpp"
#include "hardy/factors.hpp"
#include "hardy/families.hpp"
#include "hardy/numeric.hpp"
#include "hardy/operators.hpp"
#include "hardy/oracle.hpp"
#include "instances.hpp"
#include "oracles.hpp"

using hardy::Exponents;
using hardy::OracleConfig;
using hardy::OracleMethod;
using hardy::TestSequence;
using hardy::WeightSpec;

TEST_CASE("single-point oracle") {
  const auto w = WeightSpec::from_vectors({1.0}, {1.0});
  const auto result = hardy::maximize_quotient(w, Exponents(2.0, 3.0));
  CHECK(result.a_estimate == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(result.x_star->normalized().x(1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(result.converged);
}

TEST_CASE("oracle matches the derivative-free grid search at p=q=2") {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> logw(-1.0, 1.0);
  for (int t = 0; t < 6; ++t) {
    const std::size_t n = 6;
    std::vector<double> u(n), v(n);
    for (auto& val : u) val = std::exp(logw(rng));
    for (auto& val : v) val = std::exp(logw(rng));
    const auto w = WeightSpec::from_vectors(u, v);
    const double a_est =
        hardy::maximize_quotient(w, Exponents(2.0, 2.0)).a_estimate;
    const double grid = oracles::grid_search_quotient(u, v, 2.0, 2.0);
    CHECK(std::abs(a_est - grid) <= 1e-4 * std::max(1.0, a_est));
  }
}

TEST_CASE("geometric family oracle approaches the closed-form constant") {
  const hardy::GeometricFamily fam(0.5, 1.0);
  const auto result =
      hardy::maximize_quotient(fam.weights(400), Exponents(2.0, 2.0));
  CHECK(std::abs(result.a_estimate - (2.0 + std::sqrt(2.0))) <= 1e-2);
}

TEST_CASE("eigen certificate") {
  SUBCASE("single point") {
    const auto w = WeightSpec::from_vectors({3.0}, {12.0});
    CHECK(hardy::eigen_check_p2q2(w) == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("agrees with maximize_quotient on random instances") {
    std::mt19937_64 rng(73);
    std::uniform_real_distribution<double> logw(-2.0, 2.0);
    OracleConfig cfg;
    cfg.max_iters = 100000;
    cfg.step_tol = 1e-15;
    for (int t = 0; t < 25; ++t) {
      const std::size_t n = 1 + rng() % 50;
      std::vector<double> u(n), v(n);
      for (auto& val : u) val = std::exp(logw(rng));
      for (auto& val : v) val = std::exp(logw(rng));
      const auto w = WeightSpec::from_vectors(u, v);
      const double a_fp =
          hardy::maximize_quotient(w, Exponents(2.0, 2.0), cfg).a_estimate;
      const double a_eig = hardy::eigen_check_p2q2(w, cfg);
      CHECK(std::abs(a_fp - a_eig) <= 1e-8 * std::max(a_fp, a_eig));
    }
  }
  SUBCASE("geometric family at N=400") {
    const hardy::GeometricFamily fam(0.5, 1.0);
    OracleConfig cfg;
    cfg.max_iters = 20000;
    const double a = hardy::eigen_check_p2q2(fam.weights(400), cfg);
    CHECK(std::abs(a - (2.0 + std::sqrt(2.0))) <= 1e-2);
  }
  SUBCASE("rejects p != 2 or q != 2") {
    const auto w = WeightSpec::from_vectors({1.0}, {1.0});
    OracleConfig cfg;
    cfg.method = OracleMethod::eigen_p2q2;
    CHECK_THROWS_AS(hardy::maximize_quotient(w, Exponents(2.0, 3.0), cfg),
                    std::domain_error);
  }
}

TEST_CASE("fixed point and ascent agree") {
  std::mt19937_64 rng(79);
  for (int t = 0; t < 30; ++t) {
    const auto inst = instances::random_instance(rng, 12);
    const auto w = instances::spec_of(inst);
    const auto e = instances::exponents_of(inst);
    OracleConfig fp;
    fp.max_iters = 4000;
    fp.step_tol = 1e-14;
    OracleConfig asc = fp;
    asc.method = OracleMethod::ascent;
    asc.max_iters = 8000;
    const double a_fp = hardy::maximize_quotient(w, e, fp).a_estimate;
    const double a_asc = hardy::maximize_quotient(w, e, asc).a_estimate;
    CHECK(std::abs(a_fp - a_asc) <= 1e-6 * std::max(a_fp, a_asc));
  }
}

TEST_CASE("oracle is sandwiched by B and the sharp upper factor") {
  std::mt19937_64 rng(83);
  for (int t = 0; t < 60; ++t) {
    const auto inst = instances::random_instance(rng, 10);
    const auto w = instances::spec_of(inst);
    const auto e = instances::exponents_of(inst);
    const double b = hardy::compute_B(w, e);
    const double a_est = hardy::maximize_quotient(w, e).a_estimate;
    const double slack = 1e-9 * std::max(1.0, b);
    CHECK(b - slack <= a_est);
    CHECK(a_est <= hardy::sharp_k(e) * b + slack);
  }
}

TEST_CASE("perturbing the maximizer cannot improve the quotient") {
  std::mt19937_64 rng(89);
  std::uniform_real_distribution<double> bump(-0.01, 0.01);
  for (int t = 0; t < 20; ++t) {
    const auto inst = instances::random_instance(rng, 10);
    const auto w = instances::spec_of(inst);
    const auto e = instances::exponents_of(inst);
    OracleConfig cfg;
    cfg.max_iters = 5000;
    cfg.step_tol = 1e-15;
    const auto result = hardy::maximize_quotient(w, e, cfg);
    const double base = hardy::quotient(*result.x_star, w, e);
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<double> perturbed = result.x_star->raw();
      for (auto& val : perturbed) val *= 1.0 + bump(rng);
      const double q = hardy::quotient(TestSequence(perturbed), w, e);
      CHECK(q <= base * (1.0 + 1e-6));
    }
  }
}

TEST_CASE("maximizer monotonicity check") {
  SUBCASE("geometric maximizer: w_n decreasing, verified against closed form") {
    const hardy::GeometricFamily fam(0.5, 1.0);
    const Exponents e(2.0, 2.0);
    const auto w = fam.weights(10);
    const TestSequence a = fam.maximizer_sequence(10);
    // analytic w_n = a_n * b gamma^n = b gamma^((n+1)/2) (n - (n-1) sqrt(gamma))
    double prev = hardy::kInfinity;
    for (std::size_t n = 1; n <= 10; ++n) {
      const double nn = static_cast<double>(n);
      const double wn = std::pow(0.5, (nn + 1.0) / 2.0) *
                        (nn - (nn - 1.0) * std::sqrt(0.5));
      CHECK(a.x(n) / hardy::v_hat(w, e, n) == doctest::Approx(wn).epsilon(1e-12));
      CHECK(wn <= prev);
      prev = wn;
    }
    const auto check = hardy::check_maximizer_monotone(a, w, e);
    CHECK(check.decreasing);
    CHECK(check.passed());
  }
  SUBCASE("oracle maximizer under constant weights passes") {
    const auto w = WeightSpec::from_vectors(std::vector<double>(20, 1.0),
                                            std::vector<double>(20, 1.0));
    const Exponents e(2.0, 2.0);
    const auto result = hardy::maximize_quotient(w, e);
    const auto check = hardy::check_maximizer_monotone(*result.x_star, w, e);
    CHECK(check.passed());
  }
  SUBCASE("constructed violation fails at index 2") {
    const auto w = WeightSpec::from_vectors(std::vector<double>(4, 1.0),
                                            std::vector<double>(4, 1.0));
    const Exponents e(2.0, 2.0);
    const TestSequence bad({0.5, 2.0, 0.1, 0.05});  // w_2 > w_1 with unit v_hat
    const auto check = hardy::check_maximizer_monotone(bad, w, e);
    CHECK_FALSE(check.decreasing);
    CHECK(check.first_violation == 2);
    CHECK_FALSE(check.passed());
  }
}

TEST_CASE("oracle determinism") {
  const auto inst = [] {
    std::mt19937_64 rng(97);
    return instances::random_instance(rng, 12);
  }();
  const auto w = instances::spec_of(inst);
  const auto e = instances::exponents_of(inst);
  OracleConfig cfg;
  cfg.seed = 7;
  const auto r1 = hardy::maximize_quotient(w, e, cfg);
  const auto r2 = hardy::maximize_quotient(w, e, cfg);
  CHECK(r1.a_estimate == r2.a_estimate);
  CHECK(r1.iterations_used == r2.iterations_used);
  REQUIRE(r1.x_star->size() == r2.x_star->size());
  for (std::size_t i = 1; i <= r1.x_star->size(); ++i) {
    CHECK(r1.x_star->x(i) == r2.x_star->x(i));
  }
}
