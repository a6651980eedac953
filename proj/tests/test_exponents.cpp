#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "hardy/exponents.hpp"
#include "hardy/test_sequence.hpp"
#include "hardy/weights.hpp"

using hardy::Exponents;
using hardy::TestSequence;
using hardy::validate_exponents;
using hardy::WeightSpec;

TEST_CASE("exponent derivation: self-conjugate case") {
  const Exponents e = validate_exponents(2.0, 2.0);
  CHECK(e.p_star() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(e.r() == 0.0);
  CHECK(e.alpha() == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("exponent derivation: p=2 q=4") {
  const Exponents e = validate_exponents(2.0, 4.0);
  CHECK(e.p_star() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(e.r() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(e.alpha() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("exponent validation rejects out-of-range input") {
  CHECK_THROWS_AS(validate_exponents(1.0, 2.0), std::domain_error);
  CHECK_THROWS_AS(validate_exponents(0.5, 2.0), std::domain_error);
  CHECK_THROWS_AS(validate_exponents(2.0, 1.5), std::domain_error);
  CHECK_THROWS_AS(validate_exponents(2.0, std::numeric_limits<double>::infinity()),
                  std::domain_error);
  CHECK_THROWS_AS(validate_exponents(std::nan(""), 2.0), std::domain_error);
}

TEST_CASE("conjugacy identity holds over random exponents") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> dist(1.01, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const double p = dist(rng);
    const double q = std::uniform_real_distribution<double>(p, 50.0)(rng);
    const Exponents e(p, q);
    CHECK(std::abs(1.0 / e.p() + 1.0 / e.p_star() - 1.0) <= 1e-14);
    CHECK(e.r() >= 0.0);
    CHECK(e.alpha() > 0.0);
    CHECK(e.alpha() < 1.0);
  }
}

TEST_CASE("v_hat values") {
  const Exponents e(2.0, 2.0);
  SUBCASE("unit weight is a fixed point") {
    const auto w = WeightSpec::from_vectors({1.0, 1.0}, {1.0, 1.0});
    CHECK(hardy::v_hat(w, e, 1) == 1.0);
    CHECK(hardy::v_hat(w, Exponents(3.0, 4.0), 2) == 1.0);
  }
  SUBCASE("geometric weight inverts at p=2") {
    std::vector<double> v(5);
    for (int i = 1; i <= 5; ++i) v[i - 1] = std::pow(0.5, i);
    const auto w = WeightSpec::from_vectors(std::vector<double>(5, 1.0), v);
    for (std::size_t i = 1; i <= 5; ++i) {
      CHECK(hardy::v_hat(w, e, i) ==
            doctest::Approx(std::pow(2.0, static_cast<double>(i))).epsilon(1e-14));
      CHECK(hardy::v_hat(w, e, i) * w.v(i) == doctest::Approx(1.0).epsilon(1e-15));
    }
  }
  SUBCASE("constant weight 8 at p=2") {
    const auto w = WeightSpec::from_vectors({1.0}, {8.0});
    CHECK(hardy::v_hat(w, e, 1) == doctest::Approx(0.125).epsilon(1e-15));
  }
  SUBCASE("index out of range") {
    const auto w = WeightSpec::from_vectors({1.0}, {1.0});
    CHECK_THROWS_AS(hardy::v_hat(w, e, 2), std::out_of_range);
    CHECK_THROWS_AS(hardy::v_hat(w, e, 0), std::out_of_range);
  }
}

TEST_CASE("test sequence membership validation") {
  CHECK_THROWS_AS(TestSequence({0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(TestSequence({1.0, -0.5}), std::invalid_argument);
  CHECK_THROWS_AS(TestSequence({}), std::invalid_argument);
  CHECK_THROWS_AS(TestSequence({1.0, std::nan("")}), std::invalid_argument);
  const TestSequence x({1.0, 0.0, 3.0});
  CHECK(x.partial_sum(0) == 0.0);
  CHECK(x.partial_sum(3) == 4.0);
  CHECK(x.x(2) == 0.0);
}

TEST_CASE("summable flag is set by the verifying factory") {
  const auto w = WeightSpec::from_vectors({1.0, 1.0}, {1.0, 1.0});
  const Exponents e(2.0, 2.0);
  const TestSequence plain({1.0, 1.0});
  CHECK_FALSE(plain.summable_verified());
  const TestSequence checked = TestSequence::in_a0({1.0, 1.0}, w, e);
  CHECK(checked.summable_verified());
  CHECK(checked.normalized().summable_verified());
}

TEST_CASE("weight validation") {
  CHECK_THROWS_AS(WeightSpec::from_vectors({1.0, 0.0}, {1.0, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(WeightSpec::from_vectors({1.0}, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(WeightSpec::from_vectors({1.0}, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(WeightSpec::from_vectors({}, {}), std::invalid_argument);
  // zero u entries are allowed only on an explicit tail
  const auto w = WeightSpec::with_zero_tail({1.0, 0.0}, {1.0, 2.0}, 2);
  CHECK(w.u(2) == 0.0);
  CHECK(w.zero_tail_begin() == 2);
  CHECK_THROWS_AS(WeightSpec::with_zero_tail({0.0, 1.0}, {1.0, 1.0}, 2),
                  std::invalid_argument);
}

TEST_CASE("truncation policy validation") {
  CHECK_THROWS_AS(hardy::TruncationPolicy::fixed(0), std::invalid_argument);
  CHECK_THROWS_AS(hardy::TruncationPolicy::doubling(0.0), std::invalid_argument);
  CHECK_THROWS_AS(hardy::TruncationPolicy::doubling(1e-8, 128, 64),
                  std::invalid_argument);
  const auto policy = hardy::TruncationPolicy::doubling(1e-6, 32, 1 << 12);
  CHECK(policy.is_doubling());
  CHECK(policy.tail_tolerance() == 1e-6);
}
