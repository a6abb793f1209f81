#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tfgabor/modspace.hpp"
#include "tfgabor/tfcore.hpp"
#include "tfgabor/twisted.hpp"
#include "tfgabor/windows.hpp"

using namespace tfg;
using modspace::WeightKind;
using modspace::WeightSpec;

TEST_CASE("weight_eval formulas and validation") {
  const WeightSpec v1{WeightKind::PolynomialSum, 2.0, 0.5};
  CHECK(modspace::weight_eval(v1, 3.0, -4.0) == doctest::Approx(64.0));  // (1+3+4)^2
  const WeightSpec v2{WeightKind::PolynomialFreq, 1.0, 0.5};
  CHECK(modspace::weight_eval(v2, -5.0, 100.0) == doctest::Approx(6.0));
  const WeightSpec v3{WeightKind::SubexpTime, 1.0, 0.5};
  CHECK(modspace::weight_eval(v3, 7.0, 4.0) == doctest::Approx(std::exp(2.0)));
  const WeightSpec c{WeightKind::Constant, 1.0, 0.5};
  CHECK(modspace::weight_eval(c, 9.0, 9.0) == doctest::Approx(1.0));

  CHECK_THROWS_AS(
      modspace::weight_eval(WeightSpec{WeightKind::PolynomialSum, -1.0, 0.5}, 0, 0),
      std::invalid_argument);
  CHECK_THROWS_AS(
      modspace::weight_eval(WeightSpec{WeightKind::SubexpTime, 1.0, 1.5}, 0, 0),
      std::invalid_argument);
}

TEST_CASE("weights are submultiplicative on a grid") {
  const std::vector<WeightSpec> specs = {
      {WeightKind::PolynomialSum, 1.0, 0.5},
      {WeightKind::PolynomialSum, 2.0, 0.5},
      {WeightKind::PolynomialFreq, 1.5, 0.5},
      {WeightKind::SubexpTime, 1.0, 0.5},
  };
  for (const auto& w : specs) {
    for (int o1 = -4; o1 <= 4; o1 += 2)
      for (int x1 = -4; x1 <= 4; x1 += 2)
        for (int o2 = -4; o2 <= 4; o2 += 2)
          for (int x2 = -4; x2 <= 4; x2 += 2) {
            const double lhs = modspace::weight_eval(w, o1 + o2, x1 + x2);
            const double rhs = modspace::weight_eval(w, o1, x1) *
                               modspace::weight_eval(w, o2, x2);
            CHECK(lhs <= rhs * (1.0 + 1e-12));
          }
  }
}

TEST_CASE("m1v_norm of a delta against a known closed form") {
  // For f = delta_{t0} the STFT magnitudes are |gamma[(t0 - n) mod L]| for every
  // m, so the unweighted norm is L * ||gamma||_1.
  const int L = 16;
  const CVec gamma = modspace::default_gamma_window(L);
  CHECK(gamma.norm() == doctest::Approx(1.0).epsilon(1e-12));
  CVec f = CVec::Zero(L);
  f[5] = 1.0;
  const WeightSpec c{WeightKind::Constant, 1.0, 0.5};
  const double got = modspace::m1v_norm(f, c, gamma);
  const double want = double(L) * gamma.cwiseAbs().sum();
  CHECK(got == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("m1v_norm grows with the weight and scales linearly") {
  std::mt19937_64 rng(61);
  const int L = 16;
  const CVec gamma = modspace::default_gamma_window(L);
  const CVec f = windows::random_signal(L, rng);
  const WeightSpec c{WeightKind::Constant, 1.0, 0.5};
  const WeightSpec v1{WeightKind::PolynomialSum, 1.0, 0.5};
  const WeightSpec v1b{WeightKind::PolynomialSum, 2.0, 0.5};
  const double n0 = modspace::m1v_norm(f, c, gamma);
  const double n1 = modspace::m1v_norm(f, v1, gamma);
  const double n2 = modspace::m1v_norm(f, v1b, gamma);
  CHECK(n0 <= n1);
  CHECK(n1 <= n2);
  CHECK(modspace::m1v_norm(3.0 * f, v1, gamma) == doctest::Approx(3.0 * n1));

  // norm is invariant under time-frequency shifts for the constant weight
  const double ns = modspace::m1v_norm(tfcore::tf_shift(f, 3, 7), c, gamma);
  CHECK(ns == doctest::Approx(n0).epsilon(1e-10));
}

TEST_CASE("different analysis windows give equivalent norms (bounded ratio)") {
  std::mt19937_64 rng(62);
  const int L = 16;
  const CVec g1 = modspace::default_gamma_window(L);
  CVec g2 = windows::make_window("gaussian:3", L);
  g2 /= g2.norm();
  const WeightSpec v1{WeightKind::PolynomialSum, 1.0, 0.5};
  double lo = 1e300, hi = 0.0;
  for (int t = 0; t < 10; ++t) {
    const CVec f = windows::random_signal(L, rng);
    const double a = modspace::m1v_norm(f, v1, g1);
    const double b = modspace::m1v_norm(f, v1, g2);
    lo = std::min(lo, a / b);
    hi = std::max(hi, a / b);
  }
  // empirical equivalence: the ratio stays within a loose fixed band
  CHECK(lo > 0.05);
  CHECK(hi < 20.0);
}

TEST_CASE("l1v_norm matches a direct sum over the support") {
  const double alpha = 2.0, beta = 4.0;
  const WeightSpec v1{WeightKind::PolynomialSum, 1.0, 0.5};
  twisted::TwistedSequence a(1, 0.5);
  a.set({1, -2}, Complex(2.0, 0.0));
  a.set({0, 3}, Complex(0.0, -1.0));
  const double want = 2.0 * modspace::weight_eval(v1, 1.0 / beta, -2.0 / alpha) +
                      1.0 * modspace::weight_eval(v1, 0.0, 3.0 / alpha);
  CHECK(modspace::l1v_norm(a, v1, alpha, beta) == doctest::Approx(want).epsilon(1e-13));
  // constant weight reduces to the plain l1 norm
  const WeightSpec c{WeightKind::Constant, 1.0, 0.5};
  CHECK(modspace::l1v_norm(a, c, alpha, beta) == doctest::Approx(a.l1_norm()));
}

TEST_CASE("weight_dominates orders the polynomial scale") {
  const WeightSpec c{WeightKind::Constant, 1.0, 0.5};
  const WeightSpec v1{WeightKind::PolynomialSum, 1.0, 0.5};
  const WeightSpec v1b{WeightKind::PolynomialSum, 2.0, 0.5};
  CHECK(modspace::weight_dominates(c, v1, 8));
  CHECK(modspace::weight_dominates(v1, v1b, 8));
  CHECK_FALSE(modspace::weight_dominates(v1b, v1, 8));
}
