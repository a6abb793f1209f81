#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tfgabor/tfcore.hpp"
#include "tfgabor/windows.hpp"

using namespace tfg;

namespace {

// Oracle: result[t] = e^{2 pi i m t / L} f[(t - n) mod L], written out directly.
CVec tf_shift_oracle(const CVec& f, long m, long n) {
  const long L = f.size();
  CVec out(L);
  for (long t = 0; t < L; ++t)
    out[t] = unit_phase(double(m) * double(t) / double(L)) * f[imod(t - n, L)];
  return out;
}

}  // namespace

TEST_CASE("tf_shift matches the elementwise formula") {
  std::mt19937_64 rng(7);
  for (int L : {5, 8, 12}) {
    const CVec f = windows::random_signal(L, rng);
    for (long m : {0L, 1L, 3L, -2L, long(L)})
      for (long n : {0L, 1L, long(L - 1), -3L}) {
        const CVec got = tfcore::tf_shift(f, m, n);
        const CVec want = tf_shift_oracle(f, m, n);
        CHECK((got - want).cwiseAbs().maxCoeff() <= 1e-13);
      }
  }
}

TEST_CASE("tf_shift is norm preserving and composes with commutation phase") {
  std::mt19937_64 rng(8);
  const int L = 16;
  const CVec f = windows::random_signal(L, rng);
  CHECK(tfcore::tf_shift(f, 5, 3).norm() == doctest::Approx(f.norm()).epsilon(1e-14));

  // M_{m2} T_{n2} M_{m1} T_{n1} = e^{2 pi i m1 n2 / L} M_{m1+m2} T_{n1+n2}
  for (long m1 : {1L, 4L})
    for (long n1 : {2L, 7L})
      for (long m2 : {3L, 5L})
        for (long n2 : {1L, 6L}) {
          const CVec lhs = tfcore::tf_shift(tfcore::tf_shift(f, m1, n1), m2, n2);
          const CVec rhs = unit_phase(-double(m1) * double(n2) / L) *
                           tfcore::tf_shift(f, m1 + m2, n1 + n2);
          CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-13);
        }
}

TEST_CASE("mod_trans_matrix agrees with tf_shift") {
  std::mt19937_64 rng(9);
  const int L = 12;
  const CVec f = windows::random_signal(L, rng);
  for (long m : {0L, 2L, 7L})
    for (long n : {0L, 3L, 11L}) {
      const CMat U = tfcore::mod_trans_matrix(L, m, n);
      CHECK((U * f - tfcore::tf_shift(f, m, n)).cwiseAbs().maxCoeff() <= 1e-14);
      CHECK((U * U.adjoint() - CMat::Identity(L, L)).cwiseAbs().maxCoeff() <= 1e-14);
    }
}

TEST_CASE("stft entries match brute-force inner products") {
  std::mt19937_64 rng(10);
  const int L = 10;
  const CVec f = windows::random_signal(L, rng);
  const CVec phi = windows::random_signal(L, rng);
  const CMat V = tfcore::stft(f, phi);
  REQUIRE(V.rows() == L);
  REQUIRE(V.cols() == L);
  for (int m = 0; m < L; ++m)
    for (int n = 0; n < L; ++n) {
      Complex want = 0.0;
      for (int t = 0; t < L; ++t)
        want += std::conj(unit_phase(double(m) * t / L) * phi[imod(t - n, L)]) * f[t];
      CHECK(std::abs(V(m, n) - want) <= 1e-13);
    }
}

TEST_CASE("full-grid Parseval identity and exact inversion") {
  std::mt19937_64 rng(11);
  for (int L : {8, 16, 64}) {
    for (const auto& [name, phi] : windows::builtin_family(L)) {
      INFO("L=", L, " window=", name);
      const CVec f = windows::random_signal(L, rng);
      const CMat V = tfcore::stft(f, phi);
      const double lhs = V.squaredNorm();
      const double rhs = double(L) * f.squaredNorm() * phi.squaredNorm();
      CHECK(std::abs(lhs - rhs) <= 1e-10 * rhs);
      const CVec back = tfcore::istft(V, phi);
      CHECK((back - f).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("stft covariance under time-frequency shifts of the signal") {
  std::mt19937_64 rng(12);
  const int L = 12;
  const CVec f = windows::random_signal(L, rng);
  const CVec phi = windows::make_window("gaussian", L);
  const CMat V = tfcore::stft(f, phi);
  const long m0 = 3, n0 = 5;
  const CMat Vs = tfcore::stft(tfcore::tf_shift(f, m0, n0), phi);
  // |V_{M T f}(m, n)| = |V_f(m - m0, n - n0)|
  for (int m = 0; m < L; ++m)
    for (int n = 0; n < L; ++n)
      CHECK(std::abs(std::abs(Vs(m, n)) -
                     std::abs(V(imod(m - m0, L), imod(n - n0, L)))) <= 1e-12);
}
