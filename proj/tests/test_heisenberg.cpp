#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "tfgabor/heisenberg.hpp"
#include "tfgabor/tfcore.hpp"
#include "tfgabor/twisted.hpp"
#include "tfgabor/windows.hpp"

using namespace tfg;
using heisenberg::HeisenbergElement;
using heisenberg::HGammaElement;

namespace {

HeisenbergElement random_elem(int d, std::mt19937_64& rng, int half = 5) {
  std::uniform_int_distribution<int> coord(-half, half);
  HeisenbergElement x;
  x.j.resize(d);
  x.k.resize(d);
  for (int& c : x.j) c = coord(rng);
  for (int& c : x.k) c = coord(rng);
  x.l = coord(rng);
  return x;
}

}  // namespace

TEST_CASE("group law worked example and axioms (exact integers)") {
  const HeisenbergElement x{{1}, {2}, 0};
  const HeisenbergElement y{{3}, {4}, 5};
  const auto xy = heisenberg::h_mul(x, y);
  CHECK(xy.j == std::vector<int>{4});
  CHECK(xy.k == std::vector<int>{6});
  CHECK(xy.l == 11);  // 0 + 5 + 2*3

  std::mt19937_64 rng(41);
  for (int d : {1, 2}) {
    const auto e = heisenberg::h_identity(d);
    for (int trial = 0; trial < 100; ++trial) {
      const auto a = random_elem(d, rng);
      const auto b = random_elem(d, rng);
      const auto c = random_elem(d, rng);
      CHECK(heisenberg::h_mul(e, a) == a);
      CHECK(heisenberg::h_mul(a, e) == a);
      CHECK(heisenberg::h_mul(heisenberg::h_mul(a, b), c) ==
            heisenberg::h_mul(a, heisenberg::h_mul(b, c)));
      CHECK(heisenberg::h_mul(a, heisenberg::h_inverse(a)) == e);
      CHECK(heisenberg::h_mul(heisenberg::h_inverse(a), a) == e);
      // commutators are central
      const auto comm = heisenberg::h_mul(
          heisenberg::h_mul(a, b),
          heisenberg::h_mul(heisenberg::h_inverse(a), heisenberg::h_inverse(b)));
      CHECK(heisenberg::h_is_central(comm));
    }
  }
}

TEST_CASE("pi_rep: central action, kernel qZ, homomorphism") {
  const int L = 12, a = 3, b = 2;  // ab/L = 1/2, so q = 2
  const long g = std::gcd(long(a) * b, long(L));
  const long q = L / g;
  CHECK(q == 2);

  // central element acts by the scalar e^{-2 pi i (ab/L) l}
  const CMat c1 = heisenberg::pi_rep({{0}, {0}, 1}, L, a, b);
  CHECK((c1 - unit_phase(-double(a) * b / L) * CMat::Identity(L, L))
            .cwiseAbs()
            .maxCoeff() <= 1e-14);
  // kernel: pi(0, 0, q) = I
  const CMat cq = heisenberg::pi_rep({{0}, {0}, q}, L, a, b);
  CHECK((cq - CMat::Identity(L, L)).cwiseAbs().maxCoeff() <= 1e-14);

  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = random_elem(1, rng);
    const auto y = random_elem(1, rng);
    const CMat lhs = heisenberg::pi_rep(heisenberg::h_mul(x, y), L, a, b);
    const CMat rhs = heisenberg::pi_rep(x, L, a, b) * heisenberg::pi_rep(y, L, a, b);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12);
  }

  // pi(j, 0, 0) and pi(0, k, 0) are the expected modulation / translation
  std::mt19937_64 rng2(43);
  const CVec f = windows::random_signal(L, rng2);
  CHECK((heisenberg::pi_rep({{2}, {0}, 0}, L, a, b) * f -
         tfcore::tf_shift(f, 2L * b, 0))
            .cwiseAbs()
            .maxCoeff() <= 1e-13);
  CHECK((heisenberg::pi_rep({{0}, {3}, 0}, L, a, b) * f -
         tfcore::tf_shift(f, 0, 3L * a))
            .cwiseAbs()
            .maxCoeff() <= 1e-13);
}

TEST_CASE("H_gamma group law, inverse, and the embedding homomorphism") {
  const double g = 0.5;
  // (0,1,1)(1,0,1) = (1, 1, e^{-pi i}) = (1, 1, -1)
  const HGammaElement x{{0}, {1}, Complex(1.0)};
  const HGammaElement y{{1}, {0}, Complex(1.0)};
  const auto xy = heisenberg::hgamma_mul(x, y, g);
  CHECK(xy.j == std::vector<int>{1});
  CHECK(xy.k == std::vector<int>{1});
  CHECK(std::abs(xy.zeta - Complex(-1.0)) <= 1e-14);

  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> uphase(0.0, 1.0);
  for (double gamma : {0.5, 0.707106781186547524}) {
    for (int trial = 0; trial < 50; ++trial) {
      auto a = random_elem(1, rng);
      auto b = random_elem(1, rng);
      // embedding is a homomorphism
      const auto lhs = heisenberg::hgamma_embed(heisenberg::h_mul(a, b), gamma);
      const auto rhs = heisenberg::hgamma_mul(heisenberg::hgamma_embed(a, gamma),
                                              heisenberg::hgamma_embed(b, gamma), gamma);
      CHECK(lhs.j == rhs.j);
      CHECK(lhs.k == rhs.k);
      CHECK(std::abs(lhs.zeta - rhs.zeta) <= 1e-12);
      // inverse in H_gamma
      HGammaElement z{{a.j[0]}, {a.k[0]}, unit_phase(uphase(rng))};
      const auto zi = heisenberg::hgamma_inverse(z, gamma);
      const auto prod = heisenberg::hgamma_mul(z, zi, gamma);
      CHECK(prod.j == std::vector<int>{0});
      CHECK(prod.k == std::vector<int>{0});
      CHECK(std::abs(prod.zeta - Complex(1.0)) <= 1e-12);
    }
  }

  // central elements with distinct l map to distinct phases for irrational gamma
  const double irr = 0.707106781186547524;
  for (long l1 = -4; l1 <= 4; ++l1)
    for (long l2 = l1 + 1; l2 <= 4; ++l2) {
      const auto z1 = heisenberg::hgamma_embed({{0}, {0}, l1}, irr);
      const auto z2 = heisenberg::hgamma_embed({{0}, {0}, l2}, irr);
      CHECK(std::abs(z1.zeta - z2.zeta) > 1e-6);
    }
}

TEST_CASE("j_embed covariance and intertwining with group convolution") {
  const double g = 0.5;
  const int Q = 4;  // gamma = p/q with q = 2; Q is a multiple of q
  std::mt19937_64 rng(45);
  std::normal_distribution<double> nd;
  std::uniform_int_distribution<int> coord(-2, 2);
  auto random_seq = [&](double gamma) {
    twisted::TwistedSequence a(1, gamma);
    for (int t = 0; t < 4; ++t)
      a.add({coord(rng), coord(rng)}, Complex(nd(rng), nd(rng)));
    return a;
  };

  const auto a = random_seq(g);
  const auto ja = heisenberg::j_embed(a, 8);
  // covariance: value at zeta_q is zeta_q^{-1} times the value at zeta = 1
  for (const auto& [idx, vals] : ja.values)
    for (int q = 0; q < 8; ++q)
      CHECK(std::abs(vals[size_t(q)] - unit_phase(-double(q) / 8.0) * vals[0]) <=
            1e-13);

  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_seq(g);
    const auto h = random_seq(g);
    const auto lhs = heisenberg::j_embed(twisted::twisted_conv(f, h), Q);
    const auto rhs = heisenberg::group_convolve(heisenberg::j_embed(f, Q),
                                                heisenberg::j_embed(h, Q), g);
    CHECK(heisenberg::grid_distance(lhs, rhs) <= 1e-12);
  }
}

TEST_CASE("sigma representation: shift action, unitarity, homomorphism at gamma=p/N") {
  const int N = 8;
  const double g = 3.0 / N, d = 0.41;
  std::mt19937_64 rng(46);

  // (0,0,0) is the identity, (0,k,0) the cyclic shift
  const CVec c = windows::random_signal(N, rng);
  CHECK((heisenberg::sigma_rep_apply(g, d, {{0}, {0}, 0}, c) - c)
            .cwiseAbs()
            .maxCoeff() <= 1e-14);
  const CVec shifted = heisenberg::sigma_rep_apply(g, d, {{0}, {2}, 0}, c);
  for (int n = 0; n < N; ++n)
    CHECK(std::abs(shifted[n] - c[imod(n - 2, N)]) <= 1e-14);

  for (int trial = 0; trial < 50; ++trial) {
    const auto x = random_elem(1, rng);
    const auto y = random_elem(1, rng);
    const CMat mx = heisenberg::sigma_rep_matrix(g, d, x, N);
    CHECK((mx * mx.adjoint() - CMat::Identity(N, N)).cwiseAbs().maxCoeff() <= 1e-12);
    const CMat lhs = heisenberg::sigma_rep_matrix(g, d, heisenberg::h_mul(x, y), N);
    const CMat rhs = mx * heisenberg::sigma_rep_matrix(g, d, y, N);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12);
  }
}
