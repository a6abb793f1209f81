#include "tfgabor/modspace.hpp"

#include <cmath>

#include "tfgabor/tfcore.hpp"

namespace tfg::modspace {

namespace {

void check_params(const WeightSpec& w) {
  switch (w.kind) {
    case WeightKind::PolynomialSum:
    case WeightKind::PolynomialFreq:
      if (w.a <= 0.0) throw std::invalid_argument("weight: exponent a must be > 0");
      break;
    case WeightKind::SubexpTime:
      if (w.b <= 0.0 || w.b >= 1.0)
        throw std::invalid_argument("weight: exponent b must lie in (0, 1)");
      break;
    case WeightKind::Constant:
      break;
  }
}

// Symmetric representative in [-L/2, L/2).
double symmetric_coord(long i, long L) {
  long r = imod(i, L);
  if (2 * r >= L) r -= L;
  return double(r);
}

}  // namespace

double weight_eval(const WeightSpec& w, double omega, double x) {
  check_params(w);
  switch (w.kind) {
    case WeightKind::PolynomialSum:
      return std::pow(1.0 + std::abs(omega) + std::abs(x), w.a);
    case WeightKind::PolynomialFreq:
      return std::pow(1.0 + std::abs(omega), w.a);
    case WeightKind::SubexpTime:
      return std::exp(std::pow(std::abs(x), w.b));
    case WeightKind::Constant:
      return 1.0;
  }
  return 1.0;
}

bool weight_dominates(const WeightSpec& lo, const WeightSpec& hi, int grid_half_width) {
  for (int m = -grid_half_width; m <= grid_half_width; ++m)
    for (int n = -grid_half_width; n <= grid_half_width; ++n)
      if (weight_eval(lo, m, n) > weight_eval(hi, m, n)) return false;
  return true;
}

double m1v_norm(const CVec& f, const WeightSpec& w, const CVec& gamma_window) {
  const long L = f.size();
  if (gamma_window.size() != L)
    throw std::invalid_argument("m1v_norm: length mismatch");
  if (gamma_window.norm() == 0.0) throw std::invalid_argument("m1v_norm: zero window");
  const CMat grid = tfcore::stft(f, gamma_window);
  double s = 0.0;
  for (long m = 0; m < L; ++m)
    for (long n = 0; n < L; ++n)
      s += std::abs(grid(m, n)) *
           weight_eval(w, symmetric_coord(m, L), symmetric_coord(n, L));
  return s;
}

CVec default_gamma_window(int L) {
  if (L < 1) throw std::invalid_argument("default_gamma_window: L < 1");
  CVec g(L);
  const double width = std::sqrt(double(L));
  for (int t = 0; t < L; ++t) {
    const double u = (double(t) - double(L) / 2.0) / width;
    g[t] = std::exp(-M_PI * u * u);
  }
  return g / g.norm();
}

double l1v_norm(const twisted::TwistedSequence& seq, const WeightSpec& w,
                double alpha, double beta) {
  if (seq.d() != 1) throw std::invalid_argument("l1v_norm: requires d == 1");
  if (alpha <= 0.0 || beta <= 0.0)
    throw std::invalid_argument("l1v_norm: alpha, beta must be > 0");
  return seq.weighted_l1_norm([&](const twisted::Index& idx) {
    return weight_eval(w, double(idx[0]) / beta, double(idx[1]) / alpha);
  });
}

}  // namespace tfg::modspace
