#include "tfgabor/tfcore.hpp"

namespace tfg::tfcore {

CVec tf_shift(const CVec& f, long m, long n) {
  const long L = f.size();
  if (L < 1) throw std::invalid_argument("tf_shift: empty signal");
  require_finite(f, "tf_shift");
  m = imod(m, L);
  n = imod(n, L);
  CVec out(L);
  for (long t = 0; t < L; ++t)
    out[t] = unit_phase(double(m) * double(t) / double(L)) * f[imod(t - n, L)];
  return out;
}

CMat mod_trans_matrix(int L, long m, long n) {
  CMat op = CMat::Zero(L, L);
  m = imod(m, L);
  n = imod(n, L);
  for (long t = 0; t < L; ++t)
    op(t, imod(t - n, L)) = unit_phase(double(m) * double(t) / double(L));
  return op;
}

namespace {

// Forward kernel e^{-2*pi*i*m*t/L}, no 1/sqrt(L) factor.
CMat dft_matrix(long L) {
  CMat W(L, L);
  for (long m = 0; m < L; ++m)
    for (long t = 0; t < L; ++t)
      W(m, t) = unit_phase(-double(m) * double(t) / double(L));
  return W;
}

}  // namespace

CMat stft(const CVec& f, const CVec& phi) {
  const long L = f.size();
  if (phi.size() != L) throw std::invalid_argument("stft: length mismatch");
  require_finite(f, "stft");
  require_finite(phi, "stft");
  const CMat W = dft_matrix(L);
  CMat grid(L, L);
  CVec g(L);
  for (long n = 0; n < L; ++n) {
    for (long t = 0; t < L; ++t) g[t] = f[t] * std::conj(phi[imod(t - n, L)]);
    grid.col(n) = W * g;
  }
  return grid;
}

CVec istft(const CMat& grid, const CVec& phi) {
  const long L = phi.size();
  if (grid.rows() != L || grid.cols() != L)
    throw std::invalid_argument("istft: grid dimension mismatch");
  const double wnorm2 = phi.squaredNorm();
  if (wnorm2 <= 0.0) throw std::invalid_argument("istft: zero window");
  const CMat U = dft_matrix(L).adjoint() * grid;  // U(t, n)
  CVec out = CVec::Zero(L);
  for (long t = 0; t < L; ++t)
    for (long n = 0; n < L; ++n) out[t] += U(t, n) * phi[imod(t - n, L)];
  return out / (double(L) * wnorm2);
}

}  // namespace tfg::tfcore
