#ifndef TFGABOR_TFCORE_HPP
#define TFGABOR_TFCORE_HPP

#include "tfgabor/types.hpp"

namespace tfg::tfcore {

/// Combined modulation-translation shift on the cyclic group of order L:
/// result[t] = e^{2*pi*i*m*t/L} * f[(t-n) mod L]. Norm preserving.
CVec tf_shift(const CVec& f, long m, long n);

/// Dense L x L matrix of the operator M_m T_n on C^L.
CMat mod_trans_matrix(int L, long m, long n);

/// Full-grid windowed Fourier transform. result(m, n) = <f, M_m T_n phi>.
CMat stft(const CVec& f, const CVec& phi);

/// Inverse of stft: sums V(m,n) * M_m T_n phi over the full grid, scaled by
/// 1/(L*||phi||^2) so that istft(stft(f, phi), phi) == f for any nonzero phi.
CVec istft(const CMat& grid, const CVec& phi);

}  // namespace tfg::tfcore

#endif
