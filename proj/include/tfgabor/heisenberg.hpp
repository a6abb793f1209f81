#ifndef TFGABOR_HEISENBERG_HPP
#define TFGABOR_HEISENBERG_HPP

#include <map>
#include <vector>

#include "tfgabor/twisted.hpp"
#include "tfgabor/types.hpp"

namespace tfg::heisenberg {

using twisted::TwistedSequence;

/// Element (j, k, l) of the discrete Heisenberg group with group law
/// (j,k,l)(j',k',l') = (j+j', k+k', l+l'+k.j').
struct HeisenbergElement {
  std::vector<int> j;
  std::vector<int> k;
  long l = 0;

  int d() const { return int(j.size()); }
  bool operator==(const HeisenbergElement& o) const = default;
};

HeisenbergElement h_identity(int d);
HeisenbergElement h_mul(const HeisenbergElement& x, const HeisenbergElement& y);
HeisenbergElement h_inverse(const HeisenbergElement& x);
bool h_is_central(const HeisenbergElement& x);

/// Unitary image e^{-2 pi i (ab/L) l} M_{jb} T_{ka} on C^L (d == 1).
CMat pi_rep(const HeisenbergElement& x, int L, int a_step, int b_step);

/// Element (j, k, zeta) of the compact-center group: zeta on the unit circle,
/// group law (j,k,zeta)(j',k',zeta') = (j+j', k+k', zeta zeta' e^{-2 pi i gamma k.j'}).
struct HGammaElement {
  std::vector<int> j;
  std::vector<int> k;
  Complex zeta{1.0, 0.0};
};

HGammaElement hgamma_mul(const HGammaElement& x, const HGammaElement& y, double gamma);
HGammaElement hgamma_inverse(const HGammaElement& x, double gamma);

/// Image of (j,k,l) under the homomorphism (j,k,l) -> (j,k,e^{-2 pi i gamma l}).
HGammaElement hgamma_embed(const HeisenbergElement& x, double gamma);

/// Function on Z^{2d} x {Q-th roots of unity}; values[idx][q] lives at
/// zeta_q = e^{2 pi i q / Q}.
struct GroupGridFunction {
  int d = 1;
  int grid = 1;  // Q
  std::map<twisted::Index, std::vector<Complex>> values;

  Complex at(const twisted::Index& idx, int q) const;
};

/// Embedding J(a)(j, k, zeta) = zeta^{-1} a_{jk}, sampled on the zeta grid.
GroupGridFunction j_embed(const TwistedSequence& a, int grid);

/// Group convolution on Z^{2d} x T sampled on the zeta grid (normalized Haar
/// on the circle factor). Exact when gamma = p/q with q | grid.
GroupGridFunction group_convolve(const GroupGridFunction& f, const GroupGridFunction& g,
                                 double gamma);

double grid_distance(const GroupGridFunction& f, const GroupGridFunction& g);

/// Induced-representation action on Z_N:
/// [sigma(j,k,l) c]_n = e^{2 pi i (delta j - gamma l + n gamma j)} c_{(n-k) mod N}.
/// d == 1 only.
CVec sigma_rep_apply(double gamma, double delta, const HeisenbergElement& x,
                     const CVec& c);
CMat sigma_rep_matrix(double gamma, double delta, const HeisenbergElement& x, int N);

}  // namespace tfg::heisenberg

#endif
