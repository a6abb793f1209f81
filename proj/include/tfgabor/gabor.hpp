#ifndef TFGABOR_GABOR_HPP
#define TFGABOR_GABOR_HPP

#include <vector>

#include "tfgabor/types.hpp"

namespace tfg::gabor {

/// Gabor system G(phi, a, b) on C^L: atoms M_{mb} T_{na} phi for
/// n in [0, L/a), m in [0, L/b). Both steps must divide L.
struct GaborSystem {
  CVec window;
  int L = 0;
  int time_step = 0;  // a, samples
  int freq_step = 0;  // b, bins

  int num_time() const { return L / time_step; }
  int num_freq() const { return L / freq_step; }
  long atom_count() const { return long(num_time()) * num_freq(); }
  double density() const { return double(time_step) * freq_step / L; }  // ab/L
  double redundancy() const { return double(L) / (double(time_step) * freq_step); }

  /// Atom M_{m*b} T_{n*a} phi.
  CVec atom(int m, int n) const;
};

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
  bool is_frame = false;
};

struct JanssenRep {
  CMat coefficients;   // a x b, index (j, k)
  int mod_step = 0;    // L/a, adjoint-lattice modulation step
  int trans_step = 0;  // L/b, adjoint-lattice translation step
};

struct TraceProbePoint {
  double eps;
  Complex value;             // <psi, phi_eps>
  double analysis_norm;      // ||A_psi phi_eps||
  double phi_eps_norm;       // ||phi_eps||
};

GaborSystem build_system(CVec phi, int a, int b);

/// Analysis operator: coefficients c(m, n) = <f, M_{mb} T_{na} phi>,
/// an (L/b) x (L/a) grid.
CMat analysis(const GaborSystem& sys, const CVec& f);

/// Synthesis (adjoint of analysis): sum of c(m, n) * M_{mb} T_{na} phi.
CVec synthesis(const GaborSystem& sys, const CMat& coef);

/// Matrix-free application of the generalized frame operator
/// S_{psi,phi} f = synthesis_psi(analysis_phi(f)); psi defaults to phi.
CVec apply_frame_operator(const GaborSystem& sys, const CVec& f,
                          const CVec* psi = nullptr);

/// Dense L x L matrix of S_{psi,phi}.
CMat frame_matrix(const GaborSystem& sys, const CVec* psi = nullptr);

/// Extreme eigenvalues of the frame operator S. Dense Hermitian eigensolve
/// for L <= 512, extremal eigenvalue iteration above.
FrameBounds frame_bounds(const GaborSystem& sys);

/// Dual window S^{-1} phi via conjugate gradient (dense fallback).
/// Throws std::domain_error when the system is not a frame.
CVec dual_window(const GaborSystem& sys);

/// Janssen representation of S_{psi,phi} over the adjoint lattice:
/// coefficients c(j,k) = (L/(ab)) * <psi, M_{jL/a} T_{kL/b} phi>.
JanssenRep janssen(const GaborSystem& sys, const CVec* psi = nullptr);

/// Reassembles sum of c(j,k) * M_{jL/a} T_{kL/b} as a dense matrix.
CMat janssen_operator(const JanssenRep& rep, int L);

/// tr(op) / L. Throws on non-square input.
Complex normalized_trace(const CMat& op);

/// Resolvent probe behind the density theorem: phi_eps = (eps I + S)^{-1} psi
/// with S the frame operator of (psi, sys lattice). Returns <psi, phi_eps>
/// per eps; converges to ab/L as eps -> 0 when S has full rank.
std::vector<TraceProbePoint> density_trace_probe(const CVec& psi,
                                                 const GaborSystem& sys,
                                                 const std::vector<double>& eps_list);

}  // namespace tfg::gabor

#endif
