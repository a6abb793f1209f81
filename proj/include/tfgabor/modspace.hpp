#ifndef TFGABOR_MODSPACE_HPP
#define TFGABOR_MODSPACE_HPP

#include "tfgabor/twisted.hpp"
#include "tfgabor/types.hpp"

namespace tfg::modspace {

enum class WeightKind {
  PolynomialSum,   // (1 + |omega| + |x|)^a
  PolynomialFreq,  // (1 + |omega|)^a
  SubexpTime,      // e^{|x|^b}
  Constant,        // 1
};

struct WeightSpec {
  WeightKind kind = WeightKind::Constant;
  double a = 1.0;  // polynomial exponent, > 0
  double b = 0.5;  // subexponential exponent, in (0, 1)
};

double weight_eval(const WeightSpec& w, double omega, double x);

/// Pointwise comparison helper used in monotonicity checks.
bool weight_dominates(const WeightSpec& lo, const WeightSpec& hi, int grid_half_width);

/// Discrete M^1_v norm: sum over the full STFT grid of |V_gamma f| times the
/// weight at symmetric coordinates in [-L/2, L/2).
double m1v_norm(const CVec& f, const WeightSpec& w, const CVec& gamma_window);

/// Default analysis window: unit-norm sampled Gaussian of width sqrt(L).
CVec default_gamma_window(int L);

/// Weighted sequence norm with v~(j, k) = v(j/beta, k/alpha), the restriction
/// of the time-frequency weight to the adjoint lattice (d == 1).
double l1v_norm(const twisted::TwistedSequence& seq, const WeightSpec& w,
                double alpha, double beta);

}  // namespace tfg::modspace

#endif
