#ifndef TFGABOR_LINALG_HPP
#define TFGABOR_LINALG_HPP

#include <functional>

#include "tfgabor/types.hpp"

namespace tfg::linalg {

using ApplyFn = std::function<CVec(const CVec&)>;

/// Conjugate gradient for Hermitian positive-definite operators.
/// Returns the approximate solution; sets *converged if given.
CVec conjugate_gradient(const ApplyFn& apply, const CVec& rhs, double rel_tol,
                        int max_iter, bool* converged = nullptr);

struct EigRange {
  double min_eig;
  double max_eig;
};

/// Extreme eigenvalues of a Hermitian operator given by matrix-free apply.
/// Lanczos with full reorthogonalization; exact (up to round-off) when
/// max_steps >= dim. Estimates are inner bounds of the true range.
EigRange lanczos_extremes(const ApplyFn& apply, int dim, int max_steps = 200);

/// Largest singular value of a general operator, via Lanczos on A*A.
double largest_singular_value(const ApplyFn& apply, const ApplyFn& apply_adjoint,
                              int dim, int max_steps = 200);

}  // namespace tfg::linalg

#endif
