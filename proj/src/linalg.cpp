#include "tfgabor/linalg.hpp"

#include <random>
#include <vector>

namespace tfg::linalg {

CVec conjugate_gradient(const ApplyFn& apply, const CVec& rhs, double rel_tol,
                        int max_iter, bool* converged) {
  const double rhs_norm = rhs.norm();
  CVec x = CVec::Zero(rhs.size());
  if (converged) *converged = true;
  if (rhs_norm == 0.0) return x;

  CVec r = rhs;
  CVec p = r;
  double rs = r.squaredNorm();
  for (int it = 0; it < max_iter; ++it) {
    if (std::sqrt(rs) <= rel_tol * rhs_norm) return x;
    CVec ap = apply(p);
    const double denom = std::real(p.dot(ap));
    if (denom <= 0.0) break;  // lost positive definiteness
    const double alpha = rs / denom;
    x += alpha * p;
    r -= alpha * ap;
    const double rs_next = r.squaredNorm();
    p = r + (rs_next / rs) * p;
    rs = rs_next;
  }
  if (converged) *converged = std::sqrt(rs) <= rel_tol * rhs_norm;
  return x;
}

EigRange lanczos_extremes(const ApplyFn& apply, int dim, int max_steps) {
  if (dim <= 0) throw std::invalid_argument("lanczos_extremes: empty operator");
  const int steps = std::min(dim, max_steps);

  std::mt19937_64 rng(0x5eed1234u);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = Complex(gauss(rng), gauss(rng));
  v /= v.norm();

  std::vector<CVec> basis;
  basis.reserve(steps);
  Eigen::VectorXd alpha(steps), beta(steps);
  int k = 0;
  CVec w;
  for (; k < steps; ++k) {
    basis.push_back(v);
    w = apply(v);
    alpha[k] = std::real(v.dot(w));
    w -= alpha[k] * v;
    if (k > 0) w -= beta[k - 1] * basis[k - 1];
    for (const CVec& q : basis) w -= q.dot(w) * q;  // full reorthogonalization
    const double nw = w.norm();
    if (nw < 1e-13) {
      ++k;
      break;
    }
    beta[k] = nw;
    v = w / nw;
  }

  Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(k, k);
  for (int i = 0; i < k; ++i) {
    tri(i, i) = alpha[i];
    if (i + 1 < k) tri(i, i + 1) = tri(i + 1, i) = beta[i];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri);
  return {es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
}

double largest_singular_value(const ApplyFn& apply, const ApplyFn& apply_adjoint,
                              int dim, int max_steps) {
  auto normal_op = [&](const CVec& x) { return apply_adjoint(apply(x)); };
  const EigRange range = lanczos_extremes(normal_op, dim, max_steps);
  return std::sqrt(std::max(0.0, range.max_eig));
}

}  // namespace tfg::linalg
