#include "tfgabor/density.hpp"

#include <cmath>

#include "tfgabor/tfcore.hpp"

namespace tfg::density {

PointSet lattice_point_set(const Eigen::Vector2d& u, const Eigen::Vector2d& v,
                           double extent) {
  if (lattice_covolume(u, v) < 1e-12)
    throw std::invalid_argument("lattice_point_set: degenerate generators");
  PointSet out;
  out.declared_extent = extent;
  // Conservative coefficient range from the shortest dual direction.
  const double reach = extent / std::min(u.norm(), v.norm()) + 2.0;
  const long n = long(std::ceil(reach)) * 2;
  for (long i = -n; i <= n; ++i)
    for (long j = -n; j <= n; ++j) {
      const Eigen::Vector2d p = double(i) * u + double(j) * v;
      if (p.norm() <= extent) out.points.push_back(p);
    }
  return out;
}

DensityReport lower_density(const PointSet& lam, std::vector<double> radii,
                            const CentersSpec& centers) {
  if (radii.empty()) throw std::invalid_argument("lower_density: no radii");
  std::sort(radii.begin(), radii.end());
  const double center_extent = std::hypot(centers.half_width, centers.half_width);
  if (radii.back() + center_extent > lam.declared_extent + 1e-12)
    throw std::invalid_argument(
        "lower_density: max radius + center extent exceeds declared extent");

  std::vector<Eigen::Vector2d> grid;
  const int per_side = std::max(1, centers.per_side);
  for (int i = 0; i < per_side; ++i)
    for (int j = 0; j < per_side; ++j) {
      const double fx = per_side == 1 ? 0.0 : -1.0 + 2.0 * i / (per_side - 1.0);
      const double fy = per_side == 1 ? 0.0 : -1.0 + 2.0 * j / (per_side - 1.0);
      grid.emplace_back(fx * centers.half_width, fy * centers.half_width);
    }

  DensityReport rep;
  rep.radii = radii;
  for (double r : radii) {
    long best = -1;
    const double r2 = r * r;
    for (const auto& c : grid) {
      long count = 0;
      for (const auto& p : lam.points)
        if ((p - c).squaredNorm() <= r2) ++count;
      if (best < 0 || count < best) best = count;
    }
    rep.nu_minus.push_back(best);
    rep.estimates.push_back(double(best) / (M_PI * r2));
  }
  rep.lower_density = rep.estimates.back();
  return rep;
}

double lattice_covolume(const Eigen::Vector2d& u, const Eigen::Vector2d& v) {
  const double det = std::abs(u.x() * v.y() - u.y() * v.x());
  if (det < 1e-12) throw std::invalid_argument("lattice_covolume: degenerate generators");
  return det;
}

bool frame_possible(const Eigen::Vector2d& u, const Eigen::Vector2d& v) {
  return lattice_covolume(u, v) <= 1.0;
}

namespace {

CVec grid_atom(const CVec& window, int L, double omega, double x, double scale) {
  return tfcore::tf_shift(window, std::lround(omega * scale), std::lround(x * scale));
}

}  // namespace

double hap_residual(const PointSet& lam, const CVec& phi, const CVec& f,
                    const Eigen::Vector2d& center, double R, double scale) {
  const int L = int(phi.size());
  if (f.size() != L) throw std::invalid_argument("hap_residual: length mismatch");
  std::vector<CVec> atoms;
  for (const auto& p : lam.points)
    if ((p - center).norm() <= R)
      atoms.push_back(grid_atom(phi, L, p.x(), p.y(), scale));
  const CVec target = grid_atom(f, L, center.x(), center.y(), scale);
  if (atoms.empty()) return target.norm();

  CMat A(L, atoms.size());
  for (size_t i = 0; i < atoms.size(); ++i) A.col(i) = atoms[i];
  // Ridge-regularized normal equations; clustered atoms give rank-deficient Grams.
  CMat gram = A.adjoint() * A;
  gram += 1e-12 * CMat::Identity(gram.rows(), gram.cols());
  const CVec coef = Eigen::LDLT<CMat>(gram).solve(A.adjoint() * target);
  return (A * coef - target).norm();
}

RsTraceReport rs_trace_bounds(const PointSet& lam, const CVec& phi, double r,
                              double R, const Eigen::Vector2d& center, int L) {
  const int s = int(std::lround(std::sqrt(double(L))));
  if (s * s != L) throw std::invalid_argument("rs_trace_bounds: L must be a square");
  if (phi.size() != L) throw std::invalid_argument("rs_trace_bounds: length mismatch");
  if (2 * long(std::ceil(r)) + 1 > s)
    throw std::invalid_argument(
        "rs_trace_bounds: grid ball exceeds the unaliased extent of C^L");

  // Reference cell window: normalized indicator of one s-sample cell.
  CVec chi = CVec::Zero(L);
  for (int t = 0; t < s; ++t) chi[t] = 1.0 / std::sqrt(double(s));

  const long cj = std::lround(center.x());
  const long ck = std::lround(center.y());
  std::vector<CVec> grid_atoms;
  const long span = long(std::ceil(r)) + 1;
  for (long j = cj - span; j <= cj + span; ++j)
    for (long k = ck - span; k <= ck + span; ++k) {
      const double dx = double(j) - center.x(), dy = double(k) - center.y();
      if (dx * dx + dy * dy <= r * r)
        grid_atoms.push_back(tfcore::tf_shift(chi, j * s, k * s));
    }

  std::vector<CVec> lam_atoms;
  for (const auto& p : lam.points)
    if ((p - center).norm() <= r + R)
      lam_atoms.push_back(grid_atom(phi, L, p.x(), p.y(), double(s)));

  RsTraceReport rep;
  rep.card_grid = long(grid_atoms.size());
  rep.card_lam = long(lam_atoms.size());
  if (rep.card_grid == 0) return rep;
  if (rep.card_lam == 0) {
    rep.epsilon_witness = 1.0;
    return rep;
  }

  CMat E(L, grid_atoms.size());
  for (size_t i = 0; i < grid_atoms.size(); ++i) E.col(i) = grid_atoms[i];
  CMat W(L, lam_atoms.size());
  for (size_t i = 0; i < lam_atoms.size(); ++i) W.col(i) = lam_atoms[i];

  // Orthonormal basis of span(W) by SVD rank truncation.
  Eigen::JacobiSVD<CMat> svd(W, Eigen::ComputeThinU);
  const double smax = svd.singularValues()(0);
  long rank = 0;
  while (rank < svd.singularValues().size() &&
         svd.singularValues()(rank) > 1e-10 * smax)
    ++rank;
  const CMat Q = svd.matrixU().leftCols(rank);

  const CMat C = Q.adjoint() * E;           // rank x grid
  const CMat T = C.adjoint() * C;           // T = E^H P_W E in the grid basis
  Eigen::SelfAdjointEigenSolver<CMat> es(T);
  rep.trace_T = std::real(T.trace());
  rep.eig_min = es.eigenvalues().minCoeff();
  rep.eig_max = es.eigenvalues().maxCoeff();
  rep.epsilon_witness = 1.0 - rep.trace_T / double(rep.card_grid);

  if (rep.eig_min < -1e-10 || rep.eig_max > 1.0 + 1e-10)
    throw std::logic_error("rs_trace_bounds: eigenvalues escaped [0, 1]");
  if (rep.trace_T > double(rep.card_lam) + 1e-8)
    throw std::logic_error("rs_trace_bounds: trace exceeded the atom count");
  return rep;
}

}  // namespace tfg::density
