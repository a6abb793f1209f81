#ifndef TFGABOR_DENSITY_HPP
#define TFGABOR_DENSITY_HPP

#include <vector>

#include "tfgabor/types.hpp"

namespace tfg::density {

/// Discrete subset of the time-frequency plane; points are (omega, x) pairs
/// in abstract time-frequency units. The set is fully specified inside the
/// ball of radius declared_extent about the origin.
struct PointSet {
  std::vector<Eigen::Vector2d> points;
  double declared_extent = 0.0;
};

struct CentersSpec {
  double half_width = 0.0;  // centers fill [-half_width, half_width]^2
  int per_side = 21;
};

struct DensityReport {
  std::vector<double> radii;
  std::vector<long> nu_minus;      // min ball count over the center grid
  std::vector<double> estimates;   // nu_minus / (pi r^2)
  double lower_density = 0.0;      // estimate at the largest radius
};

/// Points of the lattice {i*u + j*v} within Euclidean distance extent of 0.
PointSet lattice_point_set(const Eigen::Vector2d& u, const Eigen::Vector2d& v,
                           double extent);

/// Beurling lower-density probe: nu^-(r) = min over centers of
/// card(points in B_r(center)), estimate nu^-(r)/(pi r^2).
DensityReport lower_density(const PointSet& lam, std::vector<double> radii,
                            const CentersSpec& centers);

/// |det [u v]| of a rank-2 lattice.
double lattice_covolume(const Eigen::Vector2d& u, const Eigen::Vector2d& v);

/// Covolume <= 1 is the necessary condition for a spanning Gabor system.
bool frame_possible(const Eigen::Vector2d& u, const Eigen::Vector2d& v);

/// Least-squares residual of projecting M_eta T_a f onto the span of the
/// atoms M_omega T_x phi with (omega, x) within distance R of center.
/// Points map onto C^L as (round(omega*scale) bins, round(x*scale) samples).
/// Empty atom set returns ||f||_2.
double hap_residual(const PointSet& lam, const CVec& phi, const CVec& f,
                    const Eigen::Vector2d& center, double R, double scale);

struct RsTraceReport {
  double trace_T = 0.0;
  long card_lam = 0;    // points of lam in B_{r+R}(center)
  long card_grid = 0;   // integer grid points in B_r(center)
  double epsilon_witness = 0.0;  // 1 - trace_T / card_grid
  double eig_min = 0.0;
  double eig_max = 0.0;
};

/// Projection-trace comparison: T = restriction to V_r of P_{V_r} P_{W_{r+R}},
/// where V_r is spanned by the unit-cell reference atoms M_{sj} T_{sk} chi on
/// the integer grid inside B_r(center) and W_{r+R} by the lam atoms inside
/// B_{r+R}(center). Requires L = s^2 and the grid ball to fit inside one
/// period (2*ceil(r)+1 <= s).
RsTraceReport rs_trace_bounds(const PointSet& lam, const CVec& phi, double r,
                              double R, const Eigen::Vector2d& center, int L);

}  // namespace tfg::density

#endif
