#ifndef TFGABOR_TYPES_HPP
#define TFGABOR_TYPES_HPP

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace tfg {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// x mod m, result in [0, m)
inline long imod(long x, long m) {
  long r = x % m;
  return r < 0 ? r + m : r;
}

// e^{2*pi*i*turns}
inline Complex unit_phase(double turns) {
  return std::polar(1.0, kTwoPi * turns);
}

inline void require_finite(const CVec& v, const char* what) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag()))
      throw std::invalid_argument(std::string(what) + ": non-finite sample");
  }
}

}  // namespace tfg

#endif
