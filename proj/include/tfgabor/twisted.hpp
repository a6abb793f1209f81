#ifndef TFGABOR_TWISTED_HPP
#define TFGABOR_TWISTED_HPP

#include <functional>
#include <map>
#include <vector>

#include "tfgabor/types.hpp"

namespace tfg::twisted {

/// Index on Z^{2d}: first d components are the modulation part j,
/// last d the translation part k.
using Index = std::vector<int>;

/// Finitely supported element of the twisted convolution algebra
/// (l^1(Z^{2d}), twisted product, twisted involution) at parameter gamma.
class TwistedSequence {
 public:
  TwistedSequence(int d, double gamma) : d_(d), gamma_(gamma) {
    if (d < 1) throw std::invalid_argument("TwistedSequence: d < 1");
  }

  int d() const { return d_; }
  double gamma() const { return gamma_; }
  const std::map<Index, Complex>& entries() const { return entries_; }

  Complex at(const Index& idx) const;
  void set(const Index& idx, Complex value);
  void add(const Index& idx, Complex value);

  double l1_norm() const;
  double weighted_l1_norm(const std::function<double(const Index&)>& weight) const;
  int support_radius() const;  // max |component| over the support
  bool is_hermitian(double tol = 1e-12) const;

  /// Drops entries with |value| <= threshold.
  void prune(double threshold);

  static TwistedSequence unit(int d, double gamma);
  static TwistedSequence delta(int d, double gamma, Index idx, Complex value = 1.0);

 private:
  int d_;
  double gamma_;
  std::map<Index, Complex> entries_;
};

TwistedSequence operator+(const TwistedSequence& a, const TwistedSequence& b);
TwistedSequence operator-(const TwistedSequence& a, const TwistedSequence& b);
TwistedSequence operator*(Complex s, const TwistedSequence& a);

/// Twisted product: (a # b)_{jk} = sum a_{lm} b_{(j-l)(k-m)} e^{-2 pi i gamma (j-l).m}.
TwistedSequence twisted_conv(const TwistedSequence& a, const TwistedSequence& b);

/// Twisted involution: (a*)_{jk} = conj(a_{(-j)(-k)}) e^{-2 pi i gamma j.k}.
TwistedSequence twisted_involution(const TwistedSequence& a);

/// n-fold twisted power, by repeated squaring.
TwistedSequence twisted_power(const TwistedSequence& a, int n);

struct TruncatedOperator {
  int radius = 0;
  std::vector<Index> box;  // row/column index order
  CMat matrix;
};

/// Matrix of the left-multiplication operator L_a restricted to the box
/// [-R, R]^{2d}. Row (j,k), column (l,m): a_{(j-l)(k-m)} e^{-2 pi i gamma l.(k-m)}.
TruncatedOperator truncate(const TwistedSequence& a, int radius);

/// L_a applied to a boxed vector without forming the matrix.
CVec apply_truncated(const TwistedSequence& a, const std::vector<Index>& box,
                     const CVec& x);

std::vector<Index> box_indices(int d, int radius);

/// l^2 spectral radius estimate from the truncation at the given radius:
/// extreme eigenvalue magnitude for Hermitian a, largest singular value
/// otherwise. Approximation from below, stabilizing as radius grows.
double spectral_radius_l2(const TwistedSequence& a, int radius);

/// ||a^n||_1^{1/n}, an upper estimate of the l^1 spectral radius.
double spectral_radius_l1(const TwistedSequence& a, int n);

struct WienerResult {
  TwistedSequence inverse;
  double residual_left = 0.0;   // ||inv # a - e||_1
  double residual_right = 0.0;  // ||a # inv - e||_1
  int terms_used = 0;
  bool converged = false;
  double spectral_min = 0.0;  // extreme eigenvalue estimates of a* # a
  double spectral_max = 0.0;
};

/// Inversion in the l^1 twisted algebra through the Hermitian element
/// b = a* # a and the optimally scaled Neumann series
/// b^{-1} = (2/(m+M)) sum (e - (2/(m+M)) b)^n.
/// Throws std::domain_error when the truncated operator is singular at the
/// working radius. converged == false means the series did not reach tol
/// within max_terms (inconclusive, not a verdict of non-invertibility).
WienerResult wiener_invert(const TwistedSequence& a, double tol, int max_terms);

/// Representation pi(a) = sum a_{jk} M_{j L/a_step} T_{k L/b_step} on C^L.
/// Requires d == 1 and gamma == L/(a_step*b_step) mod 1.
CMat rep_pi(const TwistedSequence& a, int L, int a_step, int b_step);

}  // namespace tfg::twisted

#endif
