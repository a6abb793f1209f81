#include "tfgabor/twisted.hpp"

#include <cmath>

#include "tfgabor/linalg.hpp"
#include "tfgabor/tfcore.hpp"

namespace tfg::twisted {

namespace {

constexpr double kZeroDrop = 0.0;  // exact zeros are never stored

void check_compatible(const TwistedSequence& a, const TwistedSequence& b) {
  if (a.d() != b.d()) throw std::invalid_argument("twisted: dimension mismatch");
  if (a.gamma() != b.gamma()) throw std::invalid_argument("twisted: gamma mismatch");
}

long dot(const Index& idx, int lo_a, const Index& other, int lo_b, int d) {
  long s = 0;
  for (int i = 0; i < d; ++i) s += long(idx[lo_a + i]) * other[lo_b + i];
  return s;
}

Index neg(const Index& idx) {
  Index out(idx.size());
  for (size_t i = 0; i < idx.size(); ++i) out[i] = -idx[i];
  return out;
}

Index sum(const Index& a, const Index& b) {
  Index out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Index diff(const Index& a, const Index& b) {
  Index out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace

Complex TwistedSequence::at(const Index& idx) const {
  auto it = entries_.find(idx);
  return it == entries_.end() ? Complex(0.0) : it->second;
}

void TwistedSequence::set(const Index& idx, Complex value) {
  if (int(idx.size()) != 2 * d_)
    throw std::invalid_argument("TwistedSequence: index size != 2d");
  if (std::abs(value) <= kZeroDrop)
    entries_.erase(idx);
  else
    entries_[idx] = value;
}

void TwistedSequence::add(const Index& idx, Complex value) {
  set(idx, at(idx) + value);
}

double TwistedSequence::l1_norm() const {
  double s = 0.0;
  for (const auto& [idx, v] : entries_) s += std::abs(v);
  return s;
}

double TwistedSequence::weighted_l1_norm(
    const std::function<double(const Index&)>& weight) const {
  double s = 0.0;
  for (const auto& [idx, v] : entries_) s += std::abs(v) * weight(idx);
  return s;
}

int TwistedSequence::support_radius() const {
  int r = 0;
  for (const auto& [idx, v] : entries_)
    for (int c : idx) r = std::max(r, std::abs(c));
  return r;
}

bool TwistedSequence::is_hermitian(double tol) const {
  const TwistedSequence star = twisted_involution(*this);
  return (*this - star).l1_norm() <= tol * std::max(1.0, l1_norm());
}

void TwistedSequence::prune(double threshold) {
  for (auto it = entries_.begin(); it != entries_.end();) {
    if (std::abs(it->second) <= threshold)
      it = entries_.erase(it);
    else
      ++it;
  }
}

TwistedSequence TwistedSequence::unit(int d, double gamma) {
  TwistedSequence e(d, gamma);
  e.set(Index(2 * d, 0), 1.0);
  return e;
}

TwistedSequence TwistedSequence::delta(int d, double gamma, Index idx, Complex value) {
  TwistedSequence a(d, gamma);
  a.set(std::move(idx), value);
  return a;
}

TwistedSequence operator+(const TwistedSequence& a, const TwistedSequence& b) {
  check_compatible(a, b);
  TwistedSequence out = a;
  for (const auto& [idx, v] : b.entries()) out.add(idx, v);
  return out;
}

TwistedSequence operator-(const TwistedSequence& a, const TwistedSequence& b) {
  check_compatible(a, b);
  TwistedSequence out = a;
  for (const auto& [idx, v] : b.entries()) out.add(idx, -v);
  return out;
}

TwistedSequence operator*(Complex s, const TwistedSequence& a) {
  TwistedSequence out(a.d(), a.gamma());
  for (const auto& [idx, v] : a.entries()) out.set(idx, s * v);
  return out;
}

TwistedSequence twisted_conv(const TwistedSequence& a, const TwistedSequence& b) {
  check_compatible(a, b);
  const int d = a.d();
  TwistedSequence out(d, a.gamma());
  for (const auto& [ia, va] : a.entries()) {
    for (const auto& [ib, vb] : b.entries()) {
      // phase e^{-2 pi i gamma (j_b . k_a)}: j-part of b against k-part of a
      const long cross = dot(ib, 0, ia, d, d);
      out.add(sum(ia, ib), va * vb * unit_phase(-a.gamma() * double(cross)));
    }
  }
  return out;
}

TwistedSequence twisted_involution(const TwistedSequence& a) {
  const int d = a.d();
  TwistedSequence out(d, a.gamma());
  for (const auto& [idx, v] : a.entries()) {
    const Index target = neg(idx);
    const long jk = dot(target, 0, target, d, d);
    out.set(target, std::conj(v) * unit_phase(-a.gamma() * double(jk)));
  }
  return out;
}

TwistedSequence twisted_power(const TwistedSequence& a, int n) {
  if (n < 0) throw std::invalid_argument("twisted_power: negative exponent");
  TwistedSequence result = TwistedSequence::unit(a.d(), a.gamma());
  TwistedSequence base = a;
  while (n > 0) {
    if (n & 1) result = twisted_conv(result, base);
    n >>= 1;
    if (n > 0) base = twisted_conv(base, base);
  }
  return result;
}

std::vector<Index> box_indices(int d, int radius) {
  const int width = 2 * radius + 1;
  const int dims = 2 * d;
  long total = 1;
  for (int i = 0; i < dims; ++i) total *= width;
  std::vector<Index> box;
  box.reserve(total);
  Index cur(dims, -radius);
  for (long n = 0; n < total; ++n) {
    box.push_back(cur);
    for (int i = dims - 1; i >= 0; --i) {
      if (++cur[i] <= radius) break;
      cur[i] = -radius;
    }
  }
  return box;
}

TruncatedOperator truncate(const TwistedSequence& a, int radius) {
  if (radius <= 0) throw std::invalid_argument("truncate: radius <= 0");
  TruncatedOperator op;
  op.radius = radius;
  op.box = box_indices(a.d(), radius);
  const long n = long(op.box.size());
  std::map<Index, long> position;
  for (long i = 0; i < n; ++i) position[op.box[i]] = i;
  op.matrix = CMat::Zero(n, n);
  const int d = a.d();
  for (long col = 0; col < n; ++col) {
    const Index& cm = op.box[col];
    for (const auto& [idx, v] : a.entries()) {
      const Index row = sum(cm, idx);
      auto it = position.find(row);
      if (it == position.end()) continue;
      // phase e^{-2 pi i gamma l.(k-m)} with column (l,m), row (j,k)
      const long cross = dot(cm, 0, idx, d, d);
      op.matrix(it->second, col) = v * unit_phase(-a.gamma() * double(cross));
    }
  }
  return op;
}

CVec apply_truncated(const TwistedSequence& a, const std::vector<Index>& box,
                     const CVec& x) {
  std::map<Index, long> position;
  for (long i = 0; i < long(box.size()); ++i) position[box[i]] = i;
  const int d = a.d();
  CVec out = CVec::Zero(x.size());
  for (long col = 0; col < long(box.size()); ++col) {
    if (x[col] == Complex(0.0)) continue;
    const Index& cm = box[col];
    for (const auto& [idx, v] : a.entries()) {
      const Index row = sum(cm, idx);
      auto it = position.find(row);
      if (it == position.end()) continue;
      const long cross = dot(cm, 0, idx, d, d);
      out[it->second] += v * unit_phase(-a.gamma() * double(cross)) * x[col];
    }
  }
  return out;
}

namespace {

// Extreme eigenvalues of the truncated L_a for Hermitian a; matrix-free.
linalg::EigRange truncated_extremes(const TwistedSequence& a, int radius) {
  const std::vector<Index> box = box_indices(a.d(), radius);
  const long n = long(box.size());
  std::map<Index, long> position;
  for (long i = 0; i < n; ++i) position[box[i]] = i;
  const int d = a.d();
  auto apply = [&](const CVec& x) {
    CVec out = CVec::Zero(n);
    for (long col = 0; col < n; ++col) {
      if (x[col] == Complex(0.0)) continue;
      for (const auto& [idx, v] : a.entries()) {
        Index row = box[col];
        for (size_t i = 0; i < row.size(); ++i) row[i] += idx[i];
        auto it = position.find(row);
        if (it == position.end()) continue;
        const long cross = dot(box[col], 0, idx, d, d);
        out[it->second] += v * unit_phase(-a.gamma() * double(cross)) * x[col];
      }
    }
    return out;
  };
  if (n <= 512) {
    Eigen::SelfAdjointEigenSolver<CMat> es(truncate(a, radius).matrix);
    return {es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
  }
  return linalg::lanczos_extremes(apply, int(n), 250);
}

}  // namespace

double spectral_radius_l2(const TwistedSequence& a, int radius) {
  if (a.entries().empty()) return 0.0;
  if (a.is_hermitian()) {
    const auto range = truncated_extremes(a, radius);
    return std::max(std::abs(range.min_eig), std::abs(range.max_eig));
  }
  const TwistedSequence b = twisted_conv(twisted_involution(a), a);
  const auto range = truncated_extremes(b, radius);
  return std::sqrt(std::max(0.0, range.max_eig));
}

double spectral_radius_l1(const TwistedSequence& a, int n) {
  if (n < 1) throw std::invalid_argument("spectral_radius_l1: n < 1");
  TwistedSequence p = twisted_power(a, n);
  return std::pow(p.l1_norm(), 1.0 / double(n));
}

WienerResult wiener_invert(const TwistedSequence& a, double tol, int max_terms) {
  if (tol <= 0.0) throw std::invalid_argument("wiener_invert: tol <= 0");
  const TwistedSequence astar = twisted_involution(a);
  const TwistedSequence b = twisted_conv(astar, a);  // Hermitian, nonnegative
  const TwistedSequence e = TwistedSequence::unit(a.d(), a.gamma());

  // Truncation radius: 4x support, doubled until the extremes settle.
  int radius = std::max(2, 4 * std::max(1, b.support_radius()));
  linalg::EigRange range = truncated_extremes(b, radius);
  for (int round = 0; round < 3; ++round) {
    const int next = radius * 2;
    if (std::pow(2.0 * next + 1.0, 2 * a.d()) > 2e4) break;
    const linalg::EigRange wider = truncated_extremes(b, next);
    const double move = std::max(std::abs(wider.min_eig - range.min_eig),
                                 std::abs(wider.max_eig - range.max_eig));
    radius = next;
    const bool settled = move <= 0.01 * std::max(1e-30, std::abs(wider.max_eig));
    range = wider;
    if (settled) break;
  }
  const double m = std::max(0.0, range.min_eig);
  const double M = std::max(0.0, range.max_eig);
  if (std::sqrt(m) <= tol)
    throw std::domain_error(
        "wiener_invert: singular at this truncation (smallest singular value below tol)");

  const double scale = 2.0 / (m + M);
  const TwistedSequence q = e - Complex(scale) * b;  // l^2 norm < 1 on frames
  const double prune_tol = tol * 1e-3;

  TwistedSequence term = e;
  TwistedSequence series = e;
  int terms = 1;
  bool converged = false;
  for (; terms <= max_terms; ++terms) {
    term = twisted_conv(term, q);
    term.prune(prune_tol / std::max<size_t>(1, term.entries().size()));
    series = series + term;
    if (term.l1_norm() <= tol) {
      converged = true;
      break;
    }
  }
  TwistedSequence binv = Complex(scale) * series;
  TwistedSequence inverse = twisted_conv(binv, astar);
  inverse.prune(prune_tol);

  WienerResult res{inverse, 0.0, 0.0, terms, converged, m, M};
  res.residual_left = (twisted_conv(inverse, a) - e).l1_norm();
  res.residual_right = (twisted_conv(a, inverse) - e).l1_norm();
  return res;
}

CMat rep_pi(const TwistedSequence& a, int L, int a_step, int b_step) {
  if (a.d() != 1) throw std::invalid_argument("rep_pi: requires d == 1");
  if (a_step <= 0 || b_step <= 0 || L % a_step != 0 || L % b_step != 0)
    throw std::invalid_argument("rep_pi: lattice steps must divide L");
  const double gamma_lattice = double(L) / (double(a_step) * b_step);
  double frac = a.gamma() - gamma_lattice;
  frac -= std::round(frac);
  if (std::abs(frac) > 1e-9)
    throw std::invalid_argument("rep_pi: gamma != L/(a_step*b_step) mod 1");
  CMat op = CMat::Zero(L, L);
  for (const auto& [idx, v] : a.entries())
    op += v * tfcore::mod_trans_matrix(L, long(idx[0]) * (L / a_step),
                                       long(idx[1]) * (L / b_step));
  return op;
}

}  // namespace tfg::twisted
