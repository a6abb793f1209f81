#include "tfgabor/heisenberg.hpp"

#include <cmath>

#include "tfgabor/tfcore.hpp"

namespace tfg::heisenberg {

namespace {

long dot(const std::vector<int>& a, const std::vector<int>& b) {
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += long(a[i]) * b[i];
  return s;
}

void check_dims(const HeisenbergElement& x, const HeisenbergElement& y) {
  if (x.j.size() != x.k.size() || y.j.size() != y.k.size() || x.d() != y.d())
    throw std::invalid_argument("heisenberg: dimension mismatch");
}

std::vector<int> vsum(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

std::vector<int> vneg(const std::vector<int>& a) {
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

void check_unit_modulus(const Complex& zeta) {
  if (std::abs(std::abs(zeta) - 1.0) > 1e-12)
    throw std::invalid_argument("hgamma: |zeta| != 1");
}

}  // namespace

HeisenbergElement h_identity(int d) {
  return {std::vector<int>(d, 0), std::vector<int>(d, 0), 0};
}

HeisenbergElement h_mul(const HeisenbergElement& x, const HeisenbergElement& y) {
  check_dims(x, y);
  return {vsum(x.j, y.j), vsum(x.k, y.k), x.l + y.l + dot(x.k, y.j)};
}

HeisenbergElement h_inverse(const HeisenbergElement& x) {
  return {vneg(x.j), vneg(x.k), -x.l + dot(x.k, x.j)};
}

bool h_is_central(const HeisenbergElement& x) {
  for (int c : x.j)
    if (c != 0) return false;
  for (int c : x.k)
    if (c != 0) return false;
  return true;
}

CMat pi_rep(const HeisenbergElement& x, int L, int a_step, int b_step) {
  if (x.d() != 1) throw std::invalid_argument("pi_rep: requires d == 1");
  if (a_step <= 0 || b_step <= 0 || L % a_step != 0 || L % b_step != 0)
    throw std::invalid_argument("pi_rep: lattice steps must divide L");
  const double density = double(a_step) * b_step / L;  // ab/L, the finite alpha*beta
  const Complex central = unit_phase(-density * double(x.l));
  return central * tfcore::mod_trans_matrix(L, long(x.j[0]) * b_step,
                                            long(x.k[0]) * a_step);
}

HGammaElement hgamma_mul(const HGammaElement& x, const HGammaElement& y, double gamma) {
  if (x.j.size() != y.j.size() || x.k.size() != y.k.size())
    throw std::invalid_argument("hgamma_mul: dimension mismatch");
  check_unit_modulus(x.zeta);
  check_unit_modulus(y.zeta);
  const long cross = dot(x.k, y.j);
  return {vsum(x.j, y.j), vsum(x.k, y.k),
          x.zeta * y.zeta * unit_phase(-gamma * double(cross))};
}

HGammaElement hgamma_inverse(const HGammaElement& x, double gamma) {
  check_unit_modulus(x.zeta);
  const long kj = dot(x.k, x.j);
  return {vneg(x.j), vneg(x.k),
          (Complex(1.0) / x.zeta) * unit_phase(-gamma * double(kj))};
}

HGammaElement hgamma_embed(const HeisenbergElement& x, double gamma) {
  return {x.j, x.k, unit_phase(-gamma * double(x.l))};
}

Complex GroupGridFunction::at(const twisted::Index& idx, int q) const {
  auto it = values.find(idx);
  if (it == values.end()) return 0.0;
  return it->second[size_t(imod(q, grid))];
}

GroupGridFunction j_embed(const TwistedSequence& a, int grid) {
  if (grid < 1) throw std::invalid_argument("j_embed: grid < 1");
  GroupGridFunction out;
  out.d = a.d();
  out.grid = grid;
  for (const auto& [idx, v] : a.entries()) {
    std::vector<Complex> samples(grid);
    for (int q = 0; q < grid; ++q)
      samples[q] = v / unit_phase(double(q) / double(grid));  // zeta^{-1} a_{jk}
    out.values[idx] = std::move(samples);
  }
  return out;
}

GroupGridFunction group_convolve(const GroupGridFunction& f, const GroupGridFunction& g,
                                 double gamma) {
  if (f.d != g.d || f.grid != g.grid)
    throw std::invalid_argument("group_convolve: incompatible grids");
  const int d = f.d;
  const int Q = f.grid;
  GroupGridFunction out;
  out.d = d;
  out.grid = Q;
  // (F*G)(x) = (1/Q) sum_{y} F(y) G(y^{-1} x); y = (l, m, zeta_q).
  for (const auto& [iy, fy] : f.values) {
    for (const auto& [ig, gv] : g.values) {
      twisted::Index ix(iy.size());
      for (size_t i = 0; i < ix.size(); ++i) ix[i] = iy[i] + ig[i];
      // central part of y^{-1} x: zeta_y^{-1} zeta_x e^{2 pi i gamma m.(j-l)}
      long cross = 0;
      for (int i = 0; i < d; ++i) cross += long(iy[d + i]) * ig[i];
      const double turns = gamma * double(cross);
      // grid offset of the extra phase; exact when gamma*cross*Q is integral
      const double qshift = turns * Q;
      const long qoff = std::lround(qshift);
      auto& acc = out.values[ix];
      if (acc.empty()) acc.assign(Q, Complex(0.0));
      for (int qx = 0; qx < Q; ++qx) {
        Complex s = 0.0;
        // G evaluated at the central value zeta_{qx - qy + qoff}
        for (int qy = 0; qy < Q; ++qy)
          s += fy[qy] * gv[size_t(imod(qx - qy + qoff, Q))];
        acc[qx] += s / double(Q);
      }
    }
  }
  return out;
}

double grid_distance(const GroupGridFunction& f, const GroupGridFunction& g) {
  if (f.d != g.d || f.grid != g.grid)
    throw std::invalid_argument("grid_distance: incompatible grids");
  double m = 0.0;
  auto scan = [&](const GroupGridFunction& x, const GroupGridFunction& y) {
    for (const auto& [idx, vals] : x.values)
      for (int q = 0; q < x.grid; ++q)
        m = std::max(m, std::abs(vals[q] - y.at(idx, q)));
  };
  scan(f, g);
  scan(g, f);
  return m;
}

CVec sigma_rep_apply(double gamma, double delta, const HeisenbergElement& x,
                     const CVec& c) {
  if (x.d() != 1) throw std::invalid_argument("sigma_rep: requires d == 1");
  const long N = c.size();
  if (N < 1) throw std::invalid_argument("sigma_rep: empty sequence");
  const long j = x.j[0], k = x.k[0];
  CVec out(N);
  for (long n = 0; n < N; ++n)
    out[n] = unit_phase(delta * double(j) - gamma * double(x.l) +
                        double(n) * gamma * double(j)) *
             c[imod(n - k, N)];
  return out;
}

CMat sigma_rep_matrix(double gamma, double delta, const HeisenbergElement& x, int N) {
  CMat op = CMat::Zero(N, N);
  CVec basis = CVec::Zero(N);
  for (int i = 0; i < N; ++i) {
    basis[i] = 1.0;
    op.col(i) = sigma_rep_apply(gamma, delta, x, basis);
    basis[i] = 0.0;
  }
  return op;
}

}  // namespace tfg::heisenberg
