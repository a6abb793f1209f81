#include "tfgabor/gabor.hpp"

#include "tfgabor/linalg.hpp"
#include "tfgabor/tfcore.hpp"

namespace tfg::gabor {

namespace {
constexpr double kFrameTolFactor = 1e-10;  // C1 <= factor*C2 counts as rank deficient
}

CVec GaborSystem::atom(int m, int n) const {
  return tfcore::tf_shift(window, long(m) * freq_step, long(n) * time_step);
}

GaborSystem build_system(CVec phi, int a, int b) {
  const int L = int(phi.size());
  if (L < 1) throw std::invalid_argument("build_system: empty window");
  require_finite(phi, "build_system");
  if (a <= 0 || b <= 0 || L % a != 0 || L % b != 0)
    throw std::invalid_argument("build_system: lattice steps must divide L");
  if (phi.norm() == 0.0) throw std::invalid_argument("build_system: zero window");
  return GaborSystem{std::move(phi), L, a, b};
}

CMat analysis(const GaborSystem& sys, const CVec& f) {
  if (f.size() != sys.L) throw std::invalid_argument("analysis: length mismatch");
  CMat coef(sys.num_freq(), sys.num_time());
  for (int n = 0; n < sys.num_time(); ++n) {
    for (int m = 0; m < sys.num_freq(); ++m) coef(m, n) = sys.atom(m, n).dot(f);
  }
  return coef;
}

CVec synthesis(const GaborSystem& sys, const CMat& coef) {
  if (coef.rows() != sys.num_freq() || coef.cols() != sys.num_time())
    throw std::invalid_argument("synthesis: grid dimension mismatch");
  CVec out = CVec::Zero(sys.L);
  for (int n = 0; n < sys.num_time(); ++n)
    for (int m = 0; m < sys.num_freq(); ++m) out += coef(m, n) * sys.atom(m, n);
  return out;
}

CVec apply_frame_operator(const GaborSystem& sys, const CVec& f, const CVec* psi) {
  const CMat coef = analysis(sys, f);
  if (!psi) return synthesis(sys, coef);
  GaborSystem synth = build_system(*psi, sys.time_step, sys.freq_step);
  return synthesis(synth, coef);
}

CMat frame_matrix(const GaborSystem& sys, const CVec* psi) {
  CMat op = CMat::Zero(sys.L, sys.L);
  GaborSystem synth = psi ? build_system(*psi, sys.time_step, sys.freq_step) : sys;
  for (int n = 0; n < sys.num_time(); ++n)
    for (int m = 0; m < sys.num_freq(); ++m)
      op += synth.atom(m, n) * sys.atom(m, n).adjoint();
  return op;
}

FrameBounds frame_bounds(const GaborSystem& sys) {
  double lo, hi;
  if (sys.L <= 512) {
    Eigen::SelfAdjointEigenSolver<CMat> es(frame_matrix(sys));
    lo = es.eigenvalues().minCoeff();
    hi = es.eigenvalues().maxCoeff();
  } else {
    auto apply = [&](const CVec& f) { return apply_frame_operator(sys, f); };
    auto range = linalg::lanczos_extremes(apply, sys.L);
    lo = range.min_eig;
    hi = range.max_eig;
  }
  lo = std::max(lo, 0.0);
  hi = std::max(hi, 0.0);
  FrameBounds fb{lo, hi, lo > kFrameTolFactor * hi};
  if (!fb.is_frame) fb.lower = 0.0;
  return fb;
}

CVec dual_window(const GaborSystem& sys) {
  const FrameBounds fb = frame_bounds(sys);
  if (!fb.is_frame) throw std::domain_error("dual_window: not a frame: C1 = 0");
  auto apply = [&](const CVec& f) { return apply_frame_operator(sys, f); };
  bool ok = false;
  CVec dual = linalg::conjugate_gradient(apply, sys.window, 1e-13, 10 * sys.L, &ok);
  if (!ok) {
    Eigen::LLT<CMat> llt(frame_matrix(sys));
    dual = llt.solve(sys.window);
  }
  return dual;
}

JanssenRep janssen(const GaborSystem& sys, const CVec* psi) {
  const int a = sys.time_step, b = sys.freq_step, L = sys.L;
  const CVec& synth_window = psi ? *psi : sys.window;
  if (synth_window.size() != L) throw std::invalid_argument("janssen: length mismatch");
  JanssenRep rep;
  rep.mod_step = L / a;
  rep.trans_step = L / b;
  rep.coefficients.resize(a, b);
  const double prefactor = sys.redundancy();
  for (int j = 0; j < a; ++j)
    for (int k = 0; k < b; ++k) {
      const CVec shifted =
          tfcore::tf_shift(sys.window, long(j) * rep.mod_step, long(k) * rep.trans_step);
      rep.coefficients(j, k) = prefactor * shifted.dot(synth_window);
    }
  return rep;
}

CMat janssen_operator(const JanssenRep& rep, int L) {
  CMat op = CMat::Zero(L, L);
  for (int j = 0; j < rep.coefficients.rows(); ++j)
    for (int k = 0; k < rep.coefficients.cols(); ++k)
      op += rep.coefficients(j, k) *
            tfcore::mod_trans_matrix(L, long(j) * rep.mod_step, long(k) * rep.trans_step);
  return op;
}

Complex normalized_trace(const CMat& op) {
  if (op.rows() != op.cols()) throw std::invalid_argument("normalized_trace: non-square");
  return op.trace() / double(op.rows());
}

std::vector<TraceProbePoint> density_trace_probe(const CVec& psi, const GaborSystem& sys,
                                                 const std::vector<double>& eps_list) {
  if (psi.size() != sys.L)
    throw std::invalid_argument("density_trace_probe: length mismatch");
  if (std::abs(psi.norm() - 1.0) > 1e-8)
    throw std::invalid_argument("density_trace_probe: psi must be unit norm");
  // Frame operator of psi over the system's lattice.
  const GaborSystem probe = build_system(psi, sys.time_step, sys.freq_step);
  const CMat S = frame_matrix(probe);
  std::vector<TraceProbePoint> out;
  out.reserve(eps_list.size());
  for (double eps : eps_list) {
    if (eps <= 0.0) throw std::invalid_argument("density_trace_probe: eps <= 0");
    CMat shifted = S + eps * CMat::Identity(sys.L, sys.L);
    const CVec phi_eps = Eigen::LLT<CMat>(shifted).solve(psi);
    TraceProbePoint pt;
    pt.eps = eps;
    pt.value = phi_eps.dot(psi);  // <psi, phi_eps>
    pt.analysis_norm = analysis(probe, phi_eps).norm();
    pt.phi_eps_norm = phi_eps.norm();
    // <psi, phi_eps> = eps*||phi_eps||^2 + ||A_psi phi_eps||^2 <= ||A_psi phi_eps||
    const double val = std::real(pt.value);
    if (val < pt.analysis_norm * pt.analysis_norm - eps * 1e-6 - 1e-9 ||
        val > pt.analysis_norm + 1e-9)
      throw std::logic_error("density_trace_probe: resolvent identity violated");
    out.push_back(pt);
  }
  return out;
}

}  // namespace tfg::gabor
