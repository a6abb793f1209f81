#include "tfgabor/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tfgabor/density.hpp"
#include "tfgabor/gabor.hpp"
#include "tfgabor/heisenberg.hpp"
#include "tfgabor/modspace.hpp"
#include "tfgabor/tfcore.hpp"
#include "tfgabor/twisted.hpp"
#include "tfgabor/windows.hpp"

namespace tfg::cli {

using json = nlohmann::ordered_json;

namespace {

void write_report(const json& report, const std::string& out_path) {
  const std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  const std::string tmp = out_path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp);
    f << text;
  }
  if (std::rename(tmp.c_str(), out_path.c_str()) != 0)
    throw std::runtime_error("cannot rename " + tmp + " to " + out_path);
}

void write_csv(const std::vector<std::string>& lines, const std::string& path) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp);
    for (const auto& l : lines) f << l << "\n";
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

json complex_json(const Complex& z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json signal_json(const CVec& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(complex_json(v[i]));
  return arr;
}

CVec resolve_signal(const std::string& spec, const std::string& file, int L,
                    std::mt19937_64& rng) {
  if (!file.empty()) {
    CVec w = windows::read_window_file(file);
    if (w.size() != L) throw CLI::ValidationError("signal file length != L");
    return w;
  }
  if (spec == "random") return windows::random_signal(L, rng);
  return windows::make_window(spec, L);
}

modspace::WeightSpec parse_weight(const std::string& text) {
  modspace::WeightSpec w;
  if (text == "const" || text == "constant") {
    w.kind = modspace::WeightKind::Constant;
    return w;
  }
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const double param = colon == std::string::npos ? -1.0 : std::stod(text.substr(colon + 1));
  if (head == "v1") {
    w.kind = modspace::WeightKind::PolynomialSum;
    w.a = param < 0 ? 1.0 : param;
  } else if (head == "v2") {
    w.kind = modspace::WeightKind::PolynomialFreq;
    w.a = param < 0 ? 1.0 : param;
  } else if (head == "v3") {
    w.kind = modspace::WeightKind::SubexpTime;
    w.b = param < 0 ? 0.5 : param;
  } else {
    throw CLI::ValidationError("unknown weight '" + text + "'");
  }
  return w;
}

density::PointSet resolve_point_set(const std::string& points_file,
                                    const std::string& lattice, double extent) {
  if (!points_file.empty()) {
    std::ifstream in(points_file);
    if (!in) throw CLI::ValidationError("cannot open points file " + points_file);
    density::PointSet ps;
    ps.declared_extent = extent;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      double w = 0.0, x = 0.0;
      char comma = 0;
      std::istringstream ss(line);
      if (!(ss >> w >> comma >> x) || comma != ',')
        throw CLI::ValidationError("bad point line: " + line);
      ps.points.emplace_back(w, x);
    }
    return ps;
  }
  if (!lattice.empty()) {
    // "u1,u2;v1,v2"
    double u1, u2, v1, v2;
    char c1, c2, c3;
    std::istringstream ss(lattice);
    if (!(ss >> u1 >> c1 >> u2 >> c2 >> v1 >> c3 >> v2) || c1 != ',' || c2 != ';' ||
        c3 != ',')
      throw CLI::ValidationError("bad lattice spec: " + lattice);
    return density::lattice_point_set({u1, u2}, {v1, v2}, extent);
  }
  throw CLI::ValidationError("need --points-file or --lattice");
}

Eigen::Vector2d parse_point(const std::string& text) {
  double w = 0.0, x = 0.0;
  char comma = 0;
  std::istringstream ss(text);
  if (!(ss >> w >> comma >> x) || comma != ',')
    throw CLI::ValidationError("bad point '" + text + "'");
  return {w, x};
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
  }
};

}  // namespace

twisted::TwistedSequence parse_sequence(const std::string& text, double gamma) {
  twisted::TwistedSequence seq(1, gamma);
  static const std::regex term_re(
      R"(([+-]?)\s*(?:(\d+(?:\.\d*)?(?:[eE][+-]?\d+)?)\s*\*?\s*)?(e\b|d\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)))");
  auto begin = std::sregex_iterator(text.begin(), text.end(), term_re);
  auto end = std::sregex_iterator();
  size_t consumed = 0;
  for (auto it = begin; it != end; ++it) {
    const std::smatch& m = *it;
    double coef = m[2].matched ? std::stod(m[2].str()) : 1.0;
    if (m[1].str() == "-") coef = -coef;
    twisted::Index idx(2, 0);
    if (m[3].str()[0] == 'd') {
      idx[0] = std::stoi(m[4].str());
      idx[1] = std::stoi(m[5].str());
    }
    seq.add(idx, coef);
    consumed += m.length(0);
  }
  // Everything outside matches must be whitespace.
  std::string residue = std::regex_replace(text, term_re, "");
  for (char c : residue)
    if (!std::isspace(static_cast<unsigned char>(c)))
      throw std::invalid_argument("cannot parse sequence '" + text + "'");
  if (seq.entries().empty())
    throw std::invalid_argument("empty sequence '" + text + "'");
  return seq;
}

namespace {

int cmd_stft(int L, const std::string& window, const std::string& signal,
             const std::string& signal_file, std::uint64_t seed,
             const std::string& csv, const std::string& out) {
  Timer timer;
  std::mt19937_64 rng(seed);
  const CVec phi = windows::make_window(window, L);
  const CVec f = resolve_signal(signal, signal_file, L, rng);
  const CMat grid = tfcore::stft(f, phi);
  const double parseval_lhs = grid.squaredNorm();
  const double parseval_rhs = double(L) * f.squaredNorm() * phi.squaredNorm();
  const CVec back = tfcore::istft(grid, phi);
  const double roundtrip = (back - f).cwiseAbs().maxCoeff();
  const bool pass = std::abs(parseval_lhs - parseval_rhs) <= 1e-10 * parseval_rhs &&
                    roundtrip <= 1e-12 * std::max(1.0, f.cwiseAbs().maxCoeff());

  if (!csv.empty()) {
    std::vector<std::string> lines{"m,n,magnitude"};
    for (int m = 0; m < L; ++m)
      for (int n = 0; n < L; ++n)
        lines.push_back(std::to_string(m) + "," + std::to_string(n) + "," +
                        std::to_string(std::abs(grid(m, n))));
    write_csv(lines, csv);
  }

  json report;
  report["subcommand"] = "stft";
  report["equation_tag"] = "eq1-stft";
  report["inputs"] = {{"l", L}, {"window", window}, {"signal", signal}, {"seed", seed}};
  report["outputs"] = {{"parseval_lhs", parseval_lhs},
                       {"parseval_rhs", parseval_rhs},
                       {"roundtrip_max_error", roundtrip}};
  report["tolerances"] = {{"parseval_rel", 1e-10}, {"roundtrip_abs", 1e-12}};
  report["pass"] = pass;
  report["wall_time_ms"] = timer.elapsed_ms();
  write_report(report, out);
  return pass ? kExitOk : kExitNumerical;
}

int cmd_frame_bounds(int L, int a, int b, const std::string& window,
                     const std::string& window_file, const std::string& out) {
  Timer timer;
  std::mt19937_64 rng(0);
  const CVec phi = resolve_signal(window, window_file, L, rng);
  const auto sys = gabor::build_system(phi, a, b);
  const auto fb = gabor::frame_bounds(sys);
  json report;
  report["subcommand"] = "frame-bounds";
  report["equation_tag"] = "eq22-frame-bounds";
  report["inputs"] = {{"l", L}, {"a", a}, {"b", b}, {"window", window}};
  report["outputs"] = {{"c1", fb.lower},
                       {"c2", fb.upper},
                       {"is_frame", fb.is_frame},
                       {"redundancy", sys.redundancy()}};
  report["tolerances"] = {{"rank_deficiency_rel", 1e-10}};
  report["pass"] = true;
  report["wall_time_ms"] = timer.elapsed_ms();
  write_report(report, out);
  return kExitOk;
}

int cmd_dual_window(int L, int a, int b, const std::string& window,
                    const std::string& window_file, std::uint64_t seed,
                    const std::string& out) {
  Timer timer;
  std::mt19937_64 rng(seed);
  const CVec phi = resolve_signal(window, window_file, L, rng);
  const auto sys = gabor::build_system(phi, a, b);
  const auto fb = gabor::frame_bounds(sys);
  json report;
  report["subcommand"] = "dual-window";
  report["equation_tag"] = "s1-dual-window";
  report["inputs"] = {{"l", L}, {"a", a}, {"b", b}, {"window", window}, {"seed", seed}};
  if (!fb.is_frame) {
    report["error"] = "not a frame: C1 = 0";
    report["outputs"] = {{"c1", fb.lower}, {"c2", fb.upper}, {"is_frame", false}};
    report["pass"] = false;
    report["wall_time_ms"] = timer.elapsed_ms();
    write_report(report, out);
    std::cerr << "not a frame: C1 = 0\n";
    return kExitNumerical;
  }
  const CVec dual = gabor::dual_window(sys);
  const auto dual_sys = gabor::build_system(dual, a, b);
  double max_residual = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const CVec f = windows::random_signal(L, rng);
    const CVec rec = gabor::synthesis(sys, gabor::analysis(dual_sys, f));
    max_residual = std::max(max_residual, (rec - f).norm() / f.norm());
  }
  const bool pass = max_residual <= 1e-10;
  report["outputs"] = {{"dual", signal_json(dual)},
                       {"reconstruction_residual", max_residual},
                       {"c1", fb.lower},
                       {"c2", fb.upper}};
  report["tolerances"] = {{"reconstruction_rel", 1e-10}};
  report["pass"] = pass;
  report["wall_time_ms"] = timer.elapsed_ms();
  write_report(report, out);
  return pass ? kExitOk : kExitNumerical;
}

int cmd_janssen(int L, int a, int b, const std::string& window, const std::string& psi,
                const std::string& out) {
  Timer timer;
  std::mt19937_64 rng(0);
  const CVec phi = windows::make_window(window, L);
  const auto sys = gabor::build_system(phi, a, b);
  CVec psi_vec;
  const CVec* psi_ptr = nullptr;
  if (!psi.empty()) {
    psi_vec = windows::make_window(psi, L);
    psi_ptr = &psi_vec;
  }
  const auto rep = gabor::janssen(sys, psi_ptr);
  const CMat direct = gabor::frame_matrix(sys, psi_ptr);
  const CMat rebuilt = gabor::janssen_operator(rep, L);
  const double err = (direct - rebuilt).operatorNorm();
  const bool pass = err <= 1e-10;
  json coef = json::array();
  for (int j = 0; j < rep.coefficients.rows(); ++j)
    for (int k = 0; k < rep.coefficients.cols(); ++k)
      coef.push_back({{"j", j}, {"k", k},
                      {"re", rep.coefficients(j, k).real()},
                      {"im", rep.coefficients(j, k).imag()}});
  json report;
  report["subcommand"] = "janssen";
  report["equation_tag"] = "eq12-janssen";
  report["inputs"] = {{"l", L}, {"a", a}, {"b", b}, {"window", window}, {"psi", psi}};
  report["outputs"] = {{"coefficients", coef},
                       {"mod_step", rep.mod_step},
                       {"trans_step", rep.trans_step},
                       {"operator_error", err}};
  report["tolerances"] = {{"operator_norm", 1e-10}};
  report["pass"] = pass;
  report["wall_time_ms"] = timer.elapsed_ms();
  write_report(report, out);
  return pass ? kExitOk : kExitNumerical;
}

int cmd_trace_probe(int L, int a, int b, const std::string& window,
                    std::vector<double> eps_list, const std::string& out) {
  Timer timer;
  CVec psi = windows::make_window(window, L);
  psi /= psi.norm();
  const auto sys = gabor::build_system(psi, a, b);
  if (eps_list.empty()) eps_list = {1.0, 1e-2, 1e-4, 1e-6, 1e-8};
  const auto points = gabor::density_trace_probe(psi, sys, eps_list);
  const auto fb = gabor::frame_bounds(sys);
  const double target = sys.density();
  json values = json::array();
  for (const auto& p : points)
    values.push_back({{"eps", p.eps},
                      {"re", p.value.real()},
                      {"im", p.value.imag()},
                      {"analysis_norm", p.analysis_norm}});
  const double limit_error = std::abs(points.back().value - Complex(target));
  const bool pass = !fb.is_frame || limit_error <= 1e-6;
  json report;
  report["subcommand"] = "trace-probe";
  report["equation_tag"] = "eq19-trace-probe";
  report["inputs"] = {{"l", L}, {"a", a}, {"b", b}, {"window", window}};
  report["outputs"] = {{"values", values},
                       {"density", target},
                       {"is_frame", fb.is_frame},
                       {"limit_error", limit_error}};
  report["tolerances"] = {{"limit_abs", 1e-6}};
  report["pass"] = pass;
  report["wall_time_ms"] = timer.elapsed_ms();
  write_report(report, out);
  return pass ? kExitOk : kExitNumerical;
}

int cmd_twisted_invert(double gamma, const std::string& seq_text, double tol,
                       int max_terms, const std::string& out) {
  Timer timer;
  const auto a = parse_sequence(seq_text, gamma);
  json report;
  report["subcommand"] = "twisted-invert";
  report["equation_tag"] = "thm3-wiener";
  report["inputs"] = {{"gamma", gamma}, {"seq", seq_text}, {"tol", tol},
                      {"max_terms", max_terms}};
  try {
    const auto res = twisted::wiener_invert(a, tol, max_terms);
    const bool pass = res.converged && res.residual_left <= 10.0 * tol &&
                      res.residual_right <= 10.0 * tol;
    report["outputs"] = {{"residual_left", res.residual_left},
                         {"residual_right", res.residual_right},
                         {"terms_used", res.terms_used},
                         {"converged", res.converged},
                         {"inverse_l1_norm", res.inverse.l1_norm()},
                         {"spectral_min", res.spectral_min},
                         {"spectral_max", res.spectral_max}};
    report["tolerances"] = {{"residual_l1", 10.0 * tol}};
    report["pass"] = pass;
    report["wall_time_ms"] = timer.elapsed_ms();
    write_report(report, out);
    if (!res.converged) std::cerr << "inconclusive: series not converged\n";
    return pass ? kExitOk : kExitNumerical;
  } catch (const std::domain_error& e) {
    report["error"] = e.what();
    report["pass"] = false;
    report["wall_time_ms"] = timer.elapsed_ms();
    write_report(report, out);
    std::cerr << e.what() << "\n";
    return kExitNumerical;
  }
}

int cmd_spectral_radius(double gamma, const std::string& seq_text, int radius,
                        int power_n, const std::string& out) {
  Timer timer;
  const auto a = parse_sequence(seq_text, gamma);
  const double rho_l2 = twisted::spectral_radius_l2(a, radius);
  const double rho_l1 = twisted::spectral_radius_l1(a, power_n);
  json report;
  report["subcommand"] = "spectral-radius";
  report["equation_tag"] = "s4-spectral-radius";
  report["inputs"] = {{"gamma", gamma}, {"seq", seq_text}, {"radius", radius},
                      {"power_n", power_n}};
  report["outputs"] = {{"rho_l2", rho_l2},
                       {"rho_l1_estimate", rho_l1},
                       {"hermitian", a.is_hermitian()}};
  report["pass"] = true;
  report["wall_time_ms"] = timer.elapsed_ms();
  write_report(report, out);
  return kExitOk;
}

int cmd_density(const std::string& points_file, const std::string& lattice,
                double extent, std::vector<double> radii, double center_half_width,
                int per_side, const std::string& csv, const std::string& out) {
  Timer timer;
  const auto ps = resolve_point_set(points_file, lattice, extent);
  if (radii.empty()) radii = {10.0, 20.0, 40.0};
  if (center_half_width < 0.0)
    center_half_width = std::max(0.0, (extent - *std::max_element(radii.begin(),
                                                                  radii.end())) /
                                          std::sqrt(2.0));
  const auto rep =
      density::lower_density(ps, radii, {center_half_width, per_side});
  json curve = json::array();
  for (size_t i = 0; i < rep.radii.size(); ++i)
    curve.push_back({{"r", rep.radii[i]},
                     {"nu_minus", rep.nu_minus[i]},
                     {"estimate", rep.estimates[i]}});
  if (!csv.empty()) {
    std::vector<std::string> lines{"r,nu_minus,estimate"};
    for (size_t i = 0; i < rep.radii.size(); ++i)
      lines.push_back(std::to_string(rep.radii[i]) + "," +
                      std::to_string(rep.nu_minus[i]) + "," +
                      std::to_string(rep.estimates[i]));
    write_csv(lines, csv);
  }
  json report;
  report["subcommand"] = "density";
  report["equation_tag"] = "s3-lower-density";
  report["inputs"] = {{"points_file", points_file}, {"lattice", lattice},
                      {"extent", extent}, {"center_half_width", center_half_width},
                      {"per_side", per_side}};
  report["outputs"] = {{"curve", curve}, {"lower_density", rep.lower_density},
                       {"point_count", ps.points.size()}};
  report["pass"] = true;
  report["wall_time_ms"] = timer.elapsed_ms();
  write_report(report, out);
  return kExitOk;
}

int cmd_hap(int L, const std::string& window, const std::string& points_file,
            const std::string& lattice, double extent, const std::string& center,
            double R, const std::string& signal, std::uint64_t seed, double scale,
            const std::string& out) {
  Timer timer;
  std::mt19937_64 rng(seed);
  const CVec phi = windows::make_window(window, L);
  const CVec f = resolve_signal(signal, "", L, rng);
  const auto ps = resolve_point_set(points_file, lattice, extent);
  if (scale <= 0.0) scale = std::sqrt(double(L));
  const double residual =
      density::hap_residual(ps, phi, f, parse_point(center), R, scale);
  json report;
  report["subcommand"] = "hap";
  report["equation_tag"] = "s3-hap";
  report["inputs"] = {{"l", L}, {"window", window}, {"center", center}, {"r", R},
                      {"signal", signal}, {"seed", seed}, {"scale", scale}};
  report["outputs"] = {{"residual", residual},
                       {"relative_residual", residual / f.norm()}};
  report["pass"] = true;
  report["wall_time_ms"] = timer.elapsed_ms();
  write_report(report, out);
  return kExitOk;
}

int cmd_rs_bounds(int L, const std::string& window, const std::string& points_file,
                  const std::string& lattice, double extent, double r, double R,
                  const std::string& center, const std::string& out) {
  Timer timer;
  const CVec phi = windows::make_window(window, L);
  const auto ps = resolve_point_set(points_file, lattice, extent);
  const auto rep = density::rs_trace_bounds(ps, phi, r, R, parse_point(center), L);
  // (1-eps) card_grid / v(r) <= [card_lam / v(r+R)] [v(r+R) / v(r)]
  const double vr = M_PI * r * r, vrR = M_PI * (r + R) * (r + R);
  const double chain_lhs = (1.0 - rep.epsilon_witness) * rep.card_grid / vr;
  const double chain_rhs = (double(rep.card_lam) / vrR) * (vrR / vr);
  const bool pass = chain_lhs <= chain_rhs + 1e-9 && rep.eig_min >= -1e-10 &&
                    rep.eig_max <= 1.0 + 1e-10;
  json report;
  report["subcommand"] = "rs-bounds";
  report["equation_tag"] = "thm4-rs-trace";
  report["inputs"] = {{"l", L}, {"window", window}, {"r", r}, {"big_r", R},
                      {"center", center}};
  report["outputs"] = {{"trace_t", rep.trace_T},
                       {"card_lam", rep.card_lam},
                       {"card_grid", rep.card_grid},
                       {"epsilon_witness", rep.epsilon_witness},
                       {"eig_min", rep.eig_min},
                       {"eig_max", rep.eig_max},
                       {"chain_lhs", chain_lhs},
                       {"chain_rhs", chain_rhs}};
  report["pass"] = pass;
  report["wall_time_ms"] = timer.elapsed_ms();
  write_report(report, out);
  return pass ? kExitOk : kExitNumerical;
}

int cmd_modnorm(int L, const std::string& signal, const std::string& signal_file,
                const std::string& weight, const std::string& gamma_window,
                std::uint64_t seed, const std::string& out) {
  Timer timer;
  std::mt19937_64 rng(seed);
  const CVec f = resolve_signal(signal, signal_file, L, rng);
  const CVec gw = gamma_window.empty() ? modspace::default_gamma_window(L)
                                       : windows::make_window(gamma_window, L);
  const auto w = parse_weight(weight);
  const double norm = modspace::m1v_norm(f, w, gw / gw.norm());
  json report;
  report["subcommand"] = "modnorm";
  report["equation_tag"] = "eq13-m1v";
  report["inputs"] = {{"l", L}, {"signal", signal}, {"weight", weight},
                      {"gamma_window", gamma_window}, {"seed", seed}};
  report["outputs"] = {{"m1v_norm", norm}};
  report["pass"] = true;
  report["wall_time_ms"] = timer.elapsed_ms();
  write_report(report, out);
  return kExitOk;
}

int cmd_heisenberg_check(int L, int a, int b, int N, std::uint64_t seed,
                         const std::string& out) {
  Timer timer;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-5, 5);
  auto random_elem = [&]() {
    return heisenberg::HeisenbergElement{{coord(rng)}, {coord(rng)}, coord(rng)};
  };

  bool group_ok = true;
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_elem(), y = random_elem(), z = random_elem();
    const auto lhs = heisenberg::h_mul(heisenberg::h_mul(x, y), z);
    const auto rhs = heisenberg::h_mul(x, heisenberg::h_mul(y, z));
    if (!(lhs == rhs)) group_ok = false;
    if (!(heisenberg::h_mul(x, heisenberg::h_inverse(x)) == heisenberg::h_identity(1)))
      group_ok = false;
    const auto comm = heisenberg::h_mul(
        heisenberg::h_mul(x, y),
        heisenberg::h_mul(heisenberg::h_inverse(x), heisenberg::h_inverse(y)));
    if (!heisenberg::h_is_central(comm)) group_ok = false;
  }

  double pi_residual = 0.0;
  for (int trial = 0; trial < 25; ++trial) {
    const auto x = random_elem(), y = random_elem();
    const CMat lhs = heisenberg::pi_rep(heisenberg::h_mul(x, y), L, a, b);
    const CMat rhs =
        heisenberg::pi_rep(x, L, a, b) * heisenberg::pi_rep(y, L, a, b);
    pi_residual = std::max(pi_residual, (lhs - rhs).cwiseAbs().maxCoeff());
  }

  // ab/L = p/q in lowest terms; pi(0,0,q) must be the identity.
  const long g = std::gcd(long(a) * b, long(L));
  const long q = L / g;
  const CMat central =
      heisenberg::pi_rep({{0}, {0}, q}, L, a, b) - CMat::Identity(L, L);
  const double kernel_residual = central.cwiseAbs().maxCoeff();

  const double gamma = 1.0 / double(N);
  const double delta = 0.37;
  double sigma_residual = 0.0, unitary_residual = 0.0;
  for (int trial = 0; trial < 25; ++trial) {
    const auto x = random_elem(), y = random_elem();
    const CMat lhs =
        heisenberg::sigma_rep_matrix(gamma, delta, heisenberg::h_mul(x, y), N);
    const CMat rhs = heisenberg::sigma_rep_matrix(gamma, delta, x, N) *
                     heisenberg::sigma_rep_matrix(gamma, delta, y, N);
    sigma_residual = std::max(sigma_residual, (lhs - rhs).cwiseAbs().maxCoeff());
    const CVec c = windows::random_signal(N, rng);
    unitary_residual = std::max(
        unitary_residual,
        std::abs(heisenberg::sigma_rep_apply(gamma, delta, x, c).norm() - c.norm()));
  }

  const bool pass = group_ok && pi_residual <= 1e-12 && kernel_residual <= 1e-14 &&
                    sigma_residual <= 1e-12 && unitary_residual <= 1e-12;
  json report;
  report["subcommand"] = "heisenberg-check";
  report["equation_tag"] = "eq6-eq15-eq25";
  report["inputs"] = {{"l", L}, {"a", a}, {"b", b}, {"n", N}, {"seed", seed}};
  report["outputs"] = {{"group_axioms_ok", group_ok},
                       {"pi_homomorphism_residual", pi_residual},
                       {"kernel_residual", kernel_residual},
                       {"central_order_q", q},
                       {"sigma_homomorphism_residual", sigma_residual},
                       {"sigma_unitarity_residual", unitary_residual}};
  report["tolerances"] = {{"homomorphism", 1e-12}, {"kernel", 1e-14}};
  report["pass"] = pass;
  report["wall_time_ms"] = timer.elapsed_ms();
  write_report(report, out);
  return pass ? kExitOk : kExitNumerical;
}

}  // namespace

int run(const std::vector<std::string>& argv) {
  CLI::App app{"Finite-model time-frequency analysis toolkit"};
  app.require_subcommand(1);

  std::string out;
  app.add_option("--out", out, "Report path (default stdout)");
  std::uint64_t seed = 12345;
  app.add_option("--seed", seed, "Seed for randomized checks");

  int L = 16, a = 2, b = 2, N = 8, radius = 16, power_n = 32, max_terms = 500,
      per_side = 21;
  double gamma = 0.5, tol = 1e-10, extent = 60.0, R = 3.0, r = 3.0,
         center_half_width = -1.0, scale = -1.0;
  std::string window = "gaussian", signal = "random", signal_file, window_file, psi,
      seq_text, points_file, lattice, center = "0,0", weight = "const", gamma_window,
      csv;
  std::vector<double> eps_list, radii;

  auto* c_stft = app.add_subcommand("stft", "Windowed transform round trip");
  c_stft->add_option("--L", L)->required();
  c_stft->add_option("--window", window);
  c_stft->add_option("--signal", signal);
  c_stft->add_option("--signal-file", signal_file);
  c_stft->add_option("--csv", csv);

  auto* c_fb = app.add_subcommand("frame-bounds", "Frame operator extreme eigenvalues");
  c_fb->add_option("--L", L)->required();
  c_fb->add_option("--a", a)->required();
  c_fb->add_option("--b", b)->required();
  c_fb->add_option("--window", window);
  c_fb->add_option("--window-file", window_file);

  auto* c_dual = app.add_subcommand("dual-window", "Canonical dual window");
  c_dual->add_option("--L", L)->required();
  c_dual->add_option("--a", a)->required();
  c_dual->add_option("--b", b)->required();
  c_dual->add_option("--window", window);
  c_dual->add_option("--window-file", window_file);

  auto* c_jan = app.add_subcommand("janssen", "Adjoint-lattice operator expansion");
  c_jan->add_option("--L", L)->required();
  c_jan->add_option("--a", a)->required();
  c_jan->add_option("--b", b)->required();
  c_jan->add_option("--window", window);
  c_jan->add_option("--psi", psi);

  auto* c_probe = app.add_subcommand("trace-probe", "Resolvent density probe");
  c_probe->add_option("--L", L)->required();
  c_probe->add_option("--a", a)->required();
  c_probe->add_option("--b", b)->required();
  c_probe->add_option("--window", window);
  c_probe->add_option("--eps", eps_list);

  auto* c_inv = app.add_subcommand("twisted-invert", "l1 inversion in the twisted algebra");
  c_inv->add_option("--gamma", gamma)->required();
  c_inv->add_option("--seq", seq_text)->required();
  c_inv->add_option("--tol", tol);
  c_inv->add_option("--max-terms", max_terms);

  auto* c_rho = app.add_subcommand("spectral-radius", "l2 and l1 spectral radius estimates");
  c_rho->add_option("--gamma", gamma)->required();
  c_rho->add_option("--seq", seq_text)->required();
  c_rho->add_option("--R", radius);
  c_rho->add_option("--power-n", power_n);

  auto* c_den = app.add_subcommand("density", "Beurling lower density");
  c_den->add_option("--points-file", points_file);
  c_den->add_option("--lattice", lattice);
  c_den->add_option("--extent", extent);
  c_den->add_option("--radii", radii);
  c_den->add_option("--center-half-width", center_half_width);
  c_den->add_option("--per-side", per_side);
  c_den->add_option("--csv", csv);

  auto* c_hap = app.add_subcommand("hap", "Local approximation residual");
  c_hap->add_option("--L", L)->required();
  c_hap->add_option("--window", window);
  c_hap->add_option("--points-file", points_file);
  c_hap->add_option("--lattice", lattice);
  c_hap->add_option("--extent", extent);
  c_hap->add_option("--center", center);
  c_hap->add_option("--R", R);
  c_hap->add_option("--signal", signal);
  c_hap->add_option("--scale", scale);

  auto* c_rs = app.add_subcommand("rs-bounds", "Projection trace vs. atom count");
  c_rs->add_option("--L", L)->required();
  c_rs->add_option("--window", window);
  c_rs->add_option("--points-file", points_file);
  c_rs->add_option("--lattice", lattice);
  c_rs->add_option("--extent", extent);
  c_rs->add_option("--r", r);
  c_rs->add_option("--R", R);
  c_rs->add_option("--center", center);

  auto* c_mod = app.add_subcommand("modnorm", "Weighted modulation norm");
  c_mod->add_option("--L", L)->required();
  c_mod->add_option("--signal", signal);
  c_mod->add_option("--signal-file", signal_file);
  c_mod->add_option("--weight", weight);
  c_mod->add_option("--gamma-window", gamma_window);

  auto* c_heis = app.add_subcommand("heisenberg-check", "Group law and representation checks");
  c_heis->add_option("--L", L);
  c_heis->add_option("--a", a);
  c_heis->add_option("--b", b);
  c_heis->add_option("--N", N);

  // Global options (--out, --seed) live on the parent; let them match there.
  for (CLI::App* sub : app.get_subcommands(std::function<bool(CLI::App*)>(
           [](CLI::App*) { return true; })))
    sub->fallthrough();

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (c_stft->parsed())
      return cmd_stft(L, window, signal, signal_file, seed, csv, out);
    if (c_fb->parsed()) return cmd_frame_bounds(L, a, b, window, window_file, out);
    if (c_dual->parsed())
      return cmd_dual_window(L, a, b, window, window_file, seed, out);
    if (c_jan->parsed()) return cmd_janssen(L, a, b, window, psi, out);
    if (c_probe->parsed()) return cmd_trace_probe(L, a, b, window, eps_list, out);
    if (c_inv->parsed())
      return cmd_twisted_invert(gamma, seq_text, tol, max_terms, out);
    if (c_rho->parsed())
      return cmd_spectral_radius(gamma, seq_text, radius, power_n, out);
    if (c_den->parsed())
      return cmd_density(points_file, lattice, extent, radii, center_half_width,
                         per_side, csv, out);
    if (c_hap->parsed())
      return cmd_hap(L, window, points_file, lattice, extent, center, R, signal,
                     seed, scale, out);
    if (c_rs->parsed())
      return cmd_rs_bounds(L, window, points_file, lattice, extent, r, R, center, out);
    if (c_mod->parsed())
      return cmd_modnorm(L, signal, signal_file, weight, gamma_window, seed, out);
    if (c_heis->parsed()) return cmd_heisenberg_check(L, a, b, N, seed, out);
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace tfg::cli
