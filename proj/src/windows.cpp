#include "tfgabor/windows.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace tfg::windows {

namespace {

bool parse_param(const std::string& spec, const std::string& name, double* value) {
  if (spec.rfind(name, 0) != 0) return false;
  std::string rest = spec.substr(name.size());
  if (rest.empty()) {
    *value = -1.0;  // caller applies its default
    return true;
  }
  if (rest.front() == ':')
    rest = rest.substr(1);
  else if (rest.front() == '(' && rest.back() == ')')
    rest = rest.substr(1, rest.size() - 2);
  else
    return false;
  *value = std::stod(rest);
  return true;
}

}  // namespace

CVec make_window(const std::string& spec, int L) {
  if (L < 1) throw std::invalid_argument("make_window: L < 1");
  CVec w = CVec::Zero(L);
  double param = -1.0;
  if (spec == "delta") {
    w[0] = 1.0;
  } else if (spec == "twopoint") {
    if (L < 2) throw std::invalid_argument("make_window: twopoint needs L >= 2");
    w[0] = w[1] = 1.0 / std::sqrt(2.0);
  } else if (parse_param(spec, "box", &param)) {
    const int n = param < 0 ? 3 : int(std::lround(param));
    if (n < 1 || n > L) throw std::invalid_argument("make_window: bad box width");
    for (int t = 0; t < n; ++t) w[t] = 1.0 / std::sqrt(double(n));
  } else if (parse_param(spec, "gaussian", &param)) {
    const double width = param < 0 ? double(L) / 4.0 : param;
    if (width <= 0.0) throw std::invalid_argument("make_window: bad gaussian width");
    for (int t = 0; t < L; ++t) {
      const double u = (double(t) - double(L) / 2.0) / width;
      w[t] = std::exp(-M_PI * u * u);
    }
  } else {
    throw std::invalid_argument("make_window: unknown window '" + spec + "'");
  }
  return w;
}

std::vector<std::pair<std::string, CVec>> builtin_family(int L) {
  std::vector<std::string> names = {"delta", "twopoint", "box:3",
                                    "gaussian:" + std::to_string(L / 4.0)};
  std::vector<std::pair<std::string, CVec>> out;
  for (const auto& n : names) out.emplace_back(n, make_window(n, L));
  return out;
}

CVec random_signal(int L, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVec f(L);
  for (int i = 0; i < L; ++i) f[i] = Complex(gauss(rng), gauss(rng));
  return f;
}

CVec read_window_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open window file: " + path);
  std::vector<Complex> samples;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    double re = 0.0, im = 0.0;
    char comma = 0;
    if (!(ss >> re >> comma >> im) || comma != ',')
      throw std::invalid_argument("bad window file line: " + line);
    samples.emplace_back(re, im);
  }
  if (samples.empty()) throw std::invalid_argument("empty window file: " + path);
  CVec w(samples.size());
  for (size_t i = 0; i < samples.size(); ++i) w[i] = samples[i];
  return w;
}

}  // namespace tfg::windows
