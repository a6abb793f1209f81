#ifndef TFGABOR_WINDOWS_HPP
#define TFGABOR_WINDOWS_HPP

#include <random>
#include <string>
#include <vector>

#include "tfgabor/types.hpp"

namespace tfg::windows {

/// Named window generators: "delta", "twopoint", "box:N", "gaussian:WIDTH".
/// "box(N)" / "gaussian(W)" spellings are accepted too.
CVec make_window(const std::string& spec, int L);

/// The full built-in family at a given length (box width 3, gaussian width L/4).
std::vector<std::pair<std::string, CVec>> builtin_family(int L);

/// Complex standard Gaussian samples, seeded.
CVec random_signal(int L, std::mt19937_64& rng);

/// Reads one sample per line as "re,im".
CVec read_window_file(const std::string& path);

}  // namespace tfg::windows

#endif
