#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vpart/lattice.hpp"

namespace vpart::cli {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 verification mismatch, 2 invalid input (error JSON on err).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// "x,y", optionally wrapped in () or []. Throws InvalidInput.
Vec2 parse_point(const std::string& text);

}  // namespace vpart::cli
