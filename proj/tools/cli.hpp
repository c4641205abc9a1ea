#pragma once

#include "gkz/config.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace gkz::cli {

enum ExitCode : int {
  kOk = 0,
  kSchema = 2,
  kDimension = 3,
  kBudget = 4,
  kDegree = 5,
};

/// Runs the command line tool; argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// SVG drawing of a subdivision of a configuration of dimension 1 or 2.
std::string render_svg(const PointConfig& cfg, const MarkedSubdivision& s);

/// Faces of every cell by dimension, the fallback for configurations of dimension above 2.
std::string face_lattice_text(const PointConfig& cfg, const MarkedSubdivision& s);

}  // namespace gkz::cli
