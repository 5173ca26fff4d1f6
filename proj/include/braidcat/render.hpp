#ifndef BRAIDCAT_RENDER_HPP
#define BRAIDCAT_RENDER_HPP

#include <string>

#include "braidcat/braid.hpp"
#include "braidcat/config.hpp"

namespace braidcat {

// Deterministic SVG emitters in the paper's figure style: boxes, dots,
// vertical lines and braid strands. Layout coordinates are fixed-point
// decimals; identical input yields byte-identical output.

std::string render_config_svg(const Configuration& X);
std::string render_braid_svg(const BraidWord& w);
// Box on the left, the canonical linearisation on the right.
std::string render_linearisation_svg(const Configuration& X);

}  // namespace braidcat

#endif
