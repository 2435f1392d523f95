#pragma once

#include <string>

#include "kurank2/arith.hpp"

namespace kurank2 {

enum class CoordinateMode { Euclidean, Hexagonal };

struct RenderSpec {
  CoordinateMode mode = CoordinateMode::Hexagonal;
  Int n_min = -4, n_max = 4;
  Int m_min = -4, m_max = 4;
  bool annotate = true;
};

// One <circle class="pt"> per lattice point of the window. Hexagonal mode
// uses x = 2n + m (the shear (1 0; 1/2 1) doubled) and a fixed integer row
// height for m.
std::string render_lattice_svg(const RenderSpec& spec);

}  // namespace kurank2
