#pragma once

#include <string>

#include "phasetrop/surface_layers.hpp"

namespace phasetrop {

// Graph of the tropical polynomial with marked bends, and a bar of the layer levels when given.
std::string tropical_svg(const TropicalPoly& trop, const LayerDecomposition* layers = nullptr);

}  // namespace phasetrop
