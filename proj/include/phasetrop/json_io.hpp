#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "phasetrop/initial_ideals.hpp"
#include "phasetrop/phase_space.hpp"
#include "phasetrop/sl2.hpp"
#include "phasetrop/surface_layers.hpp"

namespace phasetrop {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const ExtExponent& v);
Json to_json(const Coeff& c);  // [re, im] as exact strings
Json to_json(Complex z);       // [re, im]
Json to_json(const CMat2& m);  // [[z11, z12], [z21, z22]]
Json to_json(const PhasePoint& p);
Json to_json(const TropicalPoly& p);
Json to_json(const SL2TropPoint& p);
Json to_json(const LimitReport& r);
Json to_json(const FiberReport& f, const std::vector<std::string>& names);
Json to_json(const CriticalLevelReport& r, const std::vector<std::string>& names);
Json to_json(const LayerDecomposition& d);

}  // namespace phasetrop
