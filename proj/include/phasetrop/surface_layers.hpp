#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phasetrop/initial_ideals.hpp"

namespace phasetrop {

// x1*x4 - x2*x3 in four variables.
ValuedPoly det_poly();
ComplexPoly det_residue();

// Quotient F / D when D divides F exactly.
std::optional<ComplexPoly> divide_exact(const ComplexPoly& f, const ComplexPoly& d);

// Removes multiples of det - 1 until no positive-level initial form lies in <det>.
ValuedPoly det_free_reduce(const ValuedPoly& f);

// Coefficients of the tilde-reduced polynomial truncated to their leading monomials.
ValuedPoly hat_simplify(const ValuedPoly& f);

struct LayerLevel {
    Exponent level;
    FiberReport fiber;
    int min_degree;  // smallest degree among the leading blocks
    int max_degree;
};

struct LayerInterval {
    Exponent from;
    std::optional<Exponent> to;  // nullopt: +infinity
    Exponent sample;
    FiberReport fiber;
    int degree;
};

struct LayerDecomposition {
    ValuedPoly poly;
    std::vector<LayerLevel> levels;        // first entry is level 0
    std::vector<LayerInterval> intervals;  // intervals[i] starts at levels[i]
    std::vector<int> degrees;              // degree of each interval ideal
    bool generic = true;
    bool empty_base = false;  // the level 0 fiber is empty
    std::vector<std::string> tags;

    std::vector<Exponent> level_values() const;
};

LayerDecomposition layer_decomposition(const ValuedPoly& f);

struct Realization {
    ValuedPoly poly;
    std::vector<Exponent> exponents;  // gamma_i
};

// sum_i t^gamma_i f_i with tropical roots exactly the given levels.
Realization realize_from_layers(const std::vector<ComplexPoly>& blocks, const std::vector<Exponent>& roots);

}  // namespace phasetrop
