#pragma once

#include <vector>

#include "phasetrop/valued_poly.hpp"

namespace phasetrop {

struct LiftResult {
    HahnScalar root;
    ExtExponent residual;  // valuation of f(root)
    int steps = 0;
};

// Refines theta*t^alpha to an approximate root of a univariate f by leading-term Newton steps
// until the residual valuation is at most nu_alpha(f) - precision.
LiftResult lift_hypersurface_root(const ValuedPoly& f, const Exponent& alpha, const Coeff& theta, int precision);

// True iff every f in fs has valuation at most bound at z.
bool verify_point(const std::vector<ValuedPoly>& fs, const std::vector<HahnScalar>& z, const ExtExponent& bound);

}  // namespace phasetrop
