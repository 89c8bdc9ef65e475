#pragma once

#include <vector>

#include "phasetrop/hahn.hpp"

namespace phasetrop {

// Level alpha and nonzero phase vector B.
struct PhasePoint {
    Exponent level;
    std::vector<Coeff> phase;

    friend bool operator==(const PhasePoint&, const PhasePoint&) = default;
};

ExtExponent sup_norm(const std::vector<HahnScalar>& z);
PhasePoint vector_initial_form(const std::vector<HahnScalar>& z);
PhasePoint graded_scalar_action(const GradedMonomial& m, const PhasePoint& p);

}  // namespace phasetrop
