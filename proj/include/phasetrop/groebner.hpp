#pragma once

#include <vector>

#include "phasetrop/complex_poly.hpp"

namespace phasetrop {

MonomialExp leading_monomial(const ComplexPoly& f, const MonomialOrder& order);
Coeff leading_coeff(const ComplexPoly& f, const MonomialOrder& order);

// Reduced Groebner basis (monic, sorted by leading monomial, largest first).
// The zero ideal gives an empty basis; the unit ideal gives {1}.
std::vector<ComplexPoly> groebner_basis(const std::vector<ComplexPoly>& gens, const MonomialOrder& order);

// Fully reduced remainder of f modulo a Groebner basis.
ComplexPoly normal_form(const ComplexPoly& f, const std::vector<ComplexPoly>& basis, const MonomialOrder& order);

}  // namespace phasetrop
